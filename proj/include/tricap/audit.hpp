#pragma once

#include <fstream>
#include <string>
#include <utility>

#include "tricap/solid.hpp"
#include "tricap/stepper.hpp"

namespace tricap {

/// One sampled row of the energy bookkeeping.  All energies are extensive
/// (already integrated over the domain); dissipation entries are rates.
struct EnergyLedger {
  double time = 0.0;
  double ke_fluid = 0.0;      // (rho/2) integral |v|^2
  double free_energy = 0.0;   // bulk + interfacial
  double wall_energy = 0.0;   // line integral of the wall energy density
  double ke_solid = 0.0;      // (1/2) integral rho0 |udot|^2
  double strain_solid = 0.0;  // integral of W
  double total = 0.0;         // sum of the five above
  double d_chem = 0.0;        // Sum_i (M/sigma_i) integral |grad mu_i|^2
  double d_visc = 0.0;        // viscous dissipation rate, see ledger()
};

/// Audits a fluid state.  ke_fluid, free_energy and wall_energy use the same
/// quadratures the solver's stability rests on, so the dissipation balance
/// closes to first order in dt:
///   - d_chem pairs the face gradients of mu with the diffusive flux
///     quadrature,
///   - d_visc is the face-difference form eta * (integral of |grad u|^2 +
///     |grad v|^2), the exact energy drain of the componentwise viscous
///     operator; on discretely divergence-free fields it coincides with the
///     symmetric-gradient form 2 eta |sym grad v|^2 up to O(h^2).
/// Ghosts must be synchronized (states returned by make_state/step are).
EnergyLedger ledger(const FluidState& s);

/// Audits a solid state (kinetic via the lumped mass, strain by quadrature).
EnergyLedger ledger(const SolidState& s);

/// Dissipation balance over one step:
///   r = (E2 - E1)/dt + (D1 + D2)/2,   D = d_chem + d_visc.
/// Returns (r, r/|E2|); the relative form falls back to r when E2 = 0.
std::pair<double, double> balance_residual(const EnergyLedger& a,
                                           const EnergyLedger& b, double dt);

/// Rate of working of the dead-load boundary tractions over a step,
/// f_ext . (u_after - u_before) / dt; exact for constant tractions.
double traction_power(const SolidState& before, const SolidState& after);

/// Interior max-norm residual of the capillary-tensor identity
///   div Sum_i (3/4) eps sigma_i grad c_i (x) grad c_i
///     = grad Psi - Sum_i avg(mu_i) grad c_i
/// with all terms discretized at second order on faces (diagonal tensor
/// entries at cells, off-diagonal at corners).  Converges as O(h^2) on smooth
/// fields.  c is copied and synchronized internally.
double identity_residual(const PhaseTriple& c, const MaterialParams& p,
                         const Grid& g, const WallWetting& w = {});

/// Streams ledger rows to CSV with 17 significant digits.
class LedgerWriter {
 public:
  /// Opens the file and writes the header row; throws IoFailure on failure.
  explicit LedgerWriter(const std::string& path);

  void append(const EnergyLedger& l, double residual, double residual_rel);

 private:
  std::ofstream out_;
  std::string path_;
};

}  // namespace tricap
