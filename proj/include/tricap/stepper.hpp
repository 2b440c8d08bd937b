#pragma once

#include "tricap/energy.hpp"
#include "tricap/field.hpp"
#include "tricap/grid.hpp"
#include "tricap/material.hpp"
#include "tricap/wetting.hpp"

namespace tricap {

/// Complete fluid state at one time level.  The dc caches are solver warm
/// starts; they ride along with the state but carry no physics.
struct FluidState {
  Grid grid;
  MaterialParams params;  // validated, sigma populated
  WallWetting wetting;
  double time = 0.0;
  PhaseTriple c;
  VectorField v;
  ScalarField p;

  ScalarField dc_cache1, dc_cache2;
};

/// Zero-initialized state on the given grid (c1 = 1, single phase).
FluidState make_state(const Grid& g, const MaterialParams& validated,
                      const WallWetting& w = {});

/// Advective stability bound 0.25 * min(h) / max|v| (infinite at rest).
double advective_dt_bound(const FluidState& s);

/// Capillary bound sqrt(rho h^3 / (2 pi gamma_max)) for the explicit surface
/// force; the binding restriction when the flow starts at rest.
double capillary_dt_bound(const Grid& g, const MaterialParams& p);

/// Auto step size: half the strictest of the bounds above.
double auto_dt(const FluidState& s);

/// One semi-implicit phase update at frozen velocity dt:
///   - explicit conservative advection div(v * avg(c)),
///   - explicit stabilized bulk with per-phase shift S_i = (24/eps) sigma_i,
///   - implicit interfacial diffusion (one SPD operator for both solves since
///     S_i / sigma_i and (M/sigma_i)(3/4) eps sigma_i are phase independent),
///   - finalization in flux form, so per-phase mass is conserved to round-off.
/// Phases 1 and 2 are solved; phase 3 closes the partition of unity exactly.
/// Throws CflViolation when dt exceeds the advective bound.
PhaseTriple phase_step(FluidState& s, double dt);

/// Provisional velocity (no pressure): explicit conservative momentum
/// advection, explicit capillary force from the updated phases, implicit
/// viscosity via a componentwise Helmholtz solve.
VectorField momentum_step(const FluidState& s, const PhaseTriple& c_new,
                          const ChemPotTriple& mu_new, double dt);

/// Projection:  lap(phi) = (rho/dt) div v*,  v -= (dt/rho) grad phi.
/// phi warm-starts from its previous value and returns as the new pressure.
/// The projected field satisfies div v = 0 to the Poisson solve tolerance.
void pressure_project(const Grid& g, const MaterialParams& p, double dt,
                      VectorField& vel, ScalarField& phi);

/// Full step: phase update, then momentum update with the new phases, then
/// projection.  Returns the advanced state with time += dt.
FluidState step(const FluidState& s, double dt);

}  // namespace tricap
