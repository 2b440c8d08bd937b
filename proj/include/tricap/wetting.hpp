#pragma once

#include <array>
#include <vector>

#include "tricap/field.hpp"
#include "tricap/grid.hpp"
#include "tricap/material.hpp"
#include "tricap/ops.hpp"

namespace tricap {

/// Wall energy density gamma_sf(c) = Sum_i gamma_si g(c_i) with the monotone
/// cubic interpolation g(c) = c^2 (3 - 2c), g(0) = 0, g(1) = 1.
struct WallEnergyModel {
  std::array<double, 3> gamma_s = {0.0, 0.0, 0.0};

  static double g(double c) { return c * c * (3.0 - 2.0 * c); }
  static double dg(double c) { return 6.0 * c * (1.0 - c); }

  double density(double c1, double c2, double c3) const {
    return gamma_s[0] * g(c1) + gamma_s[1] * g(c2) + gamma_s[2] * g(c3);
  }

  bool trivial() const {
    return gamma_s[0] == 0.0 && gamma_s[1] == 0.0 && gamma_s[2] == 0.0;
  }
};

/// Per-side wall energies.  Sides on a periodic axis are ignored.
struct WallWetting {
  WallEnergyModel left, right, bottom, top;
};

/// Pointwise wetting flux, the outward-normal phase gradient prescribed at a
/// wall:  h_i = -(4 / (3 eps sigma_i)) * dgamma_sf/dc_i
///            = -(4 / (3 eps sigma_i)) * gamma_si * 6 c_i (1 - c_i).
/// This is the natural boundary condition of the wall energy: used as the
/// ghost rule it makes the discrete chemical potential at wall cells the exact
/// gradient of bulk + interface + wall energy, so the audit closes.
double wetting_flux(double ci, double gamma_si, double sigma_i, double eps);

/// Total wall energy: line quadrature of gamma_sf along each wall side using
/// the wall-adjacent cell values.
double wall_energy(const PhaseTriple& c, const WallWetting& w, const Grid& g);

/// Ghost rule for one phase: periodic on periodic axes, prescribed wetting
/// gradient on wall axes (zero gradient where the side's energies are all
/// zero).  Uses the current wall-cell values of c.
BoundaryRule phase_rule(const Grid& g, const WallWetting& w,
                        const PhaseTriple& c, int phase,
                        const MaterialParams& p);

/// Synchronizes all three phase fields with their wetting ghost rules.
void sync_phases(PhaseTriple& c, const Grid& g, const WallWetting& w,
                 const MaterialParams& p);

}  // namespace tricap
