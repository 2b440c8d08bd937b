#pragma once

#include <array>

namespace tricap {

/// Fluid material parameters for the three-phase mixture.
///
/// gamma12/gamma13/gamma23 are the pairwise interface energies, epsilon the
/// interface thickness scale, mobility the (degenerate-free) phase mobility M,
/// rho the common density and eta the common dynamic viscosity.  sigma[i] holds
/// the per-phase spreading coefficients derived by validate(); they are zero
/// until then.
struct MaterialParams {
  double gamma12 = 0.0;
  double gamma13 = 0.0;
  double gamma23 = 0.0;
  double epsilon = 0.0;
  double mobility = 0.0;
  double rho = 0.0;
  double eta = 0.0;
  std::array<double, 3> sigma = {0.0, 0.0, 0.0};
};

/// Per-phase spreading coefficients from pairwise interface energies:
///   sigma1 = g12 + g13 - g23 (and cyclic).
/// Throws TotalSpreading if any coefficient is not strictly positive, since the
/// free energy loses pointwise coercivity there.
std::array<double, 3> spreading_coefficients(double g12, double g13, double g23);

/// Validates parameters and returns a copy with sigma[] populated.
///
/// gamma_ij, epsilon and rho must be strictly positive; mobility and eta must
/// be nonnegative (the conservative limits M = 0 and eta = 0 are legal and are
/// exercised by the transport-only tests).  Throws InvalidParameter naming the
/// offending field, or TotalSpreading.
MaterialParams validate(const MaterialParams& p);

}  // namespace tricap
