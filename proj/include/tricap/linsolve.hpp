#pragma once

#include <functional>

#include "tricap/field.hpp"
#include "tricap/grid.hpp"

namespace tricap {

struct CgResult {
  int iterations = 0;
  double rel_residual = 0.0;
};

/// Half-open index range of the unknowns within a (possibly face-sized) field.
struct IndexBox {
  int i0 = 0, i1 = 0, j0 = 0, j1 = 0;
};

/// Unpreconditioned conjugate gradients.  The operator apply may synchronize
/// ghosts of its input in place (the solver only guarantees the box interior).
/// x carries the warm start in and the solution out; entries outside the box
/// are never touched by the solver itself.  Convergence criterion is
/// ||r||_2 <= tol * ||b||_2 over the box; a zero right-hand side short-circuits
/// to x = 0.  Throws LinearSolveFailure(label) after max_iter.
CgResult cg(const std::function<void(ScalarField&, ScalarField&)>& apply,
            const IndexBox& box, const ScalarField& b, ScalarField& x,
            double tol, int max_iter, const char* label);

/// Pressure Poisson solve  -lap(phi) = -rhs  with the grid's natural boundary
/// rules (periodic / zero normal flux).  The right-hand side is projected onto
/// mean zero to keep the singular system consistent, and phi returns mean-free.
/// Relative tolerance 1e-10, iteration cap 10*(nx+ny).
CgResult solve_poisson(const Grid& g, const ScalarField& rhs, ScalarField& phi);

/// Phase-update solve  (I + a*(-lap) + b*lap^2) x = rhs  on cell centers with
/// homogeneous natural boundary rules on both the field and its Laplacian.
CgResult solve_phase_operator(const Grid& g, double a, double b,
                              const ScalarField& rhs, ScalarField& x,
                              double tol, const char* label);

/// Velocity Helmholtz solve  (I - coef*lap) x = b  for one staggered
/// component (comp 0: x-faces, comp 1: y-faces).  Wall axes pin the normal
/// boundary faces at zero and reflect tangential ghosts odd (no slip);
/// periodic axes wrap the seam face.
CgResult solve_velocity_helmholtz(const Grid& g, int comp, double coef,
                                  const ScalarField& b, ScalarField& x,
                                  double tol, const char* label);

}  // namespace tricap
