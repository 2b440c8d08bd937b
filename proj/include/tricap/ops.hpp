#pragma once

#include <vector>

#include "tricap/field.hpp"
#include "tricap/grid.hpp"

namespace tricap {

/// Ghost-fill rule, chosen per axis.
///
/// PrescribedNormalGradient sets ghosts so the one-sided difference across a
/// wall face reproduces a given outward-normal gradient: walking from the
/// interior cell to the ghost cell (outward), the value increases by h * hn.
/// The per-wall-cell gradients live in left/right (sized ny) and bottom/top
/// (sized nx); an empty vector means zero.
struct BoundaryRule {
  enum class Kind { Periodic, ZeroNormalGradient, PrescribedNormalGradient };

  Kind x = Kind::Periodic;
  Kind y = Kind::Periodic;
  std::vector<double> left, right, bottom, top;

  static BoundaryRule periodic() { return {}; }
  /// Periodic or zero-normal-gradient per axis, following the grid's kinds.
  static BoundaryRule natural(const Grid& g);
};

/// Fills the ghost margin of a cell-centered field.  Corners are filled by the
/// y pass re-using the x-pass ghosts, which is what the corner-averaging
/// stencils (tensor divergence, momentum advection) expect.
void sync_ghosts(ScalarField& f, const Grid& g, const BoundaryRule& rule);

/// Fills velocity ghosts and enforces wall conditions: normal faces on walls
/// are zeroed (no penetration), tangential ghosts reflect odd (no slip), and
/// periodic axes wrap, keeping the duplicated seam face in sync.
void sync_velocity(VectorField& vel, const Grid& g);

/// Per-component versions of sync_velocity, also used by the velocity solves.
void sync_u_faces(ScalarField& u, const Grid& g);
void sync_v_faces(ScalarField& v, const Grid& g);

/// Face-difference gradient of a cell field; second-order at face centers.
/// Ghosts of f must be synchronized.
VectorField gradient(const ScalarField& f, const Grid& g);

/// Divergence of a face field at cell centers (the exact adjoint of gradient
/// under the cell/face quadratures below).
ScalarField divergence(const VectorField& vel, const Grid& g);

/// Five-point Laplacian; identical to divergence(gradient(f)) by construction.
/// Ghosts of f must be synchronized.
ScalarField laplacian(const ScalarField& f, const Grid& g);

/// Cell quadrature: sum f * hx * hy over interior cells (compensated sum).
double integrate(const ScalarField& f, const Grid& g);

/// Face quadrature of a dot product of two face fields.  On a periodic axis
/// each physical face counts once; on a wall axis the boundary faces carry
/// half weight (their dual volume is half a cell).
double integrate_faces(const VectorField& a, const VectorField& b,
                       const Grid& g);

/// Arithmetic average of a cell field onto faces (ghosts must be synced).
VectorField to_faces(const ScalarField& f, const Grid& g);

/// Compensated (Kahan) accumulator used by the quadratures.
struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double get() const { return s; }
};

}  // namespace tricap
