#pragma once

#include <array>
#include <utility>
#include <vector>

namespace tricap {

/// Small 2x2 matrix for deformation gradients and stresses.
struct Mat2 {
  double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

  double det() const { return a11 * a22 - a12 * a21; }
  Mat2 transpose() const { return {a11, a21, a12, a22}; }
  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(double s, const Mat2& a);

/// Inverse transpose; caller guarantees det != 0.
Mat2 inv_transpose(const Mat2& a);

struct SolidMaterial {
  double rho0 = 0.0;      // referential density
  double mu_s = 0.0;      // shear modulus
  double lambda_s = 0.0;  // first Lame parameter (>= 0)
};

/// Throws InvalidParameter for rho0 <= 0, mu_s <= 0 or lambda_s < 0.
SolidMaterial validate_solid(const SolidMaterial& m);

/// Uniform bilinear-quad mesh of the reference rectangle [0,lx] x [0,ly].
struct SolidMesh {
  int nex = 0, ney = 0;  // elements per direction
  double lx = 0.0, ly = 0.0;

  double hx() const { return lx / nex; }
  double hy() const { return ly / ney; }
  int nnx() const { return nex + 1; }
  int nny() const { return ney + 1; }
  int nnodes() const { return nnx() * nny(); }
  int node(int i, int j) const { return j * nnx() + i; }
};

SolidMesh make_solid_mesh(int nex, int ney, double lx, double ly);

/// Boundary data per side: roller supports (zero normal displacement, free
/// tangential slip and zero tangential traction) and dead-load tractions per
/// unit referential length.
struct SolidBCs {
  bool roller_left = false, roller_right = false;
  bool roller_bottom = false, roller_top = false;
  std::array<double, 2> traction_left = {0.0, 0.0};
  std::array<double, 2> traction_right = {0.0, 0.0};
  std::array<double, 2> traction_bottom = {0.0, 0.0};
  std::array<double, 2> traction_top = {0.0, 0.0};
};

/// Lagrangian state: nodal displacements and velocities (x,y interleaved),
/// plus the cached acceleration that velocity-Verlet reuses across steps.
struct SolidState {
  SolidMesh mesh;
  SolidMaterial mat;
  SolidBCs bcs;
  double time = 0.0;
  std::vector<double> u;    // 2 * nnodes
  std::vector<double> vel;  // 2 * nnodes
  std::vector<double> acc;  // empty until first advance
};

SolidState make_solid_state(const SolidMesh& mesh, const SolidMaterial& mat,
                            const SolidBCs& bcs);

/// Deformation gradient F = I + sum_a u_a x grad N_a at Gauss point
/// (qx, qy) in {0,1}^2 of element (ei, ej).  Throws Inverted if det F <= 0.
Mat2 deformation_gradient(const SolidState& s, int ei, int ej, int qx, int qy);

/// Compressible neo-Hookean first Piola-Kirchhoff stress
///   P = mu (F - F^-T) + lambda ln(det F) F^-T.
Mat2 first_piola(const Mat2& F, const SolidMaterial& m);

/// Strain energy density
///   W = mu/2 (tr(F^T F) - 2) - mu ln J + lambda/2 (ln J)^2,
/// with first_piola as its exact F-derivative.
double strain_energy_density(const Mat2& F, const SolidMaterial& m);

/// Nodal force vector: internal -int P : grad N over 2x2 Gauss points plus
/// the dead-load side tractions; roller components are zeroed.
std::vector<double> assemble_forces(const SolidState& s);

/// Dead-load part of the force vector alone (constant in time); its dot
/// product with a displacement increment is the exact external work.
std::vector<double> assemble_traction_forces(const SolidState& s);

/// Lumped nodal masses (size nnodes).
std::vector<double> lumped_mass(const SolidState& s);

/// Stability bound 0.8 * min(h) / c_p with c_p = sqrt((lambda + 2 mu)/rho0).
double solid_dt_bound(const SolidMesh& mesh, const SolidMaterial& mat);

/// One velocity-Verlet (explicit central-difference) step with lumped mass.
/// Throws CflViolation when dt exceeds solid_dt_bound.
SolidState advance_solid(const SolidState& s, double dt);

/// (kinetic, strain) energy pair.
std::pair<double, double> solid_energy(const SolidState& s);

}  // namespace tricap
