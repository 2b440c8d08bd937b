#include "tricap/solid.hpp"

#include <cmath>

#include "tricap/errors.hpp"

namespace tricap {

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}

Mat2 operator*(double s, const Mat2& a) {
  return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
}

Mat2 inv_transpose(const Mat2& a) {
  const double d = a.det();
  return {a.a22 / d, -a.a21 / d, -a.a12 / d, a.a11 / d};
}

SolidMaterial validate_solid(const SolidMaterial& m) {
  if (!(m.rho0 > 0.0)) throw InvalidParameter("rho0");
  if (!(m.mu_s > 0.0)) throw InvalidParameter("mu_s");
  if (!(m.lambda_s >= 0.0)) throw InvalidParameter("lambda_s");
  return m;
}

SolidMesh make_solid_mesh(int nex, int ney, double lx, double ly) {
  if (nex < 1 || ney < 1) throw InvalidParameter("solid mesh elements");
  if (!(lx > 0.0) || !(ly > 0.0)) throw InvalidParameter("solid mesh extent");
  return {nex, ney, lx, ly};
}

SolidState make_solid_state(const SolidMesh& mesh, const SolidMaterial& mat,
                            const SolidBCs& bcs) {
  SolidState s;
  s.mesh = mesh;
  s.mat = validate_solid(mat);
  s.bcs = bcs;
  s.u.assign(2 * mesh.nnodes(), 0.0);
  s.vel.assign(2 * mesh.nnodes(), 0.0);
  return s;
}

namespace {

constexpr double kGauss = 0.57735026918962576;  // 1/sqrt(3)

// Shape-function gradients of the four bilinear nodes at reference point
// (xi, eta) in [-1,1]^2, mapped to physical coordinates.  Node order:
// (i,j), (i+1,j), (i+1,j+1), (i,j+1).
struct ShapeGrads {
  double dx[4];
  double dy[4];
};

ShapeGrads shape_grads(double xi, double eta, double hx, double hy) {
  ShapeGrads g;
  const double cx = 2.0 / hx / 4.0;  // d/dx = (2/hx) d/dxi, with the 1/4
  const double cy = 2.0 / hy / 4.0;
  g.dx[0] = -(1.0 - eta) * cx;
  g.dx[1] = (1.0 - eta) * cx;
  g.dx[2] = (1.0 + eta) * cx;
  g.dx[3] = -(1.0 + eta) * cx;
  g.dy[0] = -(1.0 - xi) * cy;
  g.dy[1] = -(1.0 + xi) * cy;
  g.dy[2] = (1.0 + xi) * cy;
  g.dy[3] = (1.0 - xi) * cy;
  return g;
}

void element_nodes(const SolidMesh& m, int ei, int ej, int out[4]) {
  out[0] = m.node(ei, ej);
  out[1] = m.node(ei + 1, ej);
  out[2] = m.node(ei + 1, ej + 1);
  out[3] = m.node(ei, ej + 1);
}

Mat2 def_grad_at(const SolidState& s, int ei, int ej, double xi, double eta) {
  int n[4];
  element_nodes(s.mesh, ei, ej, n);
  const ShapeGrads g = shape_grads(xi, eta, s.mesh.hx(), s.mesh.hy());
  Mat2 F = Mat2::identity();
  for (int a = 0; a < 4; ++a) {
    const double ux = s.u[2 * n[a]];
    const double uy = s.u[2 * n[a] + 1];
    F.a11 += ux * g.dx[a];
    F.a12 += ux * g.dy[a];
    F.a21 += uy * g.dx[a];
    F.a22 += uy * g.dy[a];
  }
  return F;
}

// Zero the force/velocity/acceleration components a roller side constrains
// (normal displacement fixed, tangential free).
void apply_rollers(const SolidState& s, std::vector<double>& vec) {
  const SolidMesh& m = s.mesh;
  if (s.bcs.roller_left)
    for (int j = 0; j < m.nny(); ++j) vec[2 * m.node(0, j)] = 0.0;
  if (s.bcs.roller_right)
    for (int j = 0; j < m.nny(); ++j) vec[2 * m.node(m.nex, j)] = 0.0;
  if (s.bcs.roller_bottom)
    for (int i = 0; i < m.nnx(); ++i) vec[2 * m.node(i, 0) + 1] = 0.0;
  if (s.bcs.roller_top)
    for (int i = 0; i < m.nnx(); ++i) vec[2 * m.node(i, m.ney) + 1] = 0.0;
}

}  // namespace

Mat2 deformation_gradient(const SolidState& s, int ei, int ej, int qx,
                          int qy) {
  const double xi = qx == 0 ? -kGauss : kGauss;
  const double eta = qy == 0 ? -kGauss : kGauss;
  const Mat2 F = def_grad_at(s, ei, ej, xi, eta);
  if (!(F.det() > 0.0)) throw Inverted(F.det());
  return F;
}

Mat2 first_piola(const Mat2& F, const SolidMaterial& m) {
  const double J = F.det();
  if (!(J > 0.0)) throw Inverted(J);
  const Mat2 Fit = inv_transpose(F);
  return (m.mu_s * (F - Fit)) + (m.lambda_s * std::log(J)) * Fit;
}

double strain_energy_density(const Mat2& F, const SolidMaterial& m) {
  const double J = F.det();
  if (!(J > 0.0)) throw Inverted(J);
  const double i1 =
      F.a11 * F.a11 + F.a12 * F.a12 + F.a21 * F.a21 + F.a22 * F.a22;
  const double lj = std::log(J);
  return 0.5 * m.mu_s * (i1 - 2.0) - m.mu_s * lj + 0.5 * m.lambda_s * lj * lj;
}

std::vector<double> assemble_traction_forces(const SolidState& s) {
  const SolidMesh& m = s.mesh;
  std::vector<double> f(2 * m.nnodes(), 0.0);
  auto add_edge = [&f](int n0, int n1, const std::array<double, 2>& t,
                       double len) {
    const double w = 0.5 * len;
    f[2 * n0] += w * t[0];
    f[2 * n0 + 1] += w * t[1];
    f[2 * n1] += w * t[0];
    f[2 * n1 + 1] += w * t[1];
  };
  for (int j = 0; j < m.ney; ++j) {
    add_edge(m.node(0, j), m.node(0, j + 1), s.bcs.traction_left, m.hy());
    add_edge(m.node(m.nex, j), m.node(m.nex, j + 1), s.bcs.traction_right,
             m.hy());
  }
  for (int i = 0; i < m.nex; ++i) {
    add_edge(m.node(i, 0), m.node(i + 1, 0), s.bcs.traction_bottom, m.hx());
    add_edge(m.node(i, m.ney), m.node(i + 1, m.ney), s.bcs.traction_top,
             m.hx());
  }
  return f;
}

std::vector<double> assemble_forces(const SolidState& s) {
  const SolidMesh& m = s.mesh;
  std::vector<double> f = assemble_traction_forces(s);
  const double detj = 0.25 * m.hx() * m.hy();  // weight 1 per Gauss point
  int n[4];
  for (int ej = 0; ej < m.ney; ++ej) {
    for (int ei = 0; ei < m.nex; ++ei) {
      element_nodes(m, ei, ej, n);
      for (int qy = 0; qy < 2; ++qy) {
        for (int qx = 0; qx < 2; ++qx) {
          const double xi = qx == 0 ? -kGauss : kGauss;
          const double eta = qy == 0 ? -kGauss : kGauss;
          const Mat2 F = def_grad_at(s, ei, ej, xi, eta);
          if (!(F.det() > 0.0)) throw Inverted(F.det());
          const Mat2 P = first_piola(F, s.mat);
          const ShapeGrads g = shape_grads(xi, eta, m.hx(), m.hy());
          for (int a = 0; a < 4; ++a) {
            f[2 * n[a]] -= detj * (P.a11 * g.dx[a] + P.a12 * g.dy[a]);
            f[2 * n[a] + 1] -= detj * (P.a21 * g.dx[a] + P.a22 * g.dy[a]);
          }
        }
      }
    }
  }
  apply_rollers(s, f);
  return f;
}

std::vector<double> lumped_mass(const SolidState& s) {
  const SolidMesh& m = s.mesh;
  std::vector<double> mass(m.nnodes(), 0.0);
  const double quarter = 0.25 * s.mat.rho0 * m.hx() * m.hy();
  int n[4];
  for (int ej = 0; ej < m.ney; ++ej) {
    for (int ei = 0; ei < m.nex; ++ei) {
      element_nodes(m, ei, ej, n);
      for (int a = 0; a < 4; ++a) mass[n[a]] += quarter;
    }
  }
  return mass;
}

double solid_dt_bound(const SolidMesh& mesh, const SolidMaterial& mat) {
  const double cp = std::sqrt((mat.lambda_s + 2.0 * mat.mu_s) / mat.rho0);
  return 0.8 * std::min(mesh.hx(), mesh.hy()) / cp;
}

SolidState advance_solid(const SolidState& s, double dt) {
  const double bound = solid_dt_bound(s.mesh, s.mat);
  if (dt > bound) throw CflViolation(dt, bound);
  const std::vector<double> mass = lumped_mass(s);
  const int nn = s.mesh.nnodes();

  SolidState out = s;
  apply_rollers(out, out.vel);
  if (out.acc.empty()) {
    const std::vector<double> f = assemble_forces(out);
    out.acc.assign(2 * nn, 0.0);
    for (int i = 0; i < nn; ++i) {
      out.acc[2 * i] = f[2 * i] / mass[i];
      out.acc[2 * i + 1] = f[2 * i + 1] / mass[i];
    }
  }
  for (int k = 0; k < 2 * nn; ++k)
    out.u[k] += dt * out.vel[k] + 0.5 * dt * dt * out.acc[k];
  const std::vector<double> f = assemble_forces(out);
  for (int i = 0; i < nn; ++i) {
    const double ax = f[2 * i] / mass[i];
    const double ay = f[2 * i + 1] / mass[i];
    out.vel[2 * i] += 0.5 * dt * (out.acc[2 * i] + ax);
    out.vel[2 * i + 1] += 0.5 * dt * (out.acc[2 * i + 1] + ay);
    out.acc[2 * i] = ax;
    out.acc[2 * i + 1] = ay;
  }
  apply_rollers(out, out.vel);
  out.time = s.time + dt;
  return out;
}

std::pair<double, double> solid_energy(const SolidState& s) {
  const SolidMesh& m = s.mesh;
  const std::vector<double> mass = lumped_mass(s);
  double ke = 0.0;
  for (int i = 0; i < m.nnodes(); ++i) {
    const double vx = s.vel[2 * i];
    const double vy = s.vel[2 * i + 1];
    ke += 0.5 * mass[i] * (vx * vx + vy * vy);
  }
  double strain = 0.0;
  const double detj = 0.25 * m.hx() * m.hy();
  for (int ej = 0; ej < m.ney; ++ej) {
    for (int ei = 0; ei < m.nex; ++ei) {
      for (int qy = 0; qy < 2; ++qy) {
        for (int qx = 0; qx < 2; ++qx) {
          const Mat2 F = deformation_gradient(s, ei, ej, qx, qy);
          strain += detj * strain_energy_density(F, s.mat);
        }
      }
    }
  }
  return {ke, strain};
}

}  // namespace tricap
