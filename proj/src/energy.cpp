#include "tricap/energy.hpp"

#include <cmath>

#include "tricap/ops.hpp"

namespace tricap {

ScalarField bulk_density(const PhaseTriple& c, const MaterialParams& p) {
  const int nx = c.c1.nx(), ny = c.c1.ny();
  ScalarField out(nx, ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double ck = c[k](i, j);
        const double w = ck * (1.0 - ck);
        acc += 0.5 * p.sigma[k] * w * w;
      }
      out(i, j) = acc;
    }
  return out;
}

namespace {

/// Face quadrature of (3/8) eps sigma |grad c|^2 for one phase, interior
/// faces only on wall axes.
double gradient_energy(const ScalarField& c, double sigma,
                       const MaterialParams& p, const Grid& g) {
  const int nx = g.nx, ny = g.ny;
  const double coef = 0.375 * p.epsilon * sigma * g.hx * g.hy;
  KahanSum s;

  const int ix0 = g.bx == BoundaryKind::Wall ? 1 : 0;
  const int ix1 = nx;  // periodic: faces 0..nx-1 (face nx is the wrap copy)
  for (int j = 0; j < ny; ++j)
    for (int i = ix0; i < ix1; ++i) {
      const double gx = (c(i, j) - c(i - 1, j)) / g.hx;
      s.add(gx * gx);
    }

  const int jy0 = g.by == BoundaryKind::Wall ? 1 : 0;
  const int jy1 = ny;
  for (int j = jy0; j < jy1; ++j)
    for (int i = 0; i < nx; ++i) {
      const double gy = (c(i, j) - c(i, j - 1)) / g.hy;
      s.add(gy * gy);
    }

  return coef * s.get();
}

}  // namespace

double free_energy(const PhaseTriple& c, const MaterialParams& p,
                   const Grid& g) {
  const ScalarField bulk = bulk_density(c, p);
  double e = (12.0 / p.epsilon) * integrate(bulk, g);
  for (int k = 0; k < 3; ++k) e += gradient_energy(c[k], p.sigma[k], p, g);
  return e;
}

ScalarField bulk_derivative(const ScalarField& c, double sigma) {
  const int nx = c.nx(), ny = c.ny();
  ScalarField out(nx, ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const double ck = c(i, j);
      out(i, j) = sigma * ck * (1.0 - ck) * (1.0 - 2.0 * ck);
    }
  return out;
}

ScalarField variational_derivative(const ScalarField& c, double sigma,
                                   const MaterialParams& p, const Grid& g) {
  ScalarField out = bulk_derivative(c, sigma);
  const ScalarField lap = laplacian(c, g);
  const double a = 12.0 / p.epsilon;
  const double b = 0.75 * p.epsilon * sigma;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) out(i, j) = a * out(i, j) - b * lap(i, j);
  return out;
}

ScalarField lagrange_multiplier(const ScalarField& d1, const ScalarField& d2,
                                const ScalarField& d3,
                                const MaterialParams& p) {
  const int nx = d1.nx(), ny = d1.ny();
  const double w1 = 1.0 / p.sigma[0], w2 = 1.0 / p.sigma[1],
               w3 = 1.0 / p.sigma[2];
  const double wsum = w1 + w2 + w3;
  ScalarField out(nx, ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      out(i, j) =
          -(w1 * d1(i, j) + w2 * d2(i, j) + w3 * d3(i, j)) / wsum;
  return out;
}

ChemPotTriple chemical_potentials(const PhaseTriple& c,
                                  const MaterialParams& p, const Grid& g) {
  ChemPotTriple mu(g.nx, g.ny);
  ScalarField d1 = variational_derivative(c.c1, p.sigma[0], p, g);
  ScalarField d2 = variational_derivative(c.c2, p.sigma[1], p, g);
  ScalarField d3 = variational_derivative(c.c3, p.sigma[2], p, g);
  mu.beta = lagrange_multiplier(d1, d2, d3, p);

  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double b = mu.beta(i, j);
      mu.mu1(i, j) = d1(i, j) + b;
      mu.mu2(i, j) = d2(i, j) + b;
      mu.mu3(i, j) = d3(i, j) + b;
    }

  const BoundaryRule rule = BoundaryRule::natural(g);
  sync_ghosts(mu.mu1, g, rule);
  sync_ghosts(mu.mu2, g, rule);
  sync_ghosts(mu.mu3, g, rule);
  sync_ghosts(mu.beta, g, rule);
  return mu;
}

VectorField capillary_force(const PhaseTriple& c, const ChemPotTriple& mu,
                            const Grid& g) {
  VectorField f(g.nx, g.ny);
  for (int k = 0; k < 3; ++k) {
    const ScalarField& ck = c[k];
    const ScalarField& mk = mu[k];
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i <= g.nx; ++i)
        f.u(i, j) += 0.5 * (mk(i - 1, j) + mk(i, j)) *
                     (ck(i, j) - ck(i - 1, j)) / g.hx;
    for (int j = 0; j <= g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        f.v(i, j) += 0.5 * (mk(i, j - 1) + mk(i, j)) *
                     (ck(i, j) - ck(i, j - 1)) / g.hy;
  }
  return f;
}

ScalarField energy_density(const PhaseTriple& c, const MaterialParams& p,
                           const Grid& g) {
  ScalarField out = bulk_density(c, p);
  const double a = 12.0 / p.epsilon;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) out(i, j) *= a;

  for (int k = 0; k < 3; ++k) {
    const ScalarField& ck = c[k];
    const double coef = 0.375 * p.epsilon * p.sigma[k];
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const double gxl = (ck(i, j) - ck(i - 1, j)) / g.hx;
        const double gxr = (ck(i + 1, j) - ck(i, j)) / g.hx;
        const double gyb = (ck(i, j) - ck(i, j - 1)) / g.hy;
        const double gyt = (ck(i, j + 1) - ck(i, j)) / g.hy;
        out(i, j) += coef * (0.5 * (gxl * gxl + gxr * gxr) +
                             0.5 * (gyb * gyb + gyt * gyt));
      }
  }
  return out;
}

}  // namespace tricap
