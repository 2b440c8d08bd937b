#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "tricap/field.hpp"
#include "tricap/grid.hpp"
#include "tricap/material.hpp"
#include "tricap/ops.hpp"

namespace th {

using namespace tricap;

constexpr double kPi = 3.14159265358979323846;

inline Grid box(int n, BoundaryKind bx = BoundaryKind::Periodic,
                BoundaryKind by = BoundaryKind::Periodic) {
  return make_grid(n, n, 1.0, 1.0, bx, by);
}

inline MaterialParams mat(double g12, double g13, double g23, double eps,
                          double M = 1e-3, double rho = 1.0,
                          double eta = 1e-2) {
  MaterialParams p;
  p.gamma12 = g12;
  p.gamma13 = g13;
  p.gamma23 = g23;
  p.epsilon = eps;
  p.mobility = M;
  p.rho = rho;
  p.eta = eta;
  return validate(p);
}

/// Interior cells from f(x, y) at cell centers; ghosts left zero.
inline ScalarField fill_cells(const Grid& g,
                              const std::function<double(double, double)>& f) {
  ScalarField out(g.nx, g.ny);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) out(i, j) = f(g.xc(i), g.yc(j));
  return out;
}

/// Interior plus the one-cell ghost ring from the analytic formula, for
/// exercising stencils without any ghost synchronization.
inline ScalarField fill_extended(
    const Grid& g, const std::function<double(double, double)>& f) {
  ScalarField out(g.nx, g.ny);
  for (int j = -1; j <= g.ny; ++j)
    for (int i = -1; i <= g.nx; ++i) out(i, j) = f(g.xc(i), g.yc(j));
  return out;
}

/// Deterministic uniform doubles; the fixed mapping keeps values identical
/// across platforms.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(unsigned long long s) : eng(s) {}
  double operator()(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
  }
};

/// Smooth periodic phase triple strictly inside (0,1), summing to one.
inline PhaseTriple smooth_phases(const Grid& g) {
  PhaseTriple c(g.nx, g.ny);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double x = g.xc(i), y = g.yc(j);
      const double a =
          0.34 + 0.10 * std::sin(2 * kPi * x) * std::cos(2 * kPi * y);
      const double b =
          0.33 + 0.08 * std::cos(2 * kPi * x) * std::sin(4 * kPi * y + 0.5);
      c.c1(i, j) = a;
      c.c2(i, j) = b;
      c.c3(i, j) = 1.0 - a - b;
    }
  return c;
}

inline double rel_err(double got, double want) {
  const double s = std::abs(want);
  return s > 0.0 ? std::abs(got - want) / s : std::abs(got);
}

}  // namespace th
