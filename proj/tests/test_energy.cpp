#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "tricap/energy.hpp"
#include "tricap/ops.hpp"

using namespace tricap;
using th::kPi;

namespace {

PhaseTriple uniform_phases(const Grid& g, double a, double b, double c) {
  PhaseTriple out(g.nx, g.ny);
  out.c1.fill(a);
  out.c2.fill(b);
  out.c3.fill(c);
  return out;
}

}  // namespace

TEST_SUITE("energy") {

TEST_CASE("bulk density: pure phase and frozen values") {
  const Grid g = th::box(4);
  const MaterialParams equal = th::mat(1.0, 1.0, 1.0, 0.1);  // sigma = (1,1,1)

  ScalarField b = bulk_density(uniform_phases(g, 1.0, 0.0, 0.0), equal);
  CHECK(b.max_abs() == 0.0);

  b = bulk_density(uniform_phases(g, 0.5, 0.5, 0.0), equal);
  CHECK(b(0, 0) == 0.0625);  // 2 * (1/2)(1/16)

  const MaterialParams mixed = th::mat(2.0, 3.0, 4.0, 0.1);  // sigma = (1,3,5)
  const double third = 1.0 / 3.0;
  b = bulk_density(uniform_phases(g, third, third, third), mixed);
  CHECK(b(1, 2) == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("free energy of a uniform pure phase is zero") {
  const Grid g = th::box(8);
  const MaterialParams p = th::mat(1.0, 1.0, 1.0, 0.1);
  PhaseTriple c = uniform_phases(g, 0.0, 1.0, 0.0);
  sync_ghosts(c.c1, g, BoundaryRule::periodic());
  sync_ghosts(c.c2, g, BoundaryRule::periodic());
  sync_ghosts(c.c3, g, BoundaryRule::periodic());
  CHECK(free_energy(c, p, g) == 0.0);
}

TEST_CASE("free energy of a flat diffuse interface approximates the tension") {
  // Equilibrium profile between phases 1 and 2 across a channel: the excess
  // energy per unit interface length is gamma12.
  const int nx = 256, ny = 4;
  const Grid g = make_grid(nx, ny, 1.0, 4.0 / nx, BoundaryKind::Wall,
                           BoundaryKind::Periodic);
  const double eps = 8.0 * g.hx;
  const double gamma = 0.03;
  const MaterialParams p = th::mat(gamma, gamma, gamma, eps);

  PhaseTriple c(nx, ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const double a = 0.5 * (1.0 + std::tanh(2.0 * (g.xc(i) - 0.5) / eps));
      c.c1(i, j) = a;
      c.c2(i, j) = 1.0 - a;
      c.c3(i, j) = 0.0;
    }
  const BoundaryRule rule = BoundaryRule::natural(g);
  sync_ghosts(c.c1, g, rule);
  sync_ghosts(c.c2, g, rule);
  sync_ghosts(c.c3, g, rule);

  const double excess = free_energy(c, p, g) / g.ly();
  CHECK(th::rel_err(excess, gamma) < 0.02);

  // The functional genuinely depends on eps: doubling it at a fixed profile
  // changes the value.
  MaterialParams wide = p;
  wide.epsilon = 2.0 * eps;
  wide = validate(wide);
  const double other = free_energy(c, wide, g) / g.ly();
  CHECK(std::abs(other - excess) > 0.05 * excess);
}

TEST_CASE("bulk derivative: frozen values") {
  const Grid g = th::box(4);
  ScalarField c(g.nx, g.ny);
  c.fill(0.5);
  CHECK(bulk_derivative(c, 2.0).max_abs() == 0.0);
  c.fill(0.25);
  CHECK(bulk_derivative(c, 2.0)(0, 0) == 0.1875);
  c.fill(0.0);
  CHECK(bulk_derivative(c, 7.0).max_abs() == 0.0);
  c.fill(1.0);
  CHECK(bulk_derivative(c, 7.0).max_abs() == 0.0);
}

TEST_CASE("variational derivative of uniform fields") {
  const Grid g = th::box(8);
  const MaterialParams p = th::mat(2.0, 3.0, 4.0, 0.1);  // sigma = (1,3,5)
  ScalarField c(g.nx, g.ny);
  c.fill(0.5);
  sync_ghosts(c, g, BoundaryRule::periodic());
  CHECK(variational_derivative(c, 2.0, p, g).max_abs() == 0.0);

  c.fill(0.25);
  sync_ghosts(c, g, BoundaryRule::periodic());
  const ScalarField d = variational_derivative(c, 2.0, p, g);
  // (12/0.1) * 0.1875 = 22.5, the Laplacian part vanishes
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      CHECK(d(i, j) == doctest::Approx(22.5).epsilon(1e-14));
}

TEST_CASE("variational derivative is the exact functional gradient") {
  const Grid g = th::box(32);
  const MaterialParams p = th::mat(2.0, 3.0, 4.0, 0.3);
  PhaseTriple c = th::smooth_phases(g);
  const BoundaryRule rule = BoundaryRule::periodic();
  sync_ghosts(c.c1, g, rule);
  sync_ghosts(c.c2, g, rule);
  sync_ghosts(c.c3, g, rule);

  // Multi-mode direction: overlaps the harmonic content of all three
  // phases, so every directional derivative is comfortably nonzero.
  ScalarField delta = th::fill_cells(g, [](double x, double y) {
    return 0.5 + std::sin(2 * kPi * x + 0.7) * std::cos(2 * kPi * y + 0.3) +
           std::cos(4 * kPi * x + 0.1) * std::sin(4 * kPi * y + 0.9);
  });

  const double theta = 1e-5;
  for (int phase = 0; phase < 3; ++phase) {
    PhaseTriple plus = c, minus = c;
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        plus[phase](i, j) += theta * delta(i, j);
        minus[phase](i, j) -= theta * delta(i, j);
      }
    sync_ghosts(plus[phase], g, rule);
    sync_ghosts(minus[phase], g, rule);
    const double fd =
        (free_energy(plus, p, g) - free_energy(minus, p, g)) / (2.0 * theta);

    const ScalarField d = variational_derivative(c[phase], p.sigma[phase], p, g);
    ScalarField prod(g.nx, g.ny);
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) prod(i, j) = d(i, j) * delta(i, j);
    const double directional = integrate(prod, g);
    CHECK(th::rel_err(fd, directional) < 1e-6);
  }
}

TEST_CASE("multiplier: zeros, equal weights, frozen value") {
  const Grid g = th::box(4);
  const MaterialParams equal = th::mat(1.0, 1.0, 1.0, 0.1);
  ScalarField z(g.nx, g.ny);
  CHECK(lagrange_multiplier(z, z, z, equal).max_abs() == 0.0);

  ScalarField d1(g.nx, g.ny), d2(g.nx, g.ny), d3(g.nx, g.ny);
  d1.fill(0.6);
  d2.fill(-0.3);
  d3.fill(0.9);
  const ScalarField beta = lagrange_multiplier(d1, d2, d3, equal);
  CHECK(beta(0, 0) == doctest::Approx(-0.4).epsilon(1e-14));

  const MaterialParams mixed = th::mat(2.0, 3.0, 4.0, 0.1);  // sigma = (1,3,5)
  d1.fill(1.0);
  d2.fill(0.0);
  d3.fill(0.0);
  const ScalarField b2 = lagrange_multiplier(d1, d2, d3, mixed);
  CHECK(b2(2, 1) == doctest::Approx(-15.0 / 23.0).epsilon(1e-14));
}

TEST_CASE("chemical potentials vanish for uniform symmetric states") {
  const Grid g = th::box(8);
  const MaterialParams equal = th::mat(1.0, 1.0, 1.0, 0.1);

  PhaseTriple pure = uniform_phases(g, 1.0, 0.0, 0.0);
  sync_ghosts(pure.c1, g, BoundaryRule::periodic());
  sync_ghosts(pure.c2, g, BoundaryRule::periodic());
  sync_ghosts(pure.c3, g, BoundaryRule::periodic());
  ChemPotTriple mu = chemical_potentials(pure, equal, g);
  CHECK(mu.mu1.max_abs() == 0.0);
  CHECK(mu.mu2.max_abs() == 0.0);
  CHECK(mu.mu3.max_abs() == 0.0);
  CHECK(mu.beta.max_abs() == 0.0);

  const double third = 1.0 / 3.0;
  PhaseTriple sym = uniform_phases(g, third, third, third);
  sync_ghosts(sym.c1, g, BoundaryRule::periodic());
  sync_ghosts(sym.c2, g, BoundaryRule::periodic());
  sync_ghosts(sym.c3, g, BoundaryRule::periodic());
  mu = chemical_potentials(sym, equal, g);
  const double scale = 12.0 / equal.epsilon;
  CHECK(mu.mu1.max_abs() <= 1e-14 * scale);
  CHECK(mu.mu2.max_abs() <= 1e-14 * scale);
  CHECK(mu.mu3.max_abs() <= 1e-14 * scale);
}

TEST_CASE("weighted sum of potentials vanishes pointwise") {
  const Grid g = th::box(16);
  const MaterialParams p = th::mat(2.0, 3.0, 4.0, 0.25);
  PhaseTriple c = th::smooth_phases(g);
  const BoundaryRule rule = BoundaryRule::periodic();
  sync_ghosts(c.c1, g, rule);
  sync_ghosts(c.c2, g, rule);
  sync_ghosts(c.c3, g, rule);
  const ChemPotTriple mu = chemical_potentials(c, p, g);
  double worst = 0.0, scale = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double s = mu.mu1(i, j) / p.sigma[0] + mu.mu2(i, j) / p.sigma[1] +
                       mu.mu3(i, j) / p.sigma[2];
      worst = std::max(worst, std::abs(s));
      scale = std::max(scale, std::abs(mu.mu1(i, j)));
    }
  CHECK(worst <= 1e-12 * scale);
}

TEST_CASE("relabeling phases 1 and 2 permutes the potentials") {
  const Grid g = th::box(16);
  const MaterialParams p = th::mat(1.1, 0.9, 1.3, 0.25);
  const MaterialParams q = th::mat(1.1, 1.3, 0.9, 0.25);  // swapped sigma1/2
  PhaseTriple c = th::smooth_phases(g);
  PhaseTriple cs(g.nx, g.ny);
  cs.c1 = c.c2;
  cs.c2 = c.c1;
  cs.c3 = c.c3;
  const BoundaryRule rule = BoundaryRule::periodic();
  for (PhaseTriple* t : {&c, &cs}) {
    sync_ghosts(t->c1, g, rule);
    sync_ghosts(t->c2, g, rule);
    sync_ghosts(t->c3, g, rule);
  }
  const ChemPotTriple mu = chemical_potentials(c, p, g);
  const ChemPotTriple mus = chemical_potentials(cs, q, g);
  double worst = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      worst = std::max(worst, std::abs(mus.mu1(i, j) - mu.mu2(i, j)));
      worst = std::max(worst, std::abs(mus.mu2(i, j) - mu.mu1(i, j)));
      worst = std::max(worst, std::abs(mus.mu3(i, j) - mu.mu3(i, j)));
    }
  CHECK(worst <= 1e-12 * mu.mu1.max_abs());
}

TEST_CASE("capillary force of a uniform state vanishes") {
  const Grid g = th::box(8);
  const MaterialParams p = th::mat(1.0, 1.0, 1.0, 0.1);
  PhaseTriple c = uniform_phases(g, 0.2, 0.5, 0.3);
  const BoundaryRule rule = BoundaryRule::periodic();
  sync_ghosts(c.c1, g, rule);
  sync_ghosts(c.c2, g, rule);
  sync_ghosts(c.c3, g, rule);
  const ChemPotTriple mu = chemical_potentials(c, p, g);
  const VectorField f = capillary_force(c, mu, g);
  CHECK(f.u.max_abs() == 0.0);
  CHECK(f.v.max_abs() == 0.0);
}

TEST_CASE("energy density integrates to the free energy") {
  const Grid g = th::box(24);
  const MaterialParams p = th::mat(2.0, 3.0, 4.0, 0.25);
  PhaseTriple c = th::smooth_phases(g);
  const BoundaryRule rule = BoundaryRule::periodic();
  sync_ghosts(c.c1, g, rule);
  sync_ghosts(c.c2, g, rule);
  sync_ghosts(c.c3, g, rule);
  const double direct = free_energy(c, p, g);
  const double via_density = integrate(energy_density(c, p, g), g);
  CHECK(th::rel_err(via_density, direct) < 1e-12);
}

}  // TEST_SUITE
