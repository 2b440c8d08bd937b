#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "tricap/wetting.hpp"

using namespace tricap;
using th::kPi;

TEST_SUITE("wetting") {

TEST_CASE("interpolation endpoints") {
  CHECK(WallEnergyModel::g(0.0) == 0.0);
  CHECK(WallEnergyModel::g(1.0) == 1.0);
  CHECK(WallEnergyModel::g(0.5) == 0.5);
  CHECK(WallEnergyModel::dg(0.0) == 0.0);
  CHECK(WallEnergyModel::dg(1.0) == 0.0);
  CHECK(WallEnergyModel::dg(0.5) == 1.5);
}

TEST_CASE("wall energy density: frozen value") {
  WallEnergyModel m;
  m.gamma_s = {1.0, 2.0, 5.0};
  CHECK(m.density(0.5, 0.5, 0.0) == 1.5);
  CHECK(m.trivial() == false);
  CHECK(WallEnergyModel{}.trivial() == true);
}

TEST_CASE("wetting flux: pure phases and frozen value") {
  CHECK(wetting_flux(0.0, 3.0, 2.0, 0.1) == 0.0);
  CHECK(wetting_flux(1.0, 3.0, 2.0, 0.1) == 0.0);
  CHECK(th::rel_err(wetting_flux(0.5, 1.0, 1.0, 0.1), -20.0) < 1e-14);
}

TEST_CASE("wetting flux balances the wall energy derivative") {
  // The prescribed normal gradient is the stationarity condition of
  // (3/4) eps sigma |grad c|^2 / 2 + gamma_s g(c) at the wall:
  // 0.75 eps sigma h + gamma_s dg(c) = 0.
  const double eps = 0.1;
  for (double sigma : {0.5, 1.0, 3.0})
    for (double gs : {-0.02, 0.015})
      for (double c : {0.1, 0.37, 0.5, 0.81}) {
        const double h = wetting_flux(c, gs, sigma, eps);
        const double closure =
            0.75 * eps * sigma * h + gs * WallEnergyModel::dg(c);
        CHECK(std::abs(closure) <= 1e-12 * std::abs(gs));
      }
}

TEST_CASE("wall energy integrates the density along wall sides") {
  const Grid g = make_grid(8, 8, 2.0, 1.0, BoundaryKind::Periodic,
                           BoundaryKind::Wall);
  PhaseTriple c(g.nx, g.ny);
  c.c1.fill(0.5);
  c.c2.fill(0.5);
  c.c3.fill(0.0);

  WallWetting w;
  w.bottom.gamma_s = {1.0, 2.0, 5.0};
  CHECK(wall_energy(c, w, g) == doctest::Approx(1.5 * g.lx()).epsilon(1e-13));

  w.top.gamma_s = {1.0, 2.0, 5.0};
  CHECK(wall_energy(c, w, g) ==
        doctest::Approx(2.0 * 1.5 * g.lx()).epsilon(1e-13));

  // Fully wetted by phase 1: only gamma_s1 contributes.
  c.c1.fill(1.0);
  c.c2.fill(0.0);
  w.top = WallEnergyModel{};
  w.bottom.gamma_s = {0.7, 0.3, 0.0};
  CHECK(wall_energy(c, w, g) == doctest::Approx(0.7 * g.lx()).epsilon(1e-13));

  // Periodic axis sides are ignored even if energies are set.
  w.left.gamma_s = {9.0, 9.0, 9.0};
  CHECK(wall_energy(c, w, g) == doctest::Approx(0.7 * g.lx()).epsilon(1e-13));
}

TEST_CASE("phase ghosts carry the wetting gradient at walls") {
  const Grid g = make_grid(16, 12, 1.0, 0.75, BoundaryKind::Periodic,
                           BoundaryKind::Wall);
  const MaterialParams p = th::mat(2.0, 3.0, 4.0, 0.2);  // sigma = (1,3,5)

  PhaseTriple c(g.nx, g.ny);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double a = 0.3 + 0.2 * std::sin(2 * kPi * g.xc(i)) *
                                 std::cos(kPi * g.yc(j));
      const double b = 0.4 - 0.1 * std::cos(2 * kPi * g.xc(i));
      c.c1(i, j) = a;
      c.c2(i, j) = b;
      c.c3(i, j) = 1.0 - a - b;
    }

  WallWetting w;
  w.bottom.gamma_s = {-0.01, 0.01, 0.0};
  // top stays trivial: mirror ghosts there

  sync_phases(c, g, w, p);

  for (int i = 0; i < g.nx; ++i) {
    for (int phase = 0; phase < 3; ++phase) {
      const double ci = c[phase](i, 0);
      const double want =
          wetting_flux(ci, w.bottom.gamma_s[phase], p.sigma[phase], p.epsilon);
      const double got = (c[phase](i, -1) - c[phase](i, 0)) / g.hy;
      CHECK(std::abs(got - want) <= 1e-12 * (1.0 + std::abs(want)));
    }
    // Neutral top wall mirrors.
    CHECK(c.c1(i, g.ny) == c.c1(i, g.ny - 1));
    CHECK(c.c2(i, g.ny) == c.c2(i, g.ny - 1));
  }
  // Periodic x-axis wraps regardless of wall energies.
  CHECK(c.c1(-1, 3) == c.c1(g.nx - 1, 3));
  CHECK(c.c1(g.nx, 3) == c.c1(0, 3));
}

TEST_CASE("wetting ghosts on an x-axis wall") {
  const Grid g = make_grid(12, 8, 1.0, 1.0, BoundaryKind::Wall,
                           BoundaryKind::Periodic);
  const MaterialParams p = th::mat(1.0, 1.0, 1.0, 0.25);

  PhaseTriple c(g.nx, g.ny);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double a = 0.5 + 0.3 * std::sin(kPi * g.xc(i)) *
                                 std::sin(2 * kPi * g.yc(j));
      c.c1(i, j) = a;
      c.c2(i, j) = 1.0 - a;
      c.c3(i, j) = 0.0;
    }

  WallWetting w;
  w.left.gamma_s = {0.004, -0.004, 0.0};
  w.right.gamma_s = {-0.002, 0.002, 0.0};
  sync_phases(c, g, w, p);

  for (int j = 0; j < g.ny; ++j) {
    const double hl = wetting_flux(c.c1(0, j), w.left.gamma_s[0], p.sigma[0],
                                   p.epsilon);
    CHECK(std::abs((c.c1(-1, j) - c.c1(0, j)) / g.hx - hl) <=
          1e-12 * (1.0 + std::abs(hl)));
    const double hr = wetting_flux(c.c1(g.nx - 1, j), w.right.gamma_s[0],
                                   p.sigma[0], p.epsilon);
    CHECK(std::abs((c.c1(g.nx, j) - c.c1(g.nx - 1, j)) / g.hx - hr) <=
          1e-12 * (1.0 + std::abs(hr)));
  }
}

TEST_CASE("phase rule collapses to the grid kinds") {
  const Grid per = th::box(8);
  const MaterialParams p = th::mat(1.0, 1.0, 1.0, 0.1);
  PhaseTriple c(per.nx, per.ny);
  c.c1.fill(1.0);
  const BoundaryRule r = phase_rule(per, WallWetting{}, c, 0, p);
  CHECK(r.x == BoundaryRule::Kind::Periodic);
  CHECK(r.y == BoundaryRule::Kind::Periodic);

  const Grid wy = make_grid(8, 8, 1.0, 1.0, BoundaryKind::Periodic,
                            BoundaryKind::Wall);
  const BoundaryRule rw = phase_rule(wy, WallWetting{}, c, 0, p);
  CHECK(rw.x == BoundaryRule::Kind::Periodic);
  CHECK(rw.y == BoundaryRule::Kind::ZeroNormalGradient);
}

}  // TEST_SUITE
