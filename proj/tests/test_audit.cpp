#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "tricap/audit.hpp"
#include "tricap/ops.hpp"

using namespace tricap;
using th::kPi;

TEST_SUITE("audit") {

TEST_CASE("quiescent wetted pool: only the wall term is live") {
  const Grid g = make_grid(16, 8, 2.0, 1.0, BoundaryKind::Periodic,
                           BoundaryKind::Wall);
  WallWetting w;
  w.bottom.gamma_s = {0.02, 0.01, 0.0};
  FluidState s = make_state(g, th::mat(0.01, 0.01, 0.01, 0.1), w);

  const EnergyLedger l = ledger(s);
  CHECK(l.ke_fluid == 0.0);
  CHECK(l.free_energy == 0.0);  // pure phase, flat ghosts (dg(1) = 0)
  CHECK(l.ke_solid == 0.0);
  CHECK(l.strain_solid == 0.0);
  CHECK(l.wall_energy == doctest::Approx(0.02 * g.lx()).epsilon(1e-13));
  CHECK(l.total == l.wall_energy);
  CHECK(l.d_chem == 0.0);
  CHECK(l.d_visc == 0.0);
}

TEST_CASE("uniform translation carries the exact kinetic energy") {
  const Grid g = th::box(16);
  FluidState s = make_state(g, th::mat(0.01, 0.01, 0.01, 0.1, 1e-3, 2.0));
  s.v.u.fill(0.3);
  sync_velocity(s.v, g);
  const EnergyLedger l = ledger(s);
  CHECK(l.ke_fluid == doctest::Approx(0.5 * 2.0 * 0.3 * 0.3).epsilon(1e-13));
  CHECK(l.d_visc == 0.0);  // constant field has no gradient
}

TEST_CASE("viscous rate of a single shear mode is exact") {
  const Grid g = th::box(32);
  const double eta = 0.37, amp = 0.8;
  FluidState s = make_state(g, th::mat(0.01, 0.01, 0.01, 0.1, 1e-3, 1.0, eta));
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i <= g.nx; ++i)
      s.v.u(i, j) = amp * std::sin(2.0 * kPi * g.yc(j));
  sync_velocity(s.v, g);
  const EnergyLedger l = ledger(s);
  const double ktilde = (2.0 / g.hy) * std::sin(kPi * g.hy / g.ly());
  const double want = eta * amp * amp * ktilde * ktilde * g.lx() * g.ly() / 2.0;
  CHECK(th::rel_err(l.d_visc, want) < 1e-12);
}

TEST_CASE("chemical rate matches the face quadrature of the potentials") {
  const Grid g = th::box(24);
  FluidState s = make_state(g, th::mat(0.012, 0.02, 0.015, 0.25));
  s.c = th::smooth_phases(g);
  sync_phases(s.c, g, s.wetting, s.params);
  const EnergyLedger l = ledger(s);
  CHECK(l.d_chem > 0.0);

  const ChemPotTriple mu = chemical_potentials(s.c, s.params, g);
  const BoundaryRule rule = BoundaryRule::natural(g);
  double want = 0.0;
  for (int i = 0; i < 3; ++i) {
    ScalarField m = mu[i];
    sync_ghosts(m, g, rule);
    const VectorField gm = gradient(m, g);
    want += (s.params.mobility / s.params.sigma[i]) *
            integrate_faces(gm, gm, g);
  }
  CHECK(th::rel_err(l.d_chem, want) < 1e-13);
}

TEST_CASE("balance residual: fixed point and frozen arithmetic") {
  EnergyLedger a, b;
  auto [r0, rr0] = balance_residual(a, b, 0.1);
  CHECK(r0 == 0.0);
  CHECK(rr0 == 0.0);

  a.total = 1.0;
  a.d_chem = 0.5;
  a.d_visc = 0.25;
  b.total = 0.9;
  b.d_chem = 0.5;
  b.d_visc = 0.25;
  auto [r, rr] = balance_residual(a, b, 0.1);
  CHECK(r == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(rr == doctest::Approx(-0.25 / 0.9).epsilon(1e-14));

  b.total = 0.0;
  auto [r2, rr2] = balance_residual(a, b, 0.1);
  CHECK(rr2 == r2);  // relative form falls back when E2 = 0
}

TEST_CASE("capillary identity residual: zero for uniform, second order") {
  const Grid g = th::box(32);
  const MaterialParams p = th::mat(0.02, 0.03, 0.04, 0.25);
  PhaseTriple flat(g.nx, g.ny);
  flat.c1.fill(0.3);
  flat.c2.fill(0.45);
  flat.c3.fill(0.25);
  CHECK(identity_residual(flat, p, g) == 0.0);

  const double r32 = identity_residual(th::smooth_phases(th::box(32)), p,
                                       th::box(32));
  const double r64 = identity_residual(th::smooth_phases(th::box(64)), p,
                                       th::box(64));
  CHECK(r32 > 0.0);
  const double ratio = r32 / r64;
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.5);
}

TEST_CASE("identity residual stays finite on a wetted wall grid") {
  const Grid g = make_grid(24, 24, 1.0, 1.0, BoundaryKind::Periodic,
                           BoundaryKind::Wall);
  WallWetting w;
  w.bottom.gamma_s = {-0.005, 0.005, 0.0};
  const MaterialParams p = th::mat(0.01, 0.01, 0.01, 0.2);
  const double r = identity_residual(th::smooth_phases(g), p, g, w);
  CHECK(std::isfinite(r));
}

TEST_CASE("solid ledger mirrors the energy pair") {
  const SolidMesh mesh = make_solid_mesh(6, 3, 1.2, 0.6);
  const SolidMaterial m = {2.0, 1.5, 0.5};
  SolidState s = make_solid_state(mesh, m, {});
  for (int n = 0; n < mesh.nnodes(); ++n) {
    s.u[2 * n] = 0.01 * (n % 5);
    s.vel[2 * n + 1] = 0.02 * (n % 3);
  }
  s.time = 1.25;
  const auto [ke, se] = solid_energy(s);
  const EnergyLedger l = ledger(s);
  CHECK(l.time == 1.25);
  CHECK(l.ke_solid == ke);
  CHECK(l.strain_solid == se);
  CHECK(l.ke_fluid == 0.0);
  CHECK(l.free_energy == 0.0);
  CHECK(l.wall_energy == 0.0);
  CHECK(l.total == ke + se);
}

TEST_CASE("traction power is the exact work rate of the dead loads") {
  const SolidMesh mesh = make_solid_mesh(4, 2, 1.0, 0.5);
  const SolidMaterial m = {1.0, 1.0, 1.0};
  SolidBCs bcs;
  bcs.traction_right = {0.2, -0.1};
  bcs.traction_top = {0.0, 0.05};
  const SolidState before = make_solid_state(mesh, m, bcs);
  SolidState after = before;
  after.time = 0.5;
  for (int n = 0; n < mesh.nnodes(); ++n) {
    after.u[2 * n] = 1e-3 * n;
    after.u[2 * n + 1] = -2e-3 * (n % 4);
  }
  const std::vector<double> f = assemble_traction_forces(before);
  double work = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k)
    work += f[k] * (after.u[k] - before.u[k]);
  CHECK(traction_power(before, after) ==
        doctest::Approx(work / 0.5).epsilon(1e-13));
}

TEST_CASE("ledger writer: header, row count, digit-exact round trip") {
  const std::string path = "ledger_test_tmp.csv";
  {
    LedgerWriter w(path);
    EnergyLedger l;
    l.time = 1.0 / 3.0;
    l.ke_fluid = 0.1;
    l.total = -2.0 / 7.0;
    l.d_chem = 1e-17;
    w.append(l, 0.25, 1.0 / 9.0);
    w.append(l, 0.0, 0.0);
    w.append(l, -3.5e-4, -1.0);
  }
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);
  CHECK(line ==
        "t,ke_fluid,free_energy,wall_energy,ke_solid,strain_solid,total,"
        "d_chem,d_visc,residual,residual_rel");
  int rows = 0;
  std::string first_row;
  while (std::getline(in, line)) {
    if (rows == 0) first_row = line;
    ++rows;
  }
  CHECK(rows == 3);

  // Values round-trip exactly at 17 significant digits.
  std::stringstream ss(first_row);
  std::string tok;
  std::getline(ss, tok, ',');
  CHECK(std::stod(tok) == 1.0 / 3.0);
  std::getline(ss, tok, ',');
  CHECK(std::stod(tok) == 0.1);
  for (int skip = 0; skip < 4; ++skip) std::getline(ss, tok, ',');
  std::getline(ss, tok, ',');
  CHECK(std::stod(tok) == -2.0 / 7.0);
  std::getline(ss, tok, ',');
  CHECK(std::stod(tok) == 1e-17);
  std::getline(ss, tok, ',');  // d_visc
  std::getline(ss, tok, ',');
  CHECK(std::stod(tok) == 0.25);
  std::getline(ss, tok, ',');
  CHECK(std::stod(tok) == 1.0 / 9.0);
  std::remove(path.c_str());
}

}  // TEST_SUITE
