#include "tricap/audit.hpp"

#include <cmath>
#include <cstdio>

#include "tricap/errors.hpp"
#include "tricap/ops.hpp"

namespace tricap {

namespace {

// Face-difference viscous dissipation eta * (|grad u|^2 + |grad v|^2):
// diagonal derivatives at cells, transverse derivatives at corners with half
// weights on wall boundaries.  This is exactly -eta*(<u, lap u> + <v, lap v>)
// under the solver's ghost conventions.
double viscous_dissipation(const VectorField& vel, const Grid& g,
                           double eta) {
  if (eta == 0.0) return 0.0;
  KahanSum cells;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double ux = (vel.u(i + 1, j) - vel.u(i, j)) / g.hx;
      const double vy = (vel.v(i, j + 1) - vel.v(i, j)) / g.hy;
      cells.add(ux * ux + vy * vy);
    }
  }
  KahanSum corners;
  const bool wx = g.bx == BoundaryKind::Wall;
  const bool wy = g.by == BoundaryKind::Wall;
  const int imax = wx ? g.nx : g.nx - 1;
  const int jmax = wy ? g.ny : g.ny - 1;
  for (int j = 0; j <= jmax; ++j) {
    for (int i = 0; i <= imax; ++i) {
      const double uy = (vel.u(i, j) - vel.u(i, j - 1)) / g.hy;
      const double vx = (vel.v(i, j) - vel.v(i - 1, j)) / g.hx;
      double w = 1.0;
      if (wx && (i == 0 || i == g.nx)) w *= 0.5;
      if (wy && (j == 0 || j == g.ny)) w *= 0.5;
      corners.add(w * (uy * uy + vx * vx));
    }
  }
  return eta * (cells.get() + corners.get()) * g.hx * g.hy;
}

}  // namespace

EnergyLedger ledger(const FluidState& s) {
  EnergyLedger l;
  l.time = s.time;
  l.ke_fluid = 0.5 * s.params.rho * integrate_faces(s.v, s.v, s.grid);
  l.free_energy = free_energy(s.c, s.params, s.grid);
  l.wall_energy = wall_energy(s.c, s.wetting, s.grid);
  const ChemPotTriple mu = chemical_potentials(s.c, s.params, s.grid);
  KahanSum chem;
  for (int k = 0; k < 3; ++k) {
    const VectorField gmu = gradient(mu[k], s.grid);
    chem.add(s.params.mobility / s.params.sigma[k] *
             integrate_faces(gmu, gmu, s.grid));
  }
  l.d_chem = chem.get();
  l.d_visc = viscous_dissipation(s.v, s.grid, s.params.eta);
  l.total = l.ke_fluid + l.free_energy + l.wall_energy;
  return l;
}

EnergyLedger ledger(const SolidState& s) {
  EnergyLedger l;
  l.time = s.time;
  const auto [ke, strain] = solid_energy(s);
  l.ke_solid = ke;
  l.strain_solid = strain;
  l.total = ke + strain;
  return l;
}

std::pair<double, double> balance_residual(const EnergyLedger& a,
                                           const EnergyLedger& b, double dt) {
  const double d1 = a.d_chem + a.d_visc;
  const double d2 = b.d_chem + b.d_visc;
  const double r = (b.total - a.total) / dt + 0.5 * (d1 + d2);
  const double rel = b.total != 0.0 ? r / std::abs(b.total) : r;
  return {r, rel};
}

double traction_power(const SolidState& before, const SolidState& after) {
  const std::vector<double> f = assemble_traction_forces(before);
  const double dt = after.time - before.time;
  KahanSum work;
  for (std::size_t k = 0; k < f.size(); ++k)
    work.add(f[k] * (after.u[k] - before.u[k]));
  return work.get() / dt;
}

double identity_residual(const PhaseTriple& c, const MaterialParams& p,
                         const Grid& g, const WallWetting& w) {
  PhaseTriple cs = c;
  sync_phases(cs, g, w, p);
  const ChemPotTriple mu = chemical_potentials(cs, p, g);
  const BoundaryRule rule = BoundaryRule::natural(g);
  ScalarField psi = energy_density(cs, p, g);
  sync_ghosts(psi, g, rule);
  const VectorField fcap = capillary_force(cs, mu, g);

  // Capillary tensor: diagonal at cells, off-diagonal at corners, via
  // centered differences of the phase fields.
  ScalarField txx(g.nx, g.ny), tyy(g.nx, g.ny);
  ScalarField txy(g.nx + 1, g.ny + 1);
  for (int k = 0; k < 3; ++k) {
    const ScalarField& ck = cs[k];
    const double coef = 0.75 * p.epsilon * p.sigma[k];
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        const double cx = (ck(i + 1, j) - ck(i - 1, j)) / (2.0 * g.hx);
        const double cy = (ck(i, j + 1) - ck(i, j - 1)) / (2.0 * g.hy);
        txx(i, j) += coef * cx * cx;
        tyy(i, j) += coef * cy * cy;
      }
    }
    for (int j = 0; j <= g.ny; ++j) {
      for (int i = 0; i <= g.nx; ++i) {
        const double cx = (ck(i, j - 1) + ck(i, j) - ck(i - 1, j - 1) -
                           ck(i - 1, j)) /
                          (2.0 * g.hx);
        const double cy = (ck(i - 1, j) + ck(i, j) - ck(i - 1, j - 1) -
                           ck(i, j - 1)) /
                          (2.0 * g.hy);
        txy(i, j) += coef * cx * cy;
      }
    }
  }

  sync_ghosts(txx, g, rule);
  sync_ghosts(tyy, g, rule);

  // Residual on faces: div T - grad psi + Sum avg(mu) grad c.  Skip a
  // two-cell margin on wall axes where one-sided ghost data degrades the
  // stencil order.
  const bool wx = g.bx == BoundaryKind::Wall;
  const bool wy = g.by == BoundaryKind::Wall;
  const int mxi0 = wx ? 2 : 0, mxi1 = wx ? g.nx - 2 : g.nx - 1;
  const int myj0 = wy ? 2 : 0, myj1 = wy ? g.ny - 2 : g.ny - 1;
  double linf = 0.0;
  for (int j = wy ? 2 : 0; j <= (wy ? g.ny - 3 : g.ny - 1); ++j) {
    for (int i = mxi0; i <= mxi1; ++i) {
      const double div_t = (txx(i, j) - txx(i - 1, j)) / g.hx +
                           (txy(i, j + 1) - txy(i, j)) / g.hy;
      const double gpsi = (psi(i, j) - psi(i - 1, j)) / g.hx;
      linf = std::max(linf, std::abs(div_t - gpsi + fcap.u(i, j)));
    }
  }
  for (int j = myj0; j <= myj1; ++j) {
    for (int i = wx ? 2 : 0; i <= (wx ? g.nx - 3 : g.nx - 1); ++i) {
      const double div_t = (tyy(i, j) - tyy(i, j - 1)) / g.hy +
                           (txy(i + 1, j) - txy(i, j)) / g.hx;
      const double gpsi = (psi(i, j) - psi(i, j - 1)) / g.hy;
      linf = std::max(linf, std::abs(div_t - gpsi + fcap.v(i, j)));
    }
  }
  return linf;
}

LedgerWriter::LedgerWriter(const std::string& path) : path_(path) {
  out_.open(path);
  if (!out_) throw IoFailure("cannot open " + path + " for writing");
  out_ << "t,ke_fluid,free_energy,wall_energy,ke_solid,strain_solid,total,"
          "d_chem,d_visc,residual,residual_rel\n";
}

void LedgerWriter::append(const EnergyLedger& l, double residual,
                          double residual_rel) {
  char buf[480];
  std::snprintf(buf, sizeof(buf),
                "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                "%.17g,%.17g\n",
                l.time, l.ke_fluid, l.free_energy, l.wall_energy, l.ke_solid,
                l.strain_solid, l.total, l.d_chem, l.d_visc, residual,
                residual_rel);
  out_ << buf;
  if (!out_) throw IoFailure("write failed: " + path_);
}

}  // namespace tricap
