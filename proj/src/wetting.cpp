#include "tricap/wetting.hpp"

#include "tricap/ops.hpp"

namespace tricap {

double wetting_flux(double ci, double gamma_si, double sigma_i, double eps) {
  return -(4.0 / (3.0 * eps * sigma_i)) * gamma_si *
         WallEnergyModel::dg(ci);
}

double wall_energy(const PhaseTriple& c, const WallWetting& w, const Grid& g) {
  KahanSum s;
  const int nx = g.nx, ny = g.ny;

  if (g.bx == BoundaryKind::Wall) {
    for (int j = 0; j < ny; ++j) {
      s.add(g.hy * w.left.density(c.c1(0, j), c.c2(0, j), c.c3(0, j)));
      s.add(g.hy *
            w.right.density(c.c1(nx - 1, j), c.c2(nx - 1, j), c.c3(nx - 1, j)));
    }
  }
  if (g.by == BoundaryKind::Wall) {
    for (int i = 0; i < nx; ++i) {
      s.add(g.hx * w.bottom.density(c.c1(i, 0), c.c2(i, 0), c.c3(i, 0)));
      s.add(g.hx *
            w.top.density(c.c1(i, ny - 1), c.c2(i, ny - 1), c.c3(i, ny - 1)));
    }
  }
  return s.get();
}

BoundaryRule phase_rule(const Grid& g, const WallWetting& w,
                        const PhaseTriple& c, int phase,
                        const MaterialParams& p) {
  BoundaryRule rule = BoundaryRule::natural(g);
  const ScalarField& ck = c[phase];
  const double sig = p.sigma[phase];

  if (g.bx == BoundaryKind::Wall &&
      !(w.left.trivial() && w.right.trivial())) {
    rule.x = BoundaryRule::Kind::PrescribedNormalGradient;
    rule.left.resize(g.ny);
    rule.right.resize(g.ny);
    for (int j = 0; j < g.ny; ++j) {
      rule.left[j] =
          wetting_flux(ck(0, j), w.left.gamma_s[phase], sig, p.epsilon);
      rule.right[j] = wetting_flux(ck(g.nx - 1, j), w.right.gamma_s[phase],
                                   sig, p.epsilon);
    }
  }
  if (g.by == BoundaryKind::Wall &&
      !(w.bottom.trivial() && w.top.trivial())) {
    rule.y = BoundaryRule::Kind::PrescribedNormalGradient;
    rule.bottom.resize(g.nx);
    rule.top.resize(g.nx);
    for (int i = 0; i < g.nx; ++i) {
      rule.bottom[i] =
          wetting_flux(ck(i, 0), w.bottom.gamma_s[phase], sig, p.epsilon);
      rule.top[i] = wetting_flux(ck(i, g.ny - 1), w.top.gamma_s[phase], sig,
                                 p.epsilon);
    }
  }
  return rule;
}

void sync_phases(PhaseTriple& c, const Grid& g, const WallWetting& w,
                 const MaterialParams& p) {
  for (int k = 0; k < 3; ++k)
    sync_ghosts(c[k], g, phase_rule(g, w, c, k, p));
}

}  // namespace tricap
