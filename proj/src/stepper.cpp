#include "tricap/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tricap/errors.hpp"
#include "tricap/linsolve.hpp"
#include "tricap/ops.hpp"

namespace tricap {

FluidState make_state(const Grid& g, const MaterialParams& validated,
                      const WallWetting& w) {
  FluidState s;
  s.grid = g;
  s.params = validated;
  s.wetting = w;
  s.c = PhaseTriple(g.nx, g.ny);
  s.c.c1.fill(1.0);
  s.v = VectorField(g.nx, g.ny);
  s.p = ScalarField(g.nx, g.ny);
  s.dc_cache1 = ScalarField(g.nx, g.ny);
  s.dc_cache2 = ScalarField(g.nx, g.ny);
  sync_velocity(s.v, g);
  sync_phases(s.c, g, w, validated);
  return s;
}

double advective_dt_bound(const FluidState& s) {
  const double vmax = s.v.max_abs();
  if (vmax == 0.0) return std::numeric_limits<double>::infinity();
  return 0.25 * std::min(s.grid.hx, s.grid.hy) / vmax;
}

double capillary_dt_bound(const Grid& g, const MaterialParams& p) {
  const double h = std::min(g.hx, g.hy);
  const double gmax = std::max({p.gamma12, p.gamma13, p.gamma23});
  return std::sqrt(p.rho * h * h * h / (2.0 * M_PI * gmax));
}

double auto_dt(const FluidState& s) {
  return 0.5 *
         std::min(advective_dt_bound(s), capillary_dt_bound(s.grid, s.params));
}

PhaseTriple phase_step(FluidState& s, double dt) {
  const Grid& g = s.grid;
  const MaterialParams& p = s.params;
  const int nx = g.nx, ny = g.ny;

  const double bound = advective_dt_bound(s);
  if (dt > bound) throw CflViolation(dt, bound);

  sync_velocity(s.v, g);
  sync_phases(s.c, g, s.wetting, p);
  const ChemPotTriple mu = chemical_potentials(s.c, p, g);

  // Stabilization shift per phase S_i = S0 * sigma_i so that both implicit
  // coefficients, (M/sigma_i) S_i = M S0 and (M/sigma_i)(3/4) eps sigma_i =
  // (3/4) M eps, are phase independent: one SPD operator serves both solves
  // and the solved increments are exactly compatible with the partition of
  // unity.  S0 = 2 * (12/eps) dominates half the bulk curvature with margin.
  const double S0 = 24.0 / p.epsilon;
  const double op_a = dt * p.mobility * S0;
  const double op_b = dt * 0.75 * p.mobility * p.epsilon;

  PhaseTriple out(nx, ny);
  const BoundaryRule natural = BoundaryRule::natural(g);
  ScalarField adv(nx, ny), rhs(nx, ny), mi(nx, ny);

  for (int k = 0; k < 2; ++k) {
    const ScalarField& ck = s.c[k];
    const ScalarField& muk = mu[k];
    const double minv = p.mobility / p.sigma[k];

    // explicit advective flux v * avg(c) and its divergence
    VectorField flux(nx, ny);
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i <= nx; ++i)
        flux.u(i, j) = s.v.u(i, j) * 0.5 * (ck(i - 1, j) + ck(i, j));
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i < nx; ++i)
        flux.v(i, j) = s.v.v(i, j) * 0.5 * (ck(i, j - 1) + ck(i, j));
    adv = divergence(flux, g);

    // rhs = dt * (div((M/sigma) grad mu^n) - adv)
    VectorField q = gradient(muk, g);
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i <= nx; ++i) q.u(i, j) *= minv;
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i < nx; ++i) q.v(i, j) *= minv;
    const ScalarField dif = divergence(q, g);
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        rhs(i, j) = dt * (dif(i, j) - adv(i, j));

    ScalarField& dc = k == 0 ? s.dc_cache1 : s.dc_cache2;
    if (dc.nx() != nx || dc.ny() != ny) dc = ScalarField(nx, ny);
    solve_phase_operator(g, op_a, op_b, rhs, dc, 1e-12, "phase update");

    // Finalize in flux form at the implicit potential
    //   mu_imp = mu^n + S_i dc - (3/4) eps sigma_i lap(dc),
    // so the realized update is a pure face-flux divergence: per-phase mass
    // moves only through faces and wall fluxes vanish identically.
    sync_ghosts(dc, g, natural);
    const ScalarField ldc = laplacian(dc, g);
    const double shift = S0 * p.sigma[k];
    const double intf = 0.75 * p.epsilon * p.sigma[k];
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        mi(i, j) = muk(i, j) + shift * dc(i, j) - intf * ldc(i, j);
    sync_ghosts(mi, g, natural);
    VectorField qi = gradient(mi, g);
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i <= nx; ++i) qi.u(i, j) *= minv;
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i < nx; ++i) qi.v(i, j) *= minv;
    const ScalarField upd = divergence(qi, g);

    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        out[k](i, j) = ck(i, j) + dt * (upd(i, j) - adv(i, j));
  }

  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      out.c3(i, j) = 1.0 - out.c1(i, j) - out.c2(i, j);

  return out;
}

VectorField momentum_step(const FluidState& s, const PhaseTriple& c_new,
                          const ChemPotTriple& mu_new, double dt) {
  const Grid& g = s.grid;
  const MaterialParams& p = s.params;
  const int nx = g.nx, ny = g.ny;
  const ScalarField& u = s.v.u;
  const ScalarField& v = s.v.v;

  // conservative advection div(v x v) with centered face/corner averages
  VectorField adv(nx, ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      const double ucl = 0.5 * (u(i - 1, j) + u(i, j));
      const double ucr = 0.5 * (u(i, j) + u(i + 1, j));
      const double vb = 0.5 * (v(i - 1, j) + v(i, j));
      const double ub = 0.5 * (u(i, j - 1) + u(i, j));
      const double vt = 0.5 * (v(i - 1, j + 1) + v(i, j + 1));
      const double ut = 0.5 * (u(i, j) + u(i, j + 1));
      adv.u(i, j) =
          (ucr * ucr - ucl * ucl) / g.hx + (vt * ut - vb * ub) / g.hy;
    }
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const double vcb = 0.5 * (v(i, j - 1) + v(i, j));
      const double vct = 0.5 * (v(i, j) + v(i, j + 1));
      const double ul = 0.5 * (u(i, j - 1) + u(i, j));
      const double vl = 0.5 * (v(i - 1, j) + v(i, j));
      const double ur = 0.5 * (u(i + 1, j - 1) + u(i + 1, j));
      const double vr = 0.5 * (v(i, j) + v(i + 1, j));
      adv.v(i, j) =
          (ur * vr - ul * vl) / g.hx + (vct * vct - vcb * vcb) / g.hy;
    }

  const VectorField f = capillary_force(c_new, mu_new, g);

  ScalarField bu(nx + 1, ny), bv(nx, ny + 1);
  const double fdt = dt / p.rho;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i <= nx; ++i)
      bu(i, j) = u(i, j) + dt * (-adv.u(i, j)) + fdt * f.u(i, j);
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i < nx; ++i)
      bv(i, j) = v(i, j) + dt * (-adv.v(i, j)) + fdt * f.v(i, j);

  VectorField out = s.v;  // warm start
  const double coef = p.eta * dt / p.rho;
  if (coef > 0.0) {
    solve_velocity_helmholtz(g, 0, coef, bu, out.u, 1e-12, "viscous u");
    solve_velocity_helmholtz(g, 1, coef, bv, out.v, 1e-12, "viscous v");
  } else {
    out.u = bu;
    out.v = bv;
  }
  sync_velocity(out, g);
  return out;
}

void pressure_project(const Grid& g, const MaterialParams& p, double dt,
                      VectorField& vel, ScalarField& phi) {
  sync_velocity(vel, g);
  ScalarField rhs = divergence(vel, g);
  const double scale = p.rho / dt;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) rhs(i, j) *= scale;

  if (phi.nx() != g.nx || phi.ny() != g.ny) phi = ScalarField(g.nx, g.ny);
  solve_poisson(g, rhs, phi);
  sync_ghosts(phi, g, BoundaryRule::natural(g));

  const double s = dt / p.rho;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i <= g.nx; ++i)
      vel.u(i, j) -= s * (phi(i, j) - phi(i - 1, j)) / g.hx;
  for (int j = 0; j <= g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      vel.v(i, j) -= s * (phi(i, j) - phi(i, j - 1)) / g.hy;
  sync_velocity(vel, g);
}

FluidState step(const FluidState& s0, double dt) {
  FluidState s = s0;

  PhaseTriple c_new = phase_step(s, dt);
  sync_phases(c_new, s.grid, s.wetting, s.params);
  const ChemPotTriple mu_new = chemical_potentials(c_new, s.params, s.grid);
  VectorField v_star = momentum_step(s, c_new, mu_new, dt);
  pressure_project(s.grid, s.params, dt, v_star, s.p);

  s.c = std::move(c_new);
  s.v = std::move(v_star);
  s.time += dt;
  return s;
}

}  // namespace tricap
