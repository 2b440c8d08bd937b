#include "tricap/linsolve.hpp"

#include <cmath>

#include "tricap/errors.hpp"
#include "tricap/ops.hpp"

namespace tricap {

namespace {

double dot_box(const ScalarField& a, const ScalarField& b, const IndexBox& bx) {
  KahanSum s;
  for (int j = bx.j0; j < bx.j1; ++j)
    for (int i = bx.i0; i < bx.i1; ++i) s.add(a(i, j) * b(i, j));
  return s.get();
}

}  // namespace

CgResult cg(const std::function<void(ScalarField&, ScalarField&)>& apply,
            const IndexBox& box, const ScalarField& b, ScalarField& x,
            double tol, int max_iter, const char* label) {
  const double bnorm = std::sqrt(dot_box(b, b, box));
  if (bnorm == 0.0) {
    for (int j = box.j0; j < box.j1; ++j)
      for (int i = box.i0; i < box.i1; ++i) x(i, j) = 0.0;
    return {0, 0.0};
  }

  ScalarField r(b.nx(), b.ny()), p(b.nx(), b.ny()), ap(b.nx(), b.ny());

  apply(x, ap);
  for (int j = box.j0; j < box.j1; ++j)
    for (int i = box.i0; i < box.i1; ++i) {
      r(i, j) = b(i, j) - ap(i, j);
      p(i, j) = r(i, j);
    }

  double rr = dot_box(r, r, box);
  if (std::sqrt(rr) <= tol * bnorm) return {0, std::sqrt(rr) / bnorm};

  for (int it = 1; it <= max_iter; ++it) {
    apply(p, ap);
    const double pap = dot_box(p, ap, box);
    if (!(pap > 0.0)) throw LinearSolveFailure(label, it, std::sqrt(rr) / bnorm);
    const double alpha = rr / pap;
    for (int j = box.j0; j < box.j1; ++j)
      for (int i = box.i0; i < box.i1; ++i) {
        x(i, j) += alpha * p(i, j);
        r(i, j) -= alpha * ap(i, j);
      }
    const double rr_new = dot_box(r, r, box);
    if (std::sqrt(rr_new) <= tol * bnorm)
      return {it, std::sqrt(rr_new) / bnorm};
    const double beta = rr_new / rr;
    rr = rr_new;
    for (int j = box.j0; j < box.j1; ++j)
      for (int i = box.i0; i < box.i1; ++i)
        p(i, j) = r(i, j) + beta * p(i, j);
  }
  throw LinearSolveFailure(label, max_iter, std::sqrt(rr) / bnorm);
}

CgResult solve_poisson(const Grid& g, const ScalarField& rhs,
                       ScalarField& phi) {
  const int nx = g.nx, ny = g.ny;
  const IndexBox box{0, nx, 0, ny};
  const double ax = 1.0 / (g.hx * g.hx), ay = 1.0 / (g.hy * g.hy);
  const BoundaryRule rule = BoundaryRule::natural(g);

  // The all-Neumann / periodic Laplacian is singular with a constant null
  // space: project the right-hand side onto mean zero for consistency and
  // return a mean-free phi.
  const double cells = static_cast<double>(nx) * ny;
  ScalarField b(nx, ny);
  {
    KahanSum s;
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) s.add(rhs(i, j));
    const double mean = s.get() / cells;
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) b(i, j) = -(rhs(i, j) - mean);
  }
  {
    KahanSum s;
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) s.add(phi(i, j));
    const double mean = s.get() / cells;
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) phi(i, j) -= mean;
  }

  auto apply = [&g, &rule, ax, ay](ScalarField& in, ScalarField& out) {
    sync_ghosts(in, g, rule);
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        out(i, j) = -(ax * (in(i + 1, j) - 2.0 * in(i, j) + in(i - 1, j)) +
                      ay * (in(i, j + 1) - 2.0 * in(i, j) + in(i, j - 1)));
  };

  CgResult res;
  try {
    res = cg(apply, box, b, phi, 1e-10, 10 * (nx + ny), "pressure Poisson");
  } catch (const LinearSolveFailure& e) {
    throw PoissonSolveFailure(e.iterations, e.rel_residual);
  }

  KahanSum s;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) s.add(phi(i, j));
  const double mean = s.get() / cells;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) phi(i, j) -= mean;
  return res;
}

CgResult solve_phase_operator(const Grid& g, double a, double b,
                              const ScalarField& rhs, ScalarField& x,
                              double tol, const char* label) {
  const int nx = g.nx, ny = g.ny;
  const IndexBox box{0, nx, 0, ny};
  const double ax = 1.0 / (g.hx * g.hx), ay = 1.0 / (g.hy * g.hy);
  const BoundaryRule rule = BoundaryRule::natural(g);
  ScalarField l1(nx, ny);

  auto apply = [&](ScalarField& in, ScalarField& out) {
    sync_ghosts(in, g, rule);
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        l1(i, j) = ax * (in(i + 1, j) - 2.0 * in(i, j) + in(i - 1, j)) +
                   ay * (in(i, j + 1) - 2.0 * in(i, j) + in(i, j - 1));
    sync_ghosts(l1, g, rule);
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        out(i, j) = in(i, j) - a * l1(i, j) +
                    b * (ax * (l1(i + 1, j) - 2.0 * l1(i, j) + l1(i - 1, j)) +
                         ay * (l1(i, j + 1) - 2.0 * l1(i, j) + l1(i, j - 1)));
  };

  return cg(apply, box, rhs, x, tol, 10 * (nx + ny), label);
}

CgResult solve_velocity_helmholtz(const Grid& g, int comp, double coef,
                                  const ScalarField& b, ScalarField& x,
                                  double tol, const char* label) {
  const int nx = g.nx, ny = g.ny;
  const double ax = 1.0 / (g.hx * g.hx), ay = 1.0 / (g.hy * g.hy);

  IndexBox box;
  if (comp == 0) {
    const bool wall = g.bx == BoundaryKind::Wall;
    box = {wall ? 1 : 0, nx, 0, ny};
  } else {
    const bool wall = g.by == BoundaryKind::Wall;
    box = {0, nx, wall ? 1 : 0, ny};
  }

  auto apply = [&g, comp, coef, ax, ay, box](ScalarField& in,
                                             ScalarField& out) {
    if (comp == 0)
      sync_u_faces(in, g);
    else
      sync_v_faces(in, g);
    for (int j = box.j0; j < box.j1; ++j)
      for (int i = box.i0; i < box.i1; ++i)
        out(i, j) =
            in(i, j) -
            coef * (ax * (in(i + 1, j) - 2.0 * in(i, j) + in(i - 1, j)) +
                    ay * (in(i, j + 1) - 2.0 * in(i, j) + in(i, j - 1)));
  };

  return cg(apply, box, b, x, tol, 10 * (nx + ny), label);
}

}  // namespace tricap
