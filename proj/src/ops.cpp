#include "tricap/ops.hpp"

#include <algorithm>
#include <cmath>

#include "tricap/errors.hpp"

namespace tricap {

Grid make_grid(int nx, int ny, double lx, double ly, BoundaryKind bx,
               BoundaryKind by) {
  if (nx < 4) throw InvalidParameter("nx");
  if (ny < 4) throw InvalidParameter("ny");
  if (!(lx > 0.0) || !std::isfinite(lx)) throw InvalidParameter("lx");
  if (!(ly > 0.0) || !std::isfinite(ly)) throw InvalidParameter("ly");
  Grid g;
  g.nx = nx;
  g.ny = ny;
  g.hx = lx / nx;
  g.hy = ly / ny;
  g.bx = bx;
  g.by = by;
  return g;
}

BoundaryRule BoundaryRule::natural(const Grid& g) {
  BoundaryRule r;
  r.x = g.bx == BoundaryKind::Periodic ? Kind::Periodic
                                       : Kind::ZeroNormalGradient;
  r.y = g.by == BoundaryKind::Periodic ? Kind::Periodic
                                       : Kind::ZeroNormalGradient;
  return r;
}

void sync_ghosts(ScalarField& f, const Grid& g, const BoundaryRule& rule) {
  const int nx = f.nx(), ny = f.ny();

  for (int j = 0; j < ny; ++j) {
    switch (rule.x) {
      case BoundaryRule::Kind::Periodic:
        f(-1, j) = f(nx - 1, j);
        f(nx, j) = f(0, j);
        break;
      case BoundaryRule::Kind::ZeroNormalGradient:
        f(-1, j) = f(0, j);
        f(nx, j) = f(nx - 1, j);
        break;
      case BoundaryRule::Kind::PrescribedNormalGradient: {
        const double hl = rule.left.empty() ? 0.0 : rule.left[j];
        const double hr = rule.right.empty() ? 0.0 : rule.right[j];
        f(-1, j) = f(0, j) + g.hx * hl;
        f(nx, j) = f(nx - 1, j) + g.hx * hr;
        break;
      }
    }
  }

  for (int i = -1; i <= nx; ++i) {
    const int ic = std::clamp(i, 0, nx - 1);
    switch (rule.y) {
      case BoundaryRule::Kind::Periodic:
        f(i, -1) = f(i, ny - 1);
        f(i, ny) = f(i, 0);
        break;
      case BoundaryRule::Kind::ZeroNormalGradient:
        f(i, -1) = f(i, 0);
        f(i, ny) = f(i, ny - 1);
        break;
      case BoundaryRule::Kind::PrescribedNormalGradient: {
        const double hb = rule.bottom.empty() ? 0.0 : rule.bottom[ic];
        const double ht = rule.top.empty() ? 0.0 : rule.top[ic];
        f(i, -1) = f(i, 0) + g.hy * hb;
        f(i, ny) = f(i, ny - 1) + g.hy * ht;
        break;
      }
    }
  }
}

void sync_u_faces(ScalarField& u, const Grid& g) {
  const int nx = g.nx, ny = g.ny;

  if (g.bx == BoundaryKind::Periodic) {
    for (int j = 0; j < ny; ++j) {
      u(nx, j) = u(0, j);
      u(-1, j) = u(nx - 1, j);
      u(nx + 1, j) = u(1, j);
    }
  } else {
    for (int j = 0; j < ny; ++j) {
      u(0, j) = 0.0;
      u(nx, j) = 0.0;
      u(-1, j) = -u(1, j);
      u(nx + 1, j) = -u(nx - 1, j);
    }
  }

  if (g.by == BoundaryKind::Periodic) {
    for (int i = -1; i <= nx + 1; ++i) {
      u(i, -1) = u(i, ny - 1);
      u(i, ny) = u(i, 0);
    }
  } else {
    for (int i = -1; i <= nx + 1; ++i) {
      u(i, -1) = -u(i, 0);
      u(i, ny) = -u(i, ny - 1);
    }
  }
}

void sync_v_faces(ScalarField& v, const Grid& g) {
  const int nx = g.nx, ny = g.ny;

  if (g.bx == BoundaryKind::Periodic) {
    for (int j = 0; j <= ny; ++j) {
      v(-1, j) = v(nx - 1, j);
      v(nx, j) = v(0, j);
    }
  } else {
    for (int j = 0; j <= ny; ++j) {
      v(-1, j) = -v(0, j);
      v(nx, j) = -v(nx - 1, j);
    }
  }

  if (g.by == BoundaryKind::Periodic) {
    for (int i = -1; i <= nx; ++i) {
      v(i, ny) = v(i, 0);
      v(i, -1) = v(i, ny - 1);
      v(i, ny + 1) = v(i, 1);
    }
  } else {
    for (int i = -1; i <= nx; ++i) {
      v(i, 0) = 0.0;
      v(i, ny) = 0.0;
      v(i, -1) = -v(i, 1);
      v(i, ny + 1) = -v(i, ny - 1);
    }
  }
}

void sync_velocity(VectorField& vel, const Grid& g) {
  sync_u_faces(vel.u, g);
  sync_v_faces(vel.v, g);
}

VectorField gradient(const ScalarField& f, const Grid& g) {
  VectorField out(g.nx, g.ny);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i <= g.nx; ++i)
      out.u(i, j) = (f(i, j) - f(i - 1, j)) / g.hx;
  for (int j = 0; j <= g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      out.v(i, j) = (f(i, j) - f(i, j - 1)) / g.hy;
  return out;
}

ScalarField divergence(const VectorField& vel, const Grid& g) {
  ScalarField out(g.nx, g.ny);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      out(i, j) = (vel.u(i + 1, j) - vel.u(i, j)) / g.hx +
                  (vel.v(i, j + 1) - vel.v(i, j)) / g.hy;
  return out;
}

ScalarField laplacian(const ScalarField& f, const Grid& g) {
  ScalarField out(g.nx, g.ny);
  const double ax = 1.0 / (g.hx * g.hx), ay = 1.0 / (g.hy * g.hy);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      out(i, j) = ax * (f(i + 1, j) - 2.0 * f(i, j) + f(i - 1, j)) +
                  ay * (f(i, j + 1) - 2.0 * f(i, j) + f(i, j - 1));
  return out;
}

double integrate(const ScalarField& f, const Grid& g) {
  KahanSum s;
  for (int j = 0; j < f.ny(); ++j)
    for (int i = 0; i < f.nx(); ++i) s.add(f(i, j));
  return s.get() * g.hx * g.hy;
}

double integrate_faces(const VectorField& a, const VectorField& b,
                       const Grid& g) {
  KahanSum s;
  const double vol = g.hx * g.hy;
  const int nx = g.nx, ny = g.ny;

  if (g.bx == BoundaryKind::Periodic) {
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) s.add(a.u(i, j) * b.u(i, j) * vol);
  } else {
    for (int j = 0; j < ny; ++j) {
      s.add(0.5 * a.u(0, j) * b.u(0, j) * vol);
      for (int i = 1; i < nx; ++i) s.add(a.u(i, j) * b.u(i, j) * vol);
      s.add(0.5 * a.u(nx, j) * b.u(nx, j) * vol);
    }
  }

  if (g.by == BoundaryKind::Periodic) {
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) s.add(a.v(i, j) * b.v(i, j) * vol);
  } else {
    for (int i = 0; i < nx; ++i) {
      s.add(0.5 * a.v(i, 0) * b.v(i, 0) * vol);
      s.add(0.5 * a.v(i, ny) * b.v(i, ny) * vol);
    }
    for (int j = 1; j < ny; ++j)
      for (int i = 0; i < nx; ++i) s.add(a.v(i, j) * b.v(i, j) * vol);
  }

  return s.get();
}

VectorField to_faces(const ScalarField& f, const Grid& g) {
  VectorField out(g.nx, g.ny);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i <= g.nx; ++i)
      out.u(i, j) = 0.5 * (f(i - 1, j) + f(i, j));
  for (int j = 0; j <= g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      out.v(i, j) = 0.5 * (f(i, j - 1) + f(i, j));
  return out;
}

}  // namespace tricap
