#include "tricap/measure.hpp"

#include <algorithm>
#include <cmath>

#include "tricap/energy.hpp"
#include "tricap/errors.hpp"
#include "tricap/wetting.hpp"

namespace tricap {

namespace {

constexpr double kPi = 3.14159265358979323846;

double value(const Snapshot& s, const std::vector<double>& f, int i, int j) {
  return f[static_cast<std::size_t>(j) * s.nx + i];
}

}  // namespace

std::vector<ContourPoint> contour_points(const Snapshot& snap,
                                         const std::string& field,
                                         double level) {
  const std::vector<double>& f = snap.field(field);
  std::vector<ContourPoint> pts;
  for (int j = 0; j < snap.ny; ++j) {
    for (int i = 0; i < snap.nx; ++i) {
      const double f0 = value(snap, f, i, j) - level;
      if (i + 1 < snap.nx) {
        const double f1 = value(snap, f, i + 1, j) - level;
        if (f0 * f1 < 0.0) {
          const double t = f0 / (f0 - f1);
          pts.push_back({snap.ox + (i + t) * snap.hx, snap.oy + j * snap.hy});
        }
      }
      if (j + 1 < snap.ny) {
        const double f1 = value(snap, f, i, j + 1) - level;
        if (f0 * f1 < 0.0) {
          const double t = f0 / (f0 - f1);
          pts.push_back({snap.ox + i * snap.hx, snap.oy + (j + t) * snap.hy});
        }
      }
    }
  }
  return pts;
}

double sample(const Snapshot& snap, const std::string& field, double x,
              double y) {
  const std::vector<double>& f = snap.field(field);
  double fx = (x - snap.ox) / snap.hx;
  double fy = (y - snap.oy) / snap.hy;
  fx = std::clamp(fx, 0.0, snap.nx - 1.0);
  fy = std::clamp(fy, 0.0, snap.ny - 1.0);
  const int i = std::min(static_cast<int>(fx), snap.nx - 2);
  const int j = std::min(static_cast<int>(fy), snap.ny - 2);
  const double ax = fx - i, ay = fy - j;
  return (1 - ax) * (1 - ay) * value(snap, f, i, j) +
         ax * (1 - ay) * value(snap, f, i + 1, j) +
         (1 - ax) * ay * value(snap, f, i, j + 1) +
         ax * ay * value(snap, f, i + 1, j + 1);
}

CircleFit fit_circle(const std::vector<ContourPoint>& pts) {
  if (pts.size() < 8)
    throw ContourNotFound("too few contour points for a circle fit");
  // Least squares on x^2 + y^2 + D x + E y + F = 0.
  double sxx = 0, sxy = 0, syy = 0, sx = 0, sy = 0, n = 0;
  double sxz = 0, syz = 0, sz = 0;
  for (const auto& p : pts) {
    const double z = -(p.x * p.x + p.y * p.y);
    sxx += p.x * p.x;
    sxy += p.x * p.y;
    syy += p.y * p.y;
    sx += p.x;
    sy += p.y;
    sxz += p.x * z;
    syz += p.y * z;
    sz += z;
    n += 1;
  }
  // Solve [sxx sxy sx; sxy syy sy; sx sy n] [D E F]^T = [sxz syz sz]^T.
  const double a11 = sxx, a12 = sxy, a13 = sx;
  const double a22 = syy, a23 = sy, a33 = n;
  const double det = a11 * (a22 * a33 - a23 * a23) -
                     a12 * (a12 * a33 - a23 * a13) +
                     a13 * (a12 * a23 - a22 * a13);
  const double scale = std::max({std::abs(sxx), std::abs(syy), n});
  if (std::abs(det) < 1e-12 * scale * scale * scale)
    throw ContourNotFound("degenerate circle fit");
  const double d = (sxz * (a22 * a33 - a23 * a23) -
                    a12 * (syz * a33 - a23 * sz) +
                    a13 * (syz * a23 - a22 * sz)) /
                   det;
  const double e = (a11 * (syz * a33 - a23 * sz) -
                    sxz * (a12 * a33 - a23 * a13) +
                    a13 * (a12 * sz - syz * a13)) /
                   det;
  const double g = (a11 * (a22 * sz - syz * a23) -
                    a12 * (a12 * sz - syz * a13) +
                    sxz * (a12 * a23 - a22 * a13)) /
                   det;
  CircleFit c;
  c.xc = -0.5 * d;
  c.yc = -0.5 * e;
  const double r2 = c.xc * c.xc + c.yc * c.yc - g;
  if (!(r2 > 0.0)) throw ContourNotFound("circle fit has no radius");
  c.r = std::sqrt(r2);
  return c;
}

AngleResult measure_contact_angle(const Snapshot& snap) {
  const double eps = snap.meta_or("eps", 3.0 * snap.hy);
  const double ycut = std::max(1.5 * eps, 2.0 * snap.hy);
  std::vector<ContourPoint> pts;
  for (const auto& p : contour_points(snap, "c1", 0.5))
    if (p.y > ycut) pts.push_back(p);
  const CircleFit c = fit_circle(pts);
  AngleResult res;
  res.cos_theta = std::clamp(-c.yc / c.r, -1.0, 1.0);
  res.theta_deg = std::acos(res.cos_theta) * 180.0 / kPi;
  return res;
}

namespace {

struct Vec2 {
  double x = 0.0, y = 0.0;
};

Vec2 normalize(Vec2 v) {
  const double n = std::hypot(v.x, v.y);
  return {v.x / n, v.y / n};
}

/// Tangent of the circle at point t, oriented so that it points toward ref.
Vec2 circle_tangent(const CircleFit& c, const ContourPoint& t, Vec2 ref) {
  Vec2 rad{t.x - c.xc, t.y - c.yc};
  Vec2 tan{-rad.y, rad.x};
  if (tan.x * ref.x + tan.y * ref.y < 0.0) tan = {-tan.x, -tan.y};
  return normalize(tan);
}

/// Both intersection points of two circles; throws if they do not meet.
std::pair<ContourPoint, ContourPoint> circle_intersections(
    const CircleFit& a, const CircleFit& b) {
  const double dx = b.xc - a.xc, dy = b.yc - a.yc;
  const double d = std::hypot(dx, dy);
  if (d < 1e-14) throw ContourNotFound("concentric arc fits");
  const double l = (a.r * a.r - b.r * b.r + d * d) / (2.0 * d);
  const double h2 = a.r * a.r - l * l;
  if (!(h2 > 0.0)) throw ContourNotFound("lens arcs do not intersect");
  const double h = std::sqrt(h2);
  const double ex = dx / d, ey = dy / d;
  const double px = a.xc + l * ex, py = a.yc + l * ey;
  return {{px - h * ey, py + h * ex}, {px + h * ey, py - h * ex}};
}

}  // namespace

LensAngles measure_lens_angles(const Snapshot& snap) {
  const double eps = snap.meta_or("eps", 3.0 * snap.hy);
  const std::vector<ContourPoint> lens = contour_points(snap, "c3", 0.5);
  if (lens.size() < 16) throw ContourNotFound("no lens boundary");

  auto split_arcs = [&](double tip_exclusion,
                        const std::vector<ContourPoint>& tips) {
    std::pair<std::vector<ContourPoint>, std::vector<ContourPoint>> arcs;
    for (const auto& p : lens) {
      bool near_tip = false;
      for (const auto& t : tips)
        near_tip |= std::hypot(p.x - t.x, p.y - t.y) < tip_exclusion;
      if (near_tip) continue;
      const double s = sample(snap, "c1", p.x, p.y) -
                       sample(snap, "c2", p.x, p.y);
      if (s > 0.2) arcs.first.push_back(p);   // lower arc, against phase 1
      if (s < -0.2) arcs.second.push_back(p);  // upper arc, against phase 2
    }
    return arcs;
  };

  // First pass locates the tips, second pass refits without the diffuse
  // triple-junction neighborhoods.
  auto arcs = split_arcs(0.0, {});
  CircleFit lower = fit_circle(arcs.first);
  CircleFit upper = fit_circle(arcs.second);
  auto tips = circle_intersections(lower, upper);
  arcs = split_arcs(3.0 * eps, {tips.first, tips.second});
  lower = fit_circle(arcs.first);
  upper = fit_circle(arcs.second);
  tips = circle_intersections(lower, upper);

  // Far 1-2 interface direction from a principal-component line fit.
  std::vector<ContourPoint> far;
  for (const auto& p : contour_points(snap, "c1", 0.5))
    if (sample(snap, "c3", p.x, p.y) < 0.05) far.push_back(p);
  if (far.size() < 8) throw ContourNotFound("no far interface");
  double mx = 0, my = 0;
  for (const auto& p : far) {
    mx += p.x;
    my += p.y;
  }
  mx /= far.size();
  my /= far.size();
  double cxx = 0, cxy = 0, cyy = 0;
  for (const auto& p : far) {
    cxx += (p.x - mx) * (p.x - mx);
    cxy += (p.x - mx) * (p.y - my);
    cyy += (p.y - my) * (p.y - my);
  }
  const double tr = cxx + cyy, df = cxx - cyy;
  const double lam = 0.5 * (tr + std::sqrt(df * df + 4 * cxy * cxy));
  Vec2 line_dir = normalize(std::abs(lam - cxx) > std::abs(cxy)
                                ? Vec2{cxy, lam - cxx}
                                : Vec2{lam - cyy, cxy});

  // Lens centroid for orienting branch directions.
  double gx = 0, gy = 0;
  for (const auto& p : lens) {
    gx += p.x;
    gy += p.y;
  }
  gx /= lens.size();
  gy /= lens.size();

  LensAngles acc{};
  for (const ContourPoint& t : {tips.first, tips.second}) {
    const Vec2 inward{gx - t.x, gy - t.y};
    const Vec2 t_lo = circle_tangent(lower, t, inward);
    const Vec2 t_up = circle_tangent(upper, t, inward);
    Vec2 t_far = line_dir;
    if (t_far.x * inward.x + t_far.y * inward.y > 0.0)
      t_far = {-t_far.x, -t_far.y};

    // Sort branch directions by polar angle; each wedge between neighbors
    // belongs to the phase found along its bisector.
    double a[3] = {std::atan2(t_lo.y, t_lo.x), std::atan2(t_up.y, t_up.x),
                   std::atan2(t_far.y, t_far.x)};
    std::sort(a, a + 3);
    const double probe = 4.0 * std::max(snap.hx, eps / 2.0);
    for (int k = 0; k < 3; ++k) {
      const double a0 = a[k];
      const double a1 = k + 1 < 3 ? a[k + 1] : a[0] + 2.0 * kPi;
      const double wedge = a1 - a0;
      const double bis = a0 + 0.5 * wedge;
      const double px = t.x + probe * std::cos(bis);
      const double py = t.y + probe * std::sin(bis);
      const double c1 = sample(snap, "c1", px, py);
      const double c2 = sample(snap, "c2", px, py);
      const double c3 = sample(snap, "c3", px, py);
      const double deg = wedge * 180.0 / kPi;
      if (c1 >= c2 && c1 >= c3) acc.theta1 += deg;
      else if (c2 >= c3) acc.theta2 += deg;
      else acc.theta3 += deg;
    }
  }
  return {0.5 * acc.theta1, 0.5 * acc.theta2, 0.5 * acc.theta3};
}

double measure_sigma(const Snapshot& snap) {
  MaterialParams p;
  p.gamma12 = snap.meta_or("g12", 0.0);
  p.gamma13 = snap.meta_or("g13", 0.0);
  p.gamma23 = snap.meta_or("g23", 0.0);
  p.epsilon = snap.meta_or("eps", 0.0);
  p.mobility = snap.meta_or("M", 0.0);
  p.rho = snap.meta_or("rho", 1.0);
  p.eta = snap.meta_or("eta", 0.0);
  p = validate(p);

  const BoundaryKind bx = snap.meta_or("bx", 0.0) != 0.0
                              ? BoundaryKind::Wall
                              : BoundaryKind::Periodic;
  const BoundaryKind by = snap.meta_or("by", 0.0) != 0.0
                              ? BoundaryKind::Wall
                              : BoundaryKind::Periodic;
  const Grid g = make_grid(snap.nx, snap.ny, snap.nx * snap.hx,
                           snap.ny * snap.hy, bx, by);

  PhaseTriple c(snap.nx, snap.ny);
  const char* names[3] = {"c1", "c2", "c3"};
  for (int k = 0; k < 3; ++k) {
    const std::vector<double>& f = snap.field(names[k]);
    for (int j = 0; j < snap.ny; ++j)
      for (int i = 0; i < snap.nx; ++i) c[k](i, j) = value(snap, f, i, j);
  }
  sync_phases(c, g, WallWetting{}, p);
  return free_energy(c, p, g) / g.ly();
}

}  // namespace tricap
