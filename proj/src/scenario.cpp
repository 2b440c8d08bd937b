#include "tricap/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "tricap/errors.hpp"
#include "tricap/ops.hpp"
#include "tricap/vtk.hpp"

namespace tricap {

namespace {

/// Deterministic uniform double in [0,1): fixed 53-bit mapping of the fully
/// specified mt19937_64 stream, so identical seeds give identical fields on
/// every platform.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double tanh_profile(double signed_distance, double eps) {
  return 0.5 * (1.0 + std::tanh(2.0 * signed_distance / eps));
}

WallWetting wetting_from(const ScenarioConfig& cfg) {
  WallWetting w;
  w.left.gamma_s = cfg.wall_gs[0];
  w.right.gamma_s = cfg.wall_gs[1];
  w.bottom.gamma_s = cfg.wall_gs[2];
  w.top.gamma_s = cfg.wall_gs[3];
  return w;
}

}  // namespace

FluidState build_fluid(const ScenarioConfig& cfg) {
  BoundaryKind bx = BoundaryKind::Periodic, by = BoundaryKind::Periodic;
  if (cfg.name == "interface1d") bx = BoundaryKind::Wall;
  if (cfg.name == "lens" || cfg.name == "sessile_drop")
    by = BoundaryKind::Wall;

  const Grid g = make_grid(cfg.nx, cfg.ny, cfg.lx, cfg.ly, bx, by);
  MaterialParams p = cfg.mat;
  if (p.epsilon == 0.0) p.epsilon = 3.0 * std::min(g.hx, g.hy);
  p = validate(p);
  const WallWetting w = wetting_from(cfg);
  FluidState s = make_state(g, p, w);
  const double eps = p.epsilon;

  if (cfg.name == "spinodal") {
    std::mt19937_64 rng(cfg.seed);
    if (cfg.phases == 3) {
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
          const double a = 1.0 / 3.0 + 0.01 * (2.0 * unit(rng) - 1.0);
          const double b = 1.0 / 3.0 + 0.01 * (2.0 * unit(rng) - 1.0);
          s.c.c1(i, j) = a;
          s.c.c2(i, j) = b;
          s.c.c3(i, j) = 1.0 - a - b;
        }
    } else {
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
          const double a = 0.5 + 0.01 * (2.0 * unit(rng) - 1.0);
          s.c.c1(i, j) = a;
          s.c.c2(i, j) = 1.0 - a;
          s.c.c3(i, j) = 0.0;
        }
    }
  } else if (cfg.name == "interface1d") {
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const double a = tanh_profile(g.xc(i) - 0.5 * g.lx(), eps);
        s.c.c1(i, j) = a;
        s.c.c2(i, j) = 1.0 - a;
        s.c.c3(i, j) = 0.0;
      }
  } else if (cfg.name == "lens") {
    const double r0 = 0.15 * std::min(g.lx(), g.ly());
    const double x0 = 0.5 * g.lx(), y0 = 0.5 * g.ly();
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const double r = std::hypot(g.xc(i) - x0, g.yc(j) - y0);
        const double disk = tanh_profile(r0 - r, eps);
        const double lower = tanh_profile(y0 - g.yc(j), eps);
        s.c.c3(i, j) = disk;
        s.c.c1(i, j) = (1.0 - disk) * lower;
        s.c.c2(i, j) = 1.0 - s.c.c1(i, j) - disk;
      }
  } else if (cfg.name == "sessile_drop") {
    const double r0 = 0.25 * g.lx();
    const double x0 = 0.5 * g.lx();
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const double r = std::hypot(g.xc(i) - x0, g.yc(j));
        const double a = tanh_profile(r0 - r, eps);
        s.c.c1(i, j) = a;
        s.c.c2(i, j) = 1.0 - a;
        s.c.c3(i, j) = 0.0;
      }
  } else if (cfg.name == "stokes_decay") {
    s.c.c1.fill(1.0);
    s.c.c2.fill(0.0);
    s.c.c3.fill(0.0);
    const double k = 2.0 * 3.14159265358979323846 / g.ly();
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i <= g.nx; ++i)
        s.v.u(i, j) = 0.1 * std::cos(k * g.yc(j));
  } else {
    throw InvalidParameter("scenario name '" + cfg.name + "'");
  }

  sync_phases(s.c, g, w, p);
  sync_velocity(s.v, g);
  return s;
}

SolidState build_solid(const ScenarioConfig& cfg) {
  const SolidMesh mesh = make_solid_mesh(cfg.nex, cfg.ney, cfg.slx, cfg.sly);
  SolidBCs bcs = cfg.sbcs;
  if (cfg.name == "solid_vibration") {
    bcs.roller_left = true;  // the fixed end of the bar
    bcs.traction_left = bcs.traction_right = {0.0, 0.0};
    bcs.traction_bottom = bcs.traction_top = {0.0, 0.0};
  } else if (cfg.name != "solid_traction") {
    throw InvalidParameter("scenario name '" + cfg.name + "'");
  }
  SolidState s = make_solid_state(mesh, cfg.smat, bcs);
  if (cfg.name == "solid_vibration") {
    const double half_pi = 0.5 * 3.14159265358979323846;
    for (int j = 0; j < mesh.nny(); ++j)
      for (int i = 0; i < mesh.nnx(); ++i) {
        const double X = mesh.hx() * i;
        s.u[2 * mesh.node(i, j)] =
            cfg.amplitude * std::sin(half_pi * X / mesh.lx);
      }
  }
  return s;
}

namespace {

std::string snapshot_name(int step) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "fields_%06d.vtk", step);
  return buf;
}

void write_manifest(const std::string& outdir, const ScenarioConfig& cfg,
                    const RunResult& res, double dt_last,
                    const std::vector<std::string>& files) {
  nlohmann::json j;
  j["scenario"] = cfg.name;
  j["steps"] = res.steps;
  j["time"] = res.time;
  j["dt_last"] = dt_last;
  j["seed"] = cfg.seed;
  j["total_energy"] = res.last.total;
  if (is_solid_scenario(cfg.name)) {
    j["mesh"] = {cfg.nex, cfg.ney};
  } else {
    j["grid"] = {cfg.nx, cfg.ny};
  }
  j["files"] = files;
  j["status"] = "ok";
  std::ofstream out(outdir + "/run.json");
  if (!out) throw IoFailure("cannot open " + outdir + "/run.json");
  out << j.dump(2) << "\n";
}

RunResult run_fluid(const ScenarioConfig& cfg, const std::string& outdir) {
  FluidState s = build_fluid(cfg);
  LedgerWriter lw(outdir + "/energy.csv");
  std::vector<std::string> files = {"energy.csv"};

  EnergyLedger prev = ledger(s);
  lw.append(prev, 0.0, 0.0);
  files.push_back(snapshot_name(0));
  write_snapshot(outdir + "/" + files.back(), s);

  const bool dissipative = s.params.mobility > 0.0 || s.params.eta > 0.0;
  const double t_end = cfg.end_time;
  int n = 0;
  double dt = 0.0;
  while (cfg.steps > 0 ? n < cfg.steps
                       : s.time < t_end * (1.0 - 1e-12)) {
    dt = cfg.dt_auto ? auto_dt(s) : cfg.dt;
    if (cfg.steps == 0) dt = std::min(dt, t_end - s.time);
    s = step(s, dt);
    ++n;

    const EnergyLedger cur = ledger(s);
    if (!std::isfinite(cur.total))
      throw MonitorTrip("nan", s.time, "total energy is not finite");
    const double defect = s.c.sum_defect();
    if (defect > 1e-10)
      throw MonitorTrip("sum-constraint", s.time,
                        "max|1 - sum c| = " + std::to_string(defect));
    if (dissipative &&
        cur.total > prev.total + 1e-10 * std::abs(prev.total))
      throw MonitorTrip("energy-increase", s.time,
                        "dE = " + std::to_string(cur.total - prev.total));

    const auto [r, rrel] = balance_residual(prev, cur, dt);
    lw.append(cur, r, rrel);
    if (n % cfg.cadence == 0) {
      files.push_back(snapshot_name(n));
      write_snapshot(outdir + "/" + files.back(), s);
    }
    prev = cur;
  }

  files.push_back("fields_final.vtk");
  write_snapshot(outdir + "/fields_final.vtk", s);
  RunResult res{n, s.time, prev};
  files.push_back("run.json");
  write_manifest(outdir, cfg, res, dt, files);
  return res;
}

RunResult run_solid(const ScenarioConfig& cfg, const std::string& outdir) {
  SolidState s = build_solid(cfg);
  LedgerWriter lw(outdir + "/energy.csv");
  std::ofstream tip(outdir + "/solid.csv");
  if (!tip) throw IoFailure("cannot open " + outdir + "/solid.csv");
  tip << "t,tip_ux,tip_uy,ke,strain,traction_power,residual\n";
  const int tip_node = s.mesh.node(s.mesh.nex, s.mesh.ney / 2);

  EnergyLedger prev = ledger(s);
  lw.append(prev, 0.0, 0.0);

  const double dt =
      cfg.dt_auto ? 0.5 * solid_dt_bound(s.mesh, s.mat) : cfg.dt;
  const int steps = cfg.steps > 0
                        ? cfg.steps
                        : static_cast<int>(std::ceil(cfg.end_time / dt));
  auto emit_tip = [&](const EnergyLedger& l, double pw, double r) {
    char buf[240];
    std::snprintf(buf, sizeof(buf),
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", l.time,
                  s.u[2 * tip_node], s.u[2 * tip_node + 1], l.ke_solid,
                  l.strain_solid, pw, r);
    tip << buf;
  };
  emit_tip(prev, 0.0, 0.0);

  for (int n = 0; n < steps; ++n) {
    SolidState next = advance_solid(s, dt);
    const EnergyLedger cur = ledger(next);
    if (!std::isfinite(cur.total))
      throw MonitorTrip("nan", next.time, "total energy is not finite");
    const double pw = traction_power(s, next);
    const double r = (cur.total - prev.total) / dt - pw;
    const double rrel = cur.total != 0.0 ? r / std::abs(cur.total) : r;
    lw.append(cur, r, rrel);
    s = std::move(next);
    emit_tip(cur, pw, r);
    prev = cur;
  }

  RunResult res{steps, s.time, prev};
  write_manifest(outdir, cfg, res, dt,
                 {"energy.csv", "solid.csv", "run.json"});
  return res;
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg, const std::string& outdir) {
  std::filesystem::create_directories(outdir);
  if (is_solid_scenario(cfg.name)) return run_solid(cfg, outdir);
  return run_fluid(cfg, outdir);
}

}  // namespace tricap
