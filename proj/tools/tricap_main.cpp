#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "tricap/config.hpp"
#include "tricap/errors.hpp"
#include "tricap/measure.hpp"
#include "tricap/scenario.hpp"
#include "tricap/vtk.hpp"

namespace {

struct Failure {
  int exit_code;
  std::string slug;
  std::string message;
};

/// One line on stderr, machine parsable, nonzero exit.
int fail(const Failure& f) {
  std::fprintf(stderr, "tricap-error code=%s: %s\n", f.slug.c_str(),
               f.message.c_str());
  return f.exit_code;
}

Failure classify(const std::exception& e) {
  using namespace tricap;
  if (auto* m = dynamic_cast<const MonitorTrip*>(&e))
    return {3, "monitor-" + m->code, e.what()};
  if (dynamic_cast<const ParseError*>(&e)) return {2, "parse", e.what()};
  if (dynamic_cast<const UnknownKey*>(&e))
    return {2, "unknown-key", e.what()};
  if (dynamic_cast<const InvalidParameter*>(&e))
    return {2, "invalid-parameter", e.what()};
  if (dynamic_cast<const TotalSpreading*>(&e))
    return {2, "total-spreading", e.what()};
  if (dynamic_cast<const CflViolation*>(&e)) return {3, "cfl", e.what()};
  if (dynamic_cast<const PoissonSolveFailure*>(&e))
    return {3, "poisson-solve", e.what()};
  if (dynamic_cast<const LinearSolveFailure*>(&e))
    return {3, "linear-solve", e.what()};
  if (dynamic_cast<const Inverted*>(&e)) return {3, "inverted", e.what()};
  if (dynamic_cast<const ContourNotFound*>(&e))
    return {5, "contour", e.what()};
  if (dynamic_cast<const IoFailure*>(&e)) return {4, "io", e.what()};
  return {1, "internal", e.what()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tricap: three-phase flow simulator with an energy audit, plus a "
      "standalone elastic-solid solver"};
  app.require_subcommand(1);
  app.footer(tricap::config_reference() +
             "\nexit codes: 0 ok, 2 config, 3 runtime guard/monitor, 4 io, "
             "5 measurement\n");

  std::string config_path, outdir = "out", snapshot_path, quantity;
  long long seed_override = -1;
  int steps_override = 0;

  CLI::App* run = app.add_subcommand("run", "execute a configured scenario");
  run->add_option("config", config_path, "config file")->required();
  run->add_option("--out", outdir, "output directory (default: out)");
  run->add_option("--seed", seed_override, "override the config seed");
  run->add_option("--steps", steps_override,
                  "override the config step count");

  CLI::App* measure =
      app.add_subcommand("measure", "evaluate a snapshot diagnostic");
  measure->add_option("snapshot", snapshot_path, "snapshot file")->required();
  measure->add_option("--quantity", quantity, "angle | lens | sigma")
      ->required()
      ->check(CLI::IsMember({"angle", "lens", "sigma"}));

  CLI::App* check =
      app.add_subcommand("check", "validate a config without running");
  check->add_option("config", config_path, "config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      tricap::ScenarioConfig cfg = tricap::load_config(config_path);
      if (seed_override >= 0)
        cfg.seed = static_cast<unsigned long long>(seed_override);
      if (steps_override > 0) cfg.steps = steps_override;
      const tricap::RunResult res = tricap::run_scenario(cfg, outdir);
      std::printf("ok scenario=%s steps=%d time=%.17g total_energy=%.17g\n",
                  cfg.name.c_str(), res.steps, res.time, res.last.total);
      return 0;
    }
    if (measure->parsed()) {
      const tricap::Snapshot snap = tricap::read_snapshot(snapshot_path);
      if (quantity == "angle") {
        const tricap::AngleResult a = tricap::measure_contact_angle(snap);
        std::printf("cos_theta=%.17g theta_deg=%.17g\n", a.cos_theta,
                    a.theta_deg);
      } else if (quantity == "lens") {
        const tricap::LensAngles l = tricap::measure_lens_angles(snap);
        std::printf("theta1=%.17g theta2=%.17g theta3=%.17g\n", l.theta1,
                    l.theta2, l.theta3);
      } else {
        std::printf("sigma=%.17g\n", tricap::measure_sigma(snap));
      }
      return 0;
    }
    // check
    tricap::ScenarioConfig cfg = tricap::load_config(config_path);
    tricap::MaterialParams mat = cfg.mat;
    if (mat.epsilon == 0.0)
      mat.epsilon = 3.0 * std::min(cfg.lx / cfg.nx, cfg.ly / cfg.ny);
    if (tricap::is_solid_scenario(cfg.name)) {
      tricap::validate_solid(cfg.smat);
    } else {
      tricap::validate(mat);
    }
    std::printf("ok scenario=%s\n", cfg.name.c_str());
    return 0;
  } catch (const std::exception& e) {
    return fail(classify(e));
  }
}
