#pragma once

#include <array>
#include <string>

#include "tricap/material.hpp"
#include "tricap/solid.hpp"

namespace tricap {

/// Everything a run needs, parsed from the line-oriented config format:
/// `[section]` headers, `key = value` lines, `#` comments.  Sections are
/// [scenario], [material], [walls] and [solid]; unknown keys are rejected,
/// duplicate keys are parse errors.
struct ScenarioConfig {
  // [scenario]
  std::string name;
  int nx = 64, ny = 64;
  double lx = 1.0, ly = 1.0;
  bool dt_auto = true;
  double dt = 0.0;       // used when dt_auto is false
  double end_time = 0.0; // used when steps == 0
  int steps = 0;         // explicit step count, overrides end_time
  int cadence = 100;     // snapshot every this many steps
  unsigned long long seed = 1;
  int phases = 3;        // spinodal only: 2 = binary initial data

  // [material]
  MaterialParams mat;

  // [walls]: per-side wall energies, order left, right, bottom, top.
  std::array<std::array<double, 3>, 4> wall_gs{};

  // [solid]
  int nex = 32, ney = 8;
  double slx = 1.0, sly = 0.25;
  SolidMaterial smat;
  SolidBCs sbcs;
  double amplitude = 1e-3;  // vibration initial tip displacement
};

/// True for the scenarios handled by the elasticity solver.
bool is_solid_scenario(const std::string& name);

/// Parses config text.  Throws ParseError (bad line / duplicate key /
/// unknown section / bad value), UnknownKey, InvalidParameter (structural
/// invariants: unknown scenario, nonpositive end time, cadence < 1).
ScenarioConfig parse_config(const std::string& text);

/// Reads the file and parses it; throws IoFailure if unreadable.
ScenarioConfig load_config(const std::string& path);

/// One line per key: the accepted sections, keys and their defaults.
std::string config_reference();

}  // namespace tricap
