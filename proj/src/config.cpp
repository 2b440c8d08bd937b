#include "tricap/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "tricap/errors.hpp"

namespace tricap {

bool is_solid_scenario(const std::string& name) {
  return name == "solid_vibration" || name == "solid_traction";
}

namespace {

const std::set<std::string> kScenarios = {
    "spinodal",     "interface1d",     "lens",          "sessile_drop",
    "stokes_decay", "solid_vibration", "solid_traction"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, int ln) {
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0')
    throw ParseError(ln, "expected a number, got '" + v + "'");
  return x;
}

long long to_int(const std::string& v, int ln) {
  char* end = nullptr;
  const long long x = std::strtoll(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0')
    throw ParseError(ln, "expected an integer, got '" + v + "'");
  return x;
}

bool to_bool(const std::string& v, int ln) {
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no") return false;
  throw ParseError(ln, "expected a boolean, got '" + v + "'");
}

int side_index(const std::string& side) {
  if (side == "left") return 0;
  if (side == "right") return 1;
  if (side == "bottom") return 2;
  if (side == "top") return 3;
  return -1;
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig c;
  c.mat.gamma12 = c.mat.gamma13 = c.mat.gamma23 = 0.01;
  c.mat.epsilon = 0.0;  // 0 selects 3*min(h) at build time
  c.mat.mobility = 1e-3;
  c.mat.rho = 1.0;
  c.mat.eta = 1e-2;
  c.smat = {1.0, 1.0, 1.0};

  std::istringstream in(text);
  std::string raw, section;
  std::set<std::string> seen;
  int ln = 0;
  bool have_name = false;

  while (std::getline(in, raw)) {
    ++ln;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError(ln, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "scenario" && section != "material" &&
          section != "walls" && section != "solid")
        throw ParseError(ln, "unknown section [" + section + "]");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(ln, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(ln, "empty key");
    if (val.empty()) throw ParseError(ln, "empty value for '" + key + "'");
    if (section.empty())
      throw ParseError(ln, "key '" + key + "' before any [section]");
    if (!seen.insert(section + "." + key).second)
      throw ParseError(ln, "duplicate key '" + key + "'");

    if (section == "scenario") {
      if (key == "name") {
        c.name = val;
        have_name = true;
      } else if (key == "nx") {
        c.nx = static_cast<int>(to_int(val, ln));
      } else if (key == "ny") {
        c.ny = static_cast<int>(to_int(val, ln));
      } else if (key == "lx") {
        c.lx = to_double(val, ln);
      } else if (key == "ly") {
        c.ly = to_double(val, ln);
      } else if (key == "dt") {
        if (val == "auto") {
          c.dt_auto = true;
        } else {
          c.dt_auto = false;
          c.dt = to_double(val, ln);
        }
      } else if (key == "end_time") {
        c.end_time = to_double(val, ln);
      } else if (key == "steps") {
        c.steps = static_cast<int>(to_int(val, ln));
      } else if (key == "cadence") {
        c.cadence = static_cast<int>(to_int(val, ln));
      } else if (key == "seed") {
        c.seed = static_cast<unsigned long long>(to_int(val, ln));
      } else if (key == "phases") {
        c.phases = static_cast<int>(to_int(val, ln));
      } else {
        throw UnknownKey(ln, key);
      }
    } else if (section == "material") {
      if (key == "gamma12") c.mat.gamma12 = to_double(val, ln);
      else if (key == "gamma13") c.mat.gamma13 = to_double(val, ln);
      else if (key == "gamma23") c.mat.gamma23 = to_double(val, ln);
      else if (key == "epsilon") c.mat.epsilon = to_double(val, ln);
      else if (key == "mobility") c.mat.mobility = to_double(val, ln);
      else if (key == "rho") c.mat.rho = to_double(val, ln);
      else if (key == "eta") c.mat.eta = to_double(val, ln);
      else throw UnknownKey(ln, key);
    } else if (section == "walls") {
      // keys like bottom_gamma_s1
      const auto us = key.find('_');
      const int side = us == std::string::npos
                           ? -1
                           : side_index(key.substr(0, us));
      const std::string rest =
          us == std::string::npos ? "" : key.substr(us + 1);
      int phase = -1;
      if (rest == "gamma_s1") phase = 0;
      else if (rest == "gamma_s2") phase = 1;
      else if (rest == "gamma_s3") phase = 2;
      if (side < 0 || phase < 0) throw UnknownKey(ln, key);
      c.wall_gs[side][phase] = to_double(val, ln);
    } else {  // solid
      if (key == "nex") c.nex = static_cast<int>(to_int(val, ln));
      else if (key == "ney") c.ney = static_cast<int>(to_int(val, ln));
      else if (key == "lx") c.slx = to_double(val, ln);
      else if (key == "ly") c.sly = to_double(val, ln);
      else if (key == "rho0") c.smat.rho0 = to_double(val, ln);
      else if (key == "mu_s") c.smat.mu_s = to_double(val, ln);
      else if (key == "lambda_s") c.smat.lambda_s = to_double(val, ln);
      else if (key == "amplitude") c.amplitude = to_double(val, ln);
      else if (key == "roller_left") c.sbcs.roller_left = to_bool(val, ln);
      else if (key == "roller_right") c.sbcs.roller_right = to_bool(val, ln);
      else if (key == "roller_bottom")
        c.sbcs.roller_bottom = to_bool(val, ln);
      else if (key == "roller_top") c.sbcs.roller_top = to_bool(val, ln);
      else if (key == "traction_left_x")
        c.sbcs.traction_left[0] = to_double(val, ln);
      else if (key == "traction_left_y")
        c.sbcs.traction_left[1] = to_double(val, ln);
      else if (key == "traction_right_x")
        c.sbcs.traction_right[0] = to_double(val, ln);
      else if (key == "traction_right_y")
        c.sbcs.traction_right[1] = to_double(val, ln);
      else if (key == "traction_bottom_x")
        c.sbcs.traction_bottom[0] = to_double(val, ln);
      else if (key == "traction_bottom_y")
        c.sbcs.traction_bottom[1] = to_double(val, ln);
      else if (key == "traction_top_x")
        c.sbcs.traction_top[0] = to_double(val, ln);
      else if (key == "traction_top_y")
        c.sbcs.traction_top[1] = to_double(val, ln);
      else throw UnknownKey(ln, key);
    }
  }

  if (!have_name) throw InvalidParameter("scenario name (missing)");
  if (!kScenarios.count(c.name))
    throw InvalidParameter("scenario name '" + c.name + "'");
  if (c.steps < 0) throw InvalidParameter("steps");
  if (c.steps == 0 && !(c.end_time > 0.0))
    throw InvalidParameter("end_time (need end_time > 0 or steps > 0)");
  if (c.cadence < 1) throw InvalidParameter("cadence");
  if (!c.dt_auto && !(c.dt > 0.0)) throw InvalidParameter("dt");
  if (c.phases != 2 && c.phases != 3) throw InvalidParameter("phases");
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string config_reference() {
  return
      "config sections and keys (defaults in parentheses):\n"
      "  [scenario]\n"
      "    name      one of spinodal, interface1d, lens, sessile_drop,\n"
      "              stokes_decay, solid_vibration, solid_traction\n"
      "    nx, ny    grid cells (64, 64)\n"
      "    lx, ly    domain extents (1, 1)\n"
      "    dt        time step, a number or 'auto' (auto)\n"
      "    end_time  stop time; required unless steps is given\n"
      "    steps     explicit step count, overrides end_time (0)\n"
      "    cadence   snapshot every this many steps (100)\n"
      "    seed      noise seed for spinodal (1)\n"
      "    phases    3, or 2 for two-phase spinodal data (3)\n"
      "  [material]\n"
      "    gamma12, gamma13, gamma23  interface energies (0.01)\n"
      "    epsilon   interface width; 0 means 3*min(hx,hy) (0)\n"
      "    mobility  phase mobility (1e-3)\n"
      "    rho       fluid density (1)\n"
      "    eta       dynamic viscosity (1e-2)\n"
      "  [walls]\n"
      "    <side>_gamma_s<i>  wall energy of phase i on side\n"
      "              left/right/bottom/top, i in 1..3 (all 0)\n"
      "  [solid]\n"
      "    nex, ney  elements (32, 8); lx, ly extents (1, 0.25)\n"
      "    rho0, mu_s, lambda_s  material (1, 1, 1)\n"
      "    roller_<side>         zero normal displacement (false)\n"
      "    traction_<side>_<xy>  dead-load traction components (0)\n"
      "    amplitude vibration initial displacement (1e-3)\n";
}

}  // namespace tricap
