#pragma once

#include <string>

#include "tricap/audit.hpp"
#include "tricap/config.hpp"

namespace tricap {

/// Builds the initial fluid state for a fluid scenario:
///   spinodal      periodic box, c = 1/3 + seeded noise (or a two-phase
///                 variant when phases = 2); at rest
///   interface1d   walls in x, one diffuse interface at lx/2; at rest
///   lens          periodic in x, walls in y; stratified phases 1/2 with a
///                 phase-3 disk straddling the dividing line; at rest
///   sessile_drop  periodic in x, walls in y; phase-1 half-disk on the
///                 bottom wall; at rest
///   stokes_decay  periodic box, single phase, shear velocity
///                 u = 0.1 cos(2 pi y / ly)
/// All phase triples sum to one pointwise by construction and all ghosts are
/// synchronized.
FluidState build_fluid(const ScenarioConfig& cfg);

/// Builds the initial solid state:
///   solid_vibration  left roller always added; displacement
///                    ux = amplitude * sin(pi X / (2 lx)), at rest
///   solid_traction   zero initial state; dead loads from the config
SolidState build_solid(const ScenarioConfig& cfg);

struct RunResult {
  int steps = 0;
  double time = 0.0;
  EnergyLedger last;
};

/// Executes a configured run in outdir: writes energy.csv (one audit row per
/// step), snapshots fields_<step>.vtk at the configured cadence plus a final
/// fields_final.vtk (fluid scenarios), solid.csv with tip displacement
/// (solid scenarios), and a run.json manifest.  Throws MonitorTrip when a
/// runtime invariant fails (NaN, phase-sum breach, energy increase beyond
/// 1e-10 relative in dissipative runs).
RunResult run_scenario(const ScenarioConfig& cfg, const std::string& outdir);

}  // namespace tricap
