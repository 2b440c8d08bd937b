#pragma once

#include <map>
#include <string>
#include <vector>

#include "tricap/stepper.hpp"

namespace tricap {

/// One named cell-centered array from a snapshot, row-major nx*ny.
struct SnapshotField {
  std::string name;
  std::vector<double> data;
};

/// Parsed legacy structured-points snapshot.  The writer stores run metadata
/// as `key=value` tokens in the title line; they come back in `meta`.
struct Snapshot {
  int nx = 0, ny = 0;
  double ox = 0.0, oy = 0.0, hx = 0.0, hy = 0.0;
  std::map<std::string, double> meta;
  std::vector<SnapshotField> fields;

  const std::vector<double>& field(const std::string& name) const;
  bool has(const std::string& name) const;
  double meta_or(const std::string& key, double fallback) const;
};

/// Writes phases, pressure and cell-averaged velocity as ASCII structured
/// points; the title line carries the state's time, material parameters,
/// domain extents and boundary kinds so measurements are self-contained.
void write_snapshot(const std::string& path, const FluidState& s);

/// Reads a snapshot written by write_snapshot (or any single-block legacy
/// ASCII structured-points file with double scalars).  Throws IoFailure.
Snapshot read_snapshot(const std::string& path);

}  // namespace tricap
