#pragma once

namespace tricap {

enum class BoundaryKind { Periodic, Wall };

/// Uniform structured grid on [0,lx] x [0,ly] with nx*ny cells.
///
/// Scalars live at cell centers ((i+1/2)hx, (j+1/2)hy); velocity components
/// live on cell faces (marker-and-cell staggering).  Boundary kind is set per
/// axis, so opposite sides always match: bx covers the left/right pair, by the
/// bottom/top pair.
struct Grid {
  int nx = 0;
  int ny = 0;
  double hx = 0.0;
  double hy = 0.0;
  BoundaryKind bx = BoundaryKind::Periodic;
  BoundaryKind by = BoundaryKind::Periodic;

  double lx() const { return nx * hx; }
  double ly() const { return ny * hy; }

  /// Cell-center coordinates.
  double xc(int i) const { return (i + 0.5) * hx; }
  double yc(int j) const { return (j + 0.5) * hy; }
};

/// Builds a grid from box dimensions, validating nx, ny >= 4 and lx, ly > 0.
Grid make_grid(int nx, int ny, double lx, double ly, BoundaryKind bx,
               BoundaryKind by);

}  // namespace tricap
