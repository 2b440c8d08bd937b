#pragma once

#include <string>
#include <vector>

#include "tricap/vtk.hpp"

namespace tricap {

struct ContourPoint {
  double x = 0.0, y = 0.0;
};

/// Level-crossing points of field = level between adjacent cell centers
/// (marching-squares edge crossings, returned as an unordered cloud).
std::vector<ContourPoint> contour_points(const Snapshot& snap,
                                         const std::string& field,
                                         double level);

/// Bilinear sample of a snapshot field at (x, y), clamped to the lattice.
double sample(const Snapshot& snap, const std::string& field, double x,
              double y);

struct CircleFit {
  double xc = 0.0, yc = 0.0, r = 0.0;
};

/// Algebraic least-squares circle through a point cloud; throws
/// ContourNotFound for degenerate input (fewer than 8 points or a
/// near-singular system).
CircleFit fit_circle(const std::vector<ContourPoint>& pts);

struct AngleResult {
  double cos_theta = 0.0;
  double theta_deg = 0.0;
};

/// Contact angle of the phase-1 half-level contour against the bottom wall:
/// circle fit of the contour (excluding the wall boundary layer), angle from
/// the fitted center height.
AngleResult measure_contact_angle(const Snapshot& snap);

struct LensAngles {
  double theta1 = 0.0, theta2 = 0.0, theta3 = 0.0;  // degrees
};

/// Junction angles of a floating lens: circles fitted to the upper and lower
/// arcs of the phase-3 boundary, a line to the far 1-2 interface; at each
/// circle-circle intersection the wedge between adjacent interface tangents
/// is assigned to the phase found along its bisector.  Tips are averaged.
LensAngles measure_lens_angles(const Snapshot& snap);

/// Interface excess energy per unit interface length: rebuilds the fields
/// and parameters from the snapshot and evaluates the free energy of the
/// column, divided by the interface extent.
double measure_sigma(const Snapshot& snap);

}  // namespace tricap
