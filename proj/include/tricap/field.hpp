#pragma once

#include <cstddef>
#include <vector>

#include "tricap/grid.hpp"

namespace tricap {

/// 2D array of doubles with a one-cell ghost margin on every side.
///
/// Interior indices run i in [0,nx), j in [0,ny); ghost indices -1 and nx (ny)
/// are addressable after a sync.  The same container backs cell-centered
/// scalars and the face-based velocity components (which simply use face
/// dimensions, e.g. (nx+1) x ny for the x-component).
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(int nx, int ny, double init = 0.0)
      : nx_(nx), ny_(ny), data_((nx + 2) * (ny + 2), init) {}

  int nx() const { return nx_; }
  int ny() const { return ny_; }

  double& operator()(int i, int j) { return data_[idx(i, j)]; }
  double operator()(int i, int j) const { return data_[idx(i, j)]; }

  void fill(double v) { data_.assign(data_.size(), v); }

  /// Max of |f| over interior cells.
  double max_abs() const;
  /// Min / max over interior cells.
  double min_interior() const;
  double max_interior() const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(j + 1) * (nx_ + 2) + (i + 1);
  }

  int nx_ = 0;
  int ny_ = 0;
  std::vector<double> data_;
};

/// Staggered velocity field: u on vertical (x-normal) faces, v on horizontal
/// (y-normal) faces.  u has (nx+1) x ny entries, v has nx x (ny+1); on a
/// periodic axis the last face duplicates face 0 and is kept in sync.
struct VectorField {
  VectorField() = default;
  VectorField(int nx, int ny)
      : u(nx + 1, ny), v(nx, ny + 1), nx_(nx), ny_(ny) {}

  ScalarField u;
  ScalarField v;

  int nx() const { return nx_; }
  int ny() const { return ny_; }

  double max_abs() const;

 private:
  int nx_ = 0;
  int ny_ = 0;
};

/// The three phase fractions.  c1 + c2 + c3 = 1 pointwise is maintained by
/// construction everywhere states are built or advanced.
struct PhaseTriple {
  PhaseTriple() = default;
  PhaseTriple(int nx, int ny) : c1(nx, ny), c2(nx, ny), c3(nx, ny) {}

  ScalarField c1, c2, c3;

  ScalarField& operator[](int i) { return i == 0 ? c1 : (i == 1 ? c2 : c3); }
  const ScalarField& operator[](int i) const {
    return i == 0 ? c1 : (i == 1 ? c2 : c3);
  }

  /// Max pointwise deviation of c1+c2+c3 from 1 over interior cells.
  double sum_defect() const;
};

/// Chemical potentials mu_i = dPsi/dc_i + beta and the multiplier field beta.
struct ChemPotTriple {
  ChemPotTriple() = default;
  ChemPotTriple(int nx, int ny)
      : mu1(nx, ny), mu2(nx, ny), mu3(nx, ny), beta(nx, ny) {}

  ScalarField mu1, mu2, mu3, beta;

  ScalarField& operator[](int i) {
    return i == 0 ? mu1 : (i == 1 ? mu2 : mu3);
  }
  const ScalarField& operator[](int i) const {
    return i == 0 ? mu1 : (i == 1 ? mu2 : mu3);
  }
};

}  // namespace tricap
