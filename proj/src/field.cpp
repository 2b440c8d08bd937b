#include "tricap/field.hpp"

#include <algorithm>
#include <cmath>

namespace tricap {

double ScalarField::max_abs() const {
  double m = 0.0;
  for (int j = 0; j < ny_; ++j)
    for (int i = 0; i < nx_; ++i) m = std::max(m, std::fabs((*this)(i, j)));
  return m;
}

double ScalarField::min_interior() const {
  double m = (*this)(0, 0);
  for (int j = 0; j < ny_; ++j)
    for (int i = 0; i < nx_; ++i) m = std::min(m, (*this)(i, j));
  return m;
}

double ScalarField::max_interior() const {
  double m = (*this)(0, 0);
  for (int j = 0; j < ny_; ++j)
    for (int i = 0; i < nx_; ++i) m = std::max(m, (*this)(i, j));
  return m;
}

double VectorField::max_abs() const {
  return std::max(u.max_abs(), v.max_abs());
}

double PhaseTriple::sum_defect() const {
  // Associated to match the closure c3 = (1 - c1) - c2, so fields produced
  // by the solver report an exact zero.
  double m = 0.0;
  for (int j = 0; j < c1.ny(); ++j)
    for (int i = 0; i < c1.nx(); ++i)
      m = std::max(m, std::fabs(((1.0 - c1(i, j)) - c2(i, j)) - c3(i, j)));
  return m;
}

}  // namespace tricap
