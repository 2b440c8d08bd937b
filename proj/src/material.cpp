#include "tricap/material.hpp"

#include <cmath>

#include "tricap/errors.hpp"

namespace tricap {

std::array<double, 3> spreading_coefficients(double g12, double g13, double g23) {
  std::array<double, 3> s = {
      g12 + g13 - g23,
      g12 + g23 - g13,
      g13 + g23 - g12,
  };
  for (int i = 0; i < 3; ++i) {
    if (!(s[i] > 0.0)) throw TotalSpreading(i + 1, s[i]);
  }
  return s;
}

MaterialParams validate(const MaterialParams& p) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  auto nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };

  if (!positive(p.gamma12)) throw InvalidParameter("gamma12");
  if (!positive(p.gamma13)) throw InvalidParameter("gamma13");
  if (!positive(p.gamma23)) throw InvalidParameter("gamma23");
  if (!positive(p.epsilon)) throw InvalidParameter("epsilon");
  if (!nonneg(p.mobility)) throw InvalidParameter("mobility");
  if (!positive(p.rho)) throw InvalidParameter("rho");
  if (!nonneg(p.eta)) throw InvalidParameter("eta");

  MaterialParams out = p;
  out.sigma = spreading_coefficients(p.gamma12, p.gamma13, p.gamma23);
  return out;
}

}  // namespace tricap
