#pragma once

#include <limits>

#include "pdm/domain.hpp"

namespace pdm::quadrature {

/// Adaptive Gauss-Kronrod integral of f over [a, b]. Infinite limits are allowed.
double integrate(const RealFunction& f, double a, double b, double relative_tolerance = 1e-14);

inline double integrate_line(const RealFunction& f) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return integrate(f, -inf, inf);
}

inline double integrate_half_line(const RealFunction& f) {
  return integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

}  // namespace pdm::quadrature
