#include "pdm/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

#include "pdm/errors.hpp"

namespace pdm::quadrature {

double integrate(const RealFunction& f, double a, double b, double relative_tolerance) {
  constexpr unsigned kMaxDepth = 25;
  double error = 0.0;
  const double result = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      [&f](double x) { return f(x); }, a, b, kMaxDepth, relative_tolerance, &error);
  if (!std::isfinite(result)) {
    throw DomainError("quadrature produced a non-finite integral");
  }
  return result;
}

}  // namespace pdm::quadrature
