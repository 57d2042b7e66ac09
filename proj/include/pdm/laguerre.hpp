#pragma once

#include <cmath>

#include "pdm/errors.hpp"
#include "pdm/jet.hpp"

namespace pdm {

/// Degree and (real) upper index of L_n^{(a)}.
struct LaguerreSpec {
  int degree = 0;
  double upper_index = 0.0;

  void validate() const {
    if (degree < 0) throw InvalidParameter("Laguerre degree must be non-negative");
    if (!(upper_index > -1.0) || !std::isfinite(upper_index)) {
      throw InvalidParameter("invalid Laguerre index: upper index a must satisfy a > -1");
    }
  }
};

/// Associated Laguerre polynomial L_n^{(a)}(y), y >= 0.
///
/// Evaluated by the upward three-term recurrence
///   (k+1) L_{k+1} = (2k+1+a-y) L_k - (k+a) L_{k-1}.
/// T may be double or Jet; with a Jet argument the derivatives in y come out
/// of the same recurrence.
template <class T>
T laguerre(const LaguerreSpec& spec, const T& y) {
  spec.validate();
  if (!(value_of(y) >= 0.0)) throw DomainError("Laguerre argument must satisfy y >= 0");
  const double a = spec.upper_index;
  T previous = T(1.0);
  if (spec.degree == 0) return previous;
  T current = T(a + 1.0) - y;
  for (int k = 1; k < spec.degree; ++k) {
    const double kd = static_cast<double>(k);
    T next = ((T(2.0 * kd + 1.0 + a) - y) * current - T(kd + a) * previous) / T(kd + 1.0);
    previous = current;
    current = next;
  }
  return current;
}

}  // namespace pdm
