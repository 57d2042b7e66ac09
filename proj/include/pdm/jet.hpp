#pragma once

#include <cmath>

namespace pdm {

/// Second-order forward-mode derivative carrier.
///
/// A Jet holds a value together with its first and second derivative with
/// respect to one independent variable. Closed-form wavefunctions are written
/// as templates over the scalar type, so evaluating them on a seeded Jet
/// yields exact (round-off limited) derivatives without finite differences.
struct Jet {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  constexpr Jet() = default;
  constexpr Jet(double value) : v(value) {}  // NOLINT: implicit promotion of constants
  constexpr Jet(double value, double first, double second) : v(value), d1(first), d2(second) {}

  /// The independent variable at `x`.
  static constexpr Jet variable(double x) { return {x, 1.0, 0.0}; }
};

constexpr Jet operator-(const Jet& a) { return {-a.v, -a.d1, -a.d2}; }
constexpr Jet operator+(const Jet& a, const Jet& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
constexpr Jet operator-(const Jet& a, const Jet& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
constexpr Jet operator*(const Jet& a, const Jet& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}
constexpr Jet operator/(const Jet& a, const Jet& b) {
  const double q = a.v / b.v;
  const double q1 = (a.d1 - q * b.d1) / b.v;
  const double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.v;
  return {q, q1, q2};
}
constexpr Jet& operator+=(Jet& a, const Jet& b) { return a = a + b; }
constexpr Jet& operator-=(Jet& a, const Jet& b) { return a = a - b; }
constexpr Jet& operator*=(Jet& a, const Jet& b) { return a = a * b; }
constexpr Jet& operator/=(Jet& a, const Jet& b) { return a = a / b; }

// Composition f(g) with f', f'' supplied by the caller.
constexpr Jet compose(const Jet& g, double f, double f1, double f2) {
  return {f, f1 * g.d1, f2 * g.d1 * g.d1 + f1 * g.d2};
}

inline Jet exp(const Jet& a) {
  const double e = std::exp(a.v);
  return compose(a, e, e, e);
}
inline Jet log(const Jet& a) { return compose(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v)); }
inline Jet log1p(const Jet& a) {
  const double s = 1.0 / (1.0 + a.v);
  return compose(a, std::log1p(a.v), s, -s * s);
}
inline Jet sqrt(const Jet& a) {
  const double s = std::sqrt(a.v);
  return compose(a, s, 0.5 / s, -0.25 / (s * a.v));
}
inline Jet pow(const Jet& a, double p) {
  const double f = std::pow(a.v, p);
  return compose(a, f, p * f / a.v, p * (p - 1.0) * f / (a.v * a.v));
}

inline double value_of(double x) { return x; }
inline double value_of(const Jet& x) { return x.v; }

}  // namespace pdm
