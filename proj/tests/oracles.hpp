#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's evaluation paths.

#include <cmath>
#include <functional>

namespace pdm::oracle {

/// L_n^{(a)}(y) from the explicit finite sum
///   sum_k (-1)^k binom(n+a, n-k) y^k / k!,
/// with the generalized binomial built as a product of (a+k+1..a+n)/(n-k)!.
inline double laguerre_series(int n, double a, double y) {
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    // binom(n+a, n-k) = prod_{j=1}^{n-k} (a + k + j) / j
    double binom = 1.0;
    for (int j = 1; j <= n - k; ++j) binom *= (a + k + j) / j;
    double term = binom;
    for (int j = 1; j <= k; ++j) term *= y / j;
    sum += (k % 2 == 0 ? 1.0 : -1.0) * term;
  }
  return sum;
}

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double second_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

inline double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

/// log of int_0^inf y^{a+1} e^{-y} [L_n^{(a)}(y)]^2 dy = Gamma(n+a+1)/n! (2n+a+1).
inline double log_laguerre_weighted_norm(int n, double a) {
  return std::lgamma(n + a + 1.0) - std::lgamma(n + 1.0) + std::log(2.0 * n + a + 1.0);
}

/// Composite Simpson rule on [a, b] with `panels` (even) subintervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace pdm::oracle
