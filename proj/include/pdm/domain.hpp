#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <variant>

namespace pdm {

/// Real function of one real variable (potentials, closed-form samples).
using RealFunction = std::function<double(double)>;

/// Ordering parameters of the von Roos kinetic operator.
///
/// They enter the effective potential only through two combinations, exposed
/// here so every consumer uses the same rounding.
struct AmbiguityParams {
  double alpha = 0.0;
  double beta = 0.0;

  /// Coefficient of M''/M^2.
  double curvature_weight() const { return 0.5 * (beta + 1.0); }
  /// Coefficient of M'^2/M^3.
  double slope_weight() const { return alpha * (alpha + beta + 1.0) + beta + 1.0; }

  void validate() const;
};

/// M and its first two derivatives at one point.
struct MassTriple {
  double value;
  double first;
  double second;
};

/// One of the three solvable mass profiles.
class MassProfile {
 public:
  /// M(x) = value.
  struct Constant {
    double value;
  };
  /// M(x) = exp(-2x).
  struct ExponentialDecay {};
  /// M(x) = (1 + kappa e^x)^-2, kappa > 0.
  struct RationalKappa {
    double kappa;
  };
  using Variant = std::variant<Constant, ExponentialDecay, RationalKappa>;

  static MassProfile constant(double value = 1.0);
  static MassProfile exponential_decay();
  static MassProfile rational(double kappa);

  /// Exact (M, M', M''). Throws DomainOverflow when any entry is non-finite.
  MassTriple evaluate(double x) const;
  /// 1/M(x), computed without forming M first.
  double inverse(double x) const;

  const Variant& variant() const { return variant_; }
  std::string describe() const;

 private:
  explicit MassProfile(Variant v) : variant_(v) {}
  Variant variant_;
};

/// Couplings of V(x) = V0 e^{2x} - B(2A+1) e^x.
struct MorseParams {
  double v0 = 0.0;
  double a_coupling = 0.0;
  double b_coupling = 1.0;

  double operator()(double x) const;
  void validate() const;
};

/// Uniform grid with Dirichlet endpoints.
class Grid {
 public:
  Grid(double x_min, double x_max, std::size_t n_points);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t n_points() const { return n_points_; }
  std::size_t interior_count() const { return n_points_ - 2; }
  double spacing() const { return (x_max_ - x_min_) / static_cast<double>(n_points_ - 1); }
  double point(std::size_t i) const;
  /// Same interval with the spacing halved.
  Grid refined() const { return Grid(x_min_, x_max_, 2 * n_points_ - 1); }

 private:
  double x_min_;
  double x_max_;
  std::size_t n_points_;
};

/// V(x) + (beta+1)/2 M''/M^2 - [alpha(alpha+beta+1)+beta+1] M'^2/M^3.
double effective_potential(const RealFunction& v, const MassProfile& mass, const AmbiguityParams& amb,
                           double x);

/// Extra term picked up by psi = phi / sqrt(M): (3/4) M'^2/M^3 - (1/2) M''/M^2.
double kinetic_correction(const MassProfile& mass, double x);

}  // namespace pdm
