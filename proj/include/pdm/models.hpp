#pragma once

#include <cmath>
#include <utility>

#include "pdm/domain.hpp"
#include "pdm/errors.hpp"
#include "pdm/jet.hpp"
#include "pdm/laguerre.hpp"

namespace pdm {

/// Closed interval used to truncate the real line (or half line).
struct Interval {
  double lo;
  double hi;
};

/// Grows `start` by half its width on each side where |f| at the cut exceeds
/// `tolerance`. The lower end stays put when `fixed_lo` is set.
Interval widen_until_negligible(const RealFunction& f, Interval start, double tolerance, bool fixed_lo = false);

/// Exponential mass M = e^{-2x} with V(x) = V0 e^{2x} - B(2A+1) e^x.
///
/// The model is solvable only for V0 = (A-n)^2 + [4 alpha(alpha+beta+1) + 2 beta + 1],
/// so each level n is its own potential configuration. The PDM eigenvalue is
/// eps = -B^2, and with that V0 it is the n-th eigenvalue of the operator.
class ExpMassMorseModel {
 public:
  ExpMassMorseModel(double a, double b, AmbiguityParams amb, int level);

  /// Same algebra with no constraint checks; for fault injection only.
  static ExpMassMorseModel unchecked(double a, double b, AmbiguityParams amb, int level);

  const MorseParams& params() const { return params_; }
  const AmbiguityParams& ambiguity() const { return amb_; }
  int level() const { return level_; }

  MassProfile mass() const { return MassProfile::exponential_decay(); }
  RealFunction potential() const;
  double effective_potential(double x) const;

  /// PDM eigenvalue eps = -B^2.
  double energy() const { return -params_.b_coupling * params_.b_coupling; }
  /// Constant-mass companion E_n = -(A-n)^2.
  double companion_energy() const;
  /// 4 alpha(alpha+beta+1) + 2 beta + 1.
  double solvability_offset() const;

  /// Normalized phi_n(x) ∝ y^{A+1-n} e^{-y/2} L_n^{(2A-2n)}(y), y = 2B e^{-x}.
  template <class T>
  T wavefunction(const T& x) const {
    using std::exp;
    using std::log;
    const T y = T(2.0 * params_.b_coupling) * exp(-x);
    const T envelope = exp(T(power_) * log(y) - T(0.5) * y - T(log_scale_));
    return envelope * laguerre(laguerre_, y);
  }

  /// Truncated x-domain for the numeric solver.
  Interval default_domain() const { return {-6.0, 10.0}; }
  /// default_domain() widened until |phi_n| < tolerance at both cuts.
  Interval truncated_domain(double tolerance = 1e-10) const;

 private:
  struct Unchecked {};
  ExpMassMorseModel(Unchecked, double a, double b, AmbiguityParams amb, int level);

  MorseParams params_;
  AmbiguityParams amb_;
  int level_;
  double power_;
  LaguerreSpec laguerre_;
  double log_scale_ = 0.0;
};

/// Rational mass M = (1 + kappa e^x)^{-2} with V(x) = B^2 e^{2x} - B(2A+1) e^x.
///
/// V_eff is again Morse-like with primed couplings. kappa = 0 is accepted as
/// the constant-mass limit and handled without dividing by kappa.
class RationalMassMorseModel {
 public:
  RationalMassMorseModel(double a, double b, AmbiguityParams amb, double kappa);

  static RationalMassMorseModel unchecked(double a, double b, AmbiguityParams amb, double kappa);

  double a() const { return a_; }
  double b() const { return b_; }
  double kappa() const { return kappa_; }
  const AmbiguityParams& ambiguity() const { return amb_; }

  double b_prime_squared() const { return b_prime_sq_; }
  double b_prime() const { return std::sqrt(b_prime_sq_); }
  /// B'(2A'+1) = B(2A+1) + (beta+1) kappa.
  double linear_coupling() const { return linear_coupling_; }
  /// A' recovered from B'(2A'+1); requires B' > 0.
  double a_prime() const;
  /// Delta = 2 sqrt(B'^2 + kappa^2).
  double delta() const { return delta_; }
  /// lambda = -(Delta + kappa)/2 of the ground state.
  double lambda_ground() const { return -0.5 * (delta_ + kappa_); }
  /// mu = ([2B'(2A'+1) - kappa]/(Delta + kappa) - 1)/2 of the ground state.
  double mu_ground() const;

  MassProfile mass() const;
  RealFunction potential() const;
  /// V + (beta+1)/2 M''/M^2 - [alpha(alpha+beta+1)+beta+1] M'^2/M^3 evaluated directly at x.
  double effective_potential(double x) const;
  /// B'^2 e^{2x} - B'(2A'+1) e^x.
  double effective_potential_morse_form(double x) const;

  /// Closed-form eps_n (raw, no validity checks).
  double energy_formula(int n) const;
  /// eps_n, validated: negative and above every lower level.
  double energy(int n) const;

  /// Normalized phi_0(x) ∝ (1 + kappa e^x)^{lambda/kappa - mu - 1/2} e^{mu x}.
  template <class T>
  T ground_wavefunction(const T& x) const {
    return std::exp(-log_scale_) * ground_unnormalized(x);
  }
  /// Throws NonNormalizable when mu <= 0.
  void require_normalizable_ground() const;

  Interval default_domain() const { return {-12.0, 12.0}; }
  /// default_domain() widened until |phi_0| < tolerance at both cuts.
  Interval truncated_domain(double tolerance = 1e-10) const;

 private:
  struct Unchecked {};
  RationalMassMorseModel(Unchecked, double a, double b, AmbiguityParams amb, double kappa);

  template <class T>
  T ground_unnormalized(const T& x) const {
    using std::exp;
    using std::log1p;
    const double mu = mu_ground();
    if (kappa_ == 0.0) return exp(T(lambda_ground()) * exp(x) + T(mu) * x);
    const double power = lambda_ground() / kappa_ - mu - 0.5;
    return exp(T(power) * log1p(T(kappa_) * exp(x)) + T(mu) * x);
  }

  double a_;
  double b_;
  AmbiguityParams amb_;
  double kappa_;
  double b_prime_sq_;
  double linear_coupling_;
  double delta_;
  double log_scale_ = 0.0;
};

/// Modified Coulomb parameters for one level of the rational-mass model.
struct CoulombParams {
  double z_charge = 0.0;
  double l_quantum = 0.0;
  double lambda_nl = 0.0;
  double kappa = 0.0;
  int level = 0;
  /// |l(l+1) + eps_n + 1/4|.
  double angular_identity_gap = 0.0;
  /// |lambda_nl + B'^2 + kappa^2|.
  double energy_identity_gap = 0.0;
};

/// Z = B'(A'+1/2) - kappa/4, l and lambda_nl from their explicit forms.
CoulombParams coulomb_parameters(const RationalMassMorseModel& model, int n);

/// Ground-state radial function of the PDM Coulomb problem, normalized so
/// that the integral of |xi|^2 over (0, inf) is one.
class CoulombGroundState {
 public:
  CoulombGroundState(const CoulombParams& cp, const RationalMassMorseModel& model);

  const CoulombParams& params() const { return cp_; }

  /// xi(r) ∝ r^{l+1} (1 + kappa r)^{-(Z/((l+1) kappa) + l + 1)}; exponential branch at kappa = 0.
  template <class T>
  T value(const T& r) const {
    using std::exp;
    using std::log;
    using std::log1p;
    const double l1 = cp_.l_quantum + 1.0;
    if (cp_.kappa == 0.0) {
      return exp(T(l1) * log(r) - T(cp_.z_charge / l1) * r - T(log_scale_));
    }
    const double power = -(cp_.z_charge / (l1 * cp_.kappa) + l1);
    return exp(T(l1) * log(r) + T(power) * log1p(T(cp_.kappa) * r) - T(log_scale_));
  }

  /// Same state written through the ground-state exponents:
  /// r^{mu+1/2} (1 + kappa r)^{lambda/kappa - mu - 1/2}.
  template <class T>
  T value_from_exponents(const T& r) const {
    using std::exp;
    using std::log;
    using std::log1p;
    if (cp_.kappa == 0.0) {
      return exp(T(mu_ + 0.5) * log(r) + T(lambda_) * r - T(log_scale_exponents_));
    }
    const double power = lambda_ / cp_.kappa - mu_ - 0.5;
    return exp(T(mu_ + 0.5) * log(r) + T(power) * log1p(T(cp_.kappa) * r) - T(log_scale_exponents_));
  }

  /// Normalized r^{l+1} e^{-Z r/(l+1)}, the constant-mass ground state for this (Z, l).
  double hydrogen_limit(double r) const;

  /// Default radial cut 40/|Z| * (n + l + 1).
  Interval default_domain() const;
  /// default_domain() with r_max grown until |xi(r_max)| < tolerance.
  Interval truncated_domain(double tolerance = 1e-10) const;

 private:
  CoulombParams cp_;
  double lambda_;
  double mu_;
  double log_scale_ = 0.0;
  double log_scale_exponents_ = 0.0;
  double log_scale_hydrogen_ = 0.0;
};

inline CoulombGroundState coulomb_ground_wavefunction(const CoulombParams& cp, const RationalMassMorseModel& model) {
  return CoulombGroundState(cp, model);
}

}  // namespace pdm
