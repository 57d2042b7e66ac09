#include "pdm/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pdm/quadrature.hpp"

namespace pdm {
namespace {

// log of the L2 norm of f, given log|f|. The peak is located on a scan of
// [scan_lo, scan_hi], the support is grown outwards in widening steps until
// |f| has dropped by e^-40 and the squared ratio to the peak is integrated.
template <class LogF>
double log_l2_norm(LogF&& log_abs, double scan_lo, double scan_hi, bool fixed_lo) {
  constexpr int kScan = 2001;
  constexpr double kDrop = 40.0;
  double peak = -std::numeric_limits<double>::infinity();
  double x_peak = scan_lo;
  for (int i = 0; i < kScan; ++i) {
    const double x = scan_lo + (scan_hi - scan_lo) * i / (kScan - 1);
    const double v = log_abs(x);
    if (std::isfinite(v) && v > peak) {
      peak = v;
      x_peak = x;
    }
  }
  if (!std::isfinite(peak)) throw NonNormalizable("wavefunction vanishes on the scan window");

  const auto negligible = [&](double x) { return log_abs(x) - peak < -kDrop; };
  const auto edge = [&](double direction) {
    double step = 0.01 * (scan_hi - scan_lo);
    double x = x_peak;
    for (int i = 0; i < 200; ++i) {
      x += direction * step;
      if (fixed_lo && direction < 0.0 && x <= scan_lo) return scan_lo;
      if (negligible(x)) return x;
      step *= 1.25;
    }
    throw NonNormalizable("wavefunction does not decay");
  };
  const double lo = fixed_lo ? scan_lo : edge(-1.0);
  const double hi = edge(1.0);
  const RealFunction ratio_sq = [&](double x) {
    const double v = log_abs(x) - peak;
    return std::isfinite(v) ? std::exp(2.0 * v) : 0.0;
  };
  const double integral = quadrature::integrate(ratio_sq, lo, x_peak, 1e-13) +
                          quadrature::integrate(ratio_sq, x_peak, hi, 1e-13);
  if (!(integral > 0.0)) throw NonNormalizable("wavefunction has zero norm");
  return peak + 0.5 * std::log(integral);
}

}  // namespace

Interval widen_until_negligible(const RealFunction& f, Interval start, double tolerance, bool fixed_lo) {
  constexpr int kMaxRounds = 40;
  Interval d = start;
  for (int i = 0; i < kMaxRounds; ++i) {
    const bool grow_lo = !fixed_lo && !(std::abs(f(d.lo)) < tolerance);
    const bool grow_hi = !(std::abs(f(d.hi)) < tolerance);
    if (!grow_lo && !grow_hi) return d;
    const double half = 0.5 * (d.hi - d.lo);
    if (grow_lo) d.lo -= half;
    if (grow_hi) d.hi += half;
  }
  throw DomainError("wavefunction does not become negligible at the domain cuts");
}

// ---------------------------------------------------------------------------
// Exponential mass

ExpMassMorseModel::ExpMassMorseModel(Unchecked, double a, double b, AmbiguityParams amb, int level)
    : amb_(amb), level_(level), power_(a + 1.0 - level), laguerre_{level, 2.0 * a - 2.0 * level} {
  params_.a_coupling = a;
  params_.b_coupling = b;
  params_.v0 = (a - level) * (a - level) + solvability_offset();

  const auto log_abs = [this](double x) {
    const double y = 2.0 * params_.b_coupling * std::exp(-x);
    return power_ * std::log(y) - 0.5 * y + std::log(std::abs(laguerre(laguerre_, y)));
  };
  try {
    log_scale_ = log_l2_norm(log_abs, -30.0, 30.0, false);
  } catch (const Error&) {
    // Only reachable for unchecked parameters; NaN propagates into every downstream check.
    log_scale_ = std::numeric_limits<double>::quiet_NaN();
  }
}

ExpMassMorseModel::ExpMassMorseModel(double a, double b, AmbiguityParams amb, int level)
    : ExpMassMorseModel(
          Unchecked{},
          [&] {
            amb.validate();
            MorseParams{0.0, a, b}.validate();
            if (level < 0) throw InvalidParameter("level n must be non-negative");
            if (!(level < a)) {
              std::ostringstream os;
              os << "no bound state: level n = " << level << " violates n_max < A (A = " << a << ")";
              throw NoBoundState(os.str());
            }
            return a;
          }(),
          b, amb, level) {}

ExpMassMorseModel ExpMassMorseModel::unchecked(double a, double b, AmbiguityParams amb, int level) {
  return ExpMassMorseModel(Unchecked{}, a, b, amb, level);
}

RealFunction ExpMassMorseModel::potential() const {
  return [p = params_](double x) { return p(x); };
}

double ExpMassMorseModel::effective_potential(double x) const {
  return pdm::effective_potential(potential(), mass(), amb_, x);
}

Interval ExpMassMorseModel::truncated_domain(double tolerance) const {
  return widen_until_negligible([this](double x) { return wavefunction(x); }, default_domain(), tolerance);
}

double ExpMassMorseModel::companion_energy() const {
  const double d = params_.a_coupling - level_;
  return -d * d;
}

double ExpMassMorseModel::solvability_offset() const {
  return 4.0 * amb_.alpha * (amb_.alpha + amb_.beta + 1.0) + 2.0 * amb_.beta + 1.0;
}

// ---------------------------------------------------------------------------
// Rational mass

RationalMassMorseModel::RationalMassMorseModel(Unchecked, double a, double b, AmbiguityParams amb, double kappa)
    : a_(a), b_(b), amb_(amb), kappa_(kappa) {
  b_prime_sq_ = b * b - 2.0 * (2.0 * amb.alpha * (amb.alpha + amb.beta + 1.0) + amb.beta + 1.0) * kappa * kappa;
  linear_coupling_ = b * (2.0 * a + 1.0) + (amb.beta + 1.0) * kappa;
  delta_ = 2.0 * std::sqrt(b_prime_sq_ + kappa * kappa);

  const double mu = mu_ground();
  if (mu > 0.0) {
    const auto log_abs = [this, mu](double x) {
      if (kappa_ == 0.0) return lambda_ground() * std::exp(x) + mu * x;
      return (lambda_ground() / kappa_ - mu - 0.5) * std::log1p(kappa_ * std::exp(x)) + mu * x;
    };
    // The peak sits where d/dx log phi_0 = 0; a generous scan covers every sane kappa.
    try {
      log_scale_ = log_l2_norm(log_abs, -60.0, 60.0, false);
    } catch (const Error&) {
      log_scale_ = std::numeric_limits<double>::quiet_NaN();
    }
  }
}

RationalMassMorseModel::RationalMassMorseModel(double a, double b, AmbiguityParams amb, double kappa)
    : RationalMassMorseModel(
          Unchecked{},
          [&] {
            amb.validate();
            MorseParams{b * b, a, b}.validate();
            if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
              throw InvalidParameter("rational mass requires kappa > 0 (kappa = 0 is the constant-mass limit)");
            }
            const double bps =
                b * b - 2.0 * (2.0 * amb.alpha * (amb.alpha + amb.beta + 1.0) + amb.beta + 1.0) * kappa * kappa;
            if (bps < 0.0) {
              throw InvalidParameter("rational-mass model invalid: B'^2 = B^2 - 2[2a(a+b+1)+b+1]k^2 must be >= 0");
            }
            return a;
          }(),
          b, amb, kappa) {}

RationalMassMorseModel RationalMassMorseModel::unchecked(double a, double b, AmbiguityParams amb, double kappa) {
  return RationalMassMorseModel(Unchecked{}, a, b, amb, kappa);
}

double RationalMassMorseModel::a_prime() const {
  const double bp = b_prime();
  if (!(bp > 0.0)) throw InvalidParameter("A' is undefined when B' = 0");
  return 0.5 * (linear_coupling_ / bp - 1.0);
}

double RationalMassMorseModel::mu_ground() const {
  return 0.5 * ((2.0 * linear_coupling_ - kappa_) / (delta_ + kappa_) - 1.0);
}

MassProfile RationalMassMorseModel::mass() const {
  return kappa_ == 0.0 ? MassProfile::constant(1.0) : MassProfile::rational(kappa_);
}

RealFunction RationalMassMorseModel::potential() const {
  return [p = MorseParams{b_ * b_, a_, b_}](double x) { return p(x); };
}

double RationalMassMorseModel::effective_potential(double x) const {
  return pdm::effective_potential(potential(), mass(), amb_, x);
}

double RationalMassMorseModel::effective_potential_morse_form(double x) const {
  const double e = std::exp(x);
  return b_prime_sq_ * e * e - linear_coupling_ * e;
}

double RationalMassMorseModel::energy_formula(int n) const {
  const double nd = static_cast<double>(n);
  const double numerator =
      2.0 * linear_coupling_ - ((2.0 * nd + 1.0) * delta_ + 2.0 * (nd * nd + nd + 1.0) * kappa_);
  const double ratio = numerator / (delta_ + (2.0 * nd + 1.0) * kappa_);
  return -0.25 * ratio * ratio;
}

double RationalMassMorseModel::energy(int n) const {
  if (n < 0) throw InvalidParameter("level n must be non-negative");
  double previous = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= n; ++k) {
    const double eps = energy_formula(k);
    if (!(eps < 0.0) || !(eps > previous)) {
      std::ostringstream os;
      os << "level " << k << " is not a bound state of the rational-mass model (eps_" << k << " = " << eps
         << (eps < 0.0 ? ", below the previous level)" : ", not negative)");
      throw LevelInvalid(os.str());
    }
    previous = eps;
  }
  return previous;
}

Interval RationalMassMorseModel::truncated_domain(double tolerance) const {
  require_normalizable_ground();
  return widen_until_negligible([this](double x) { return ground_wavefunction(x); }, default_domain(), tolerance);
}

void RationalMassMorseModel::require_normalizable_ground() const {
  if (!(mu_ground() > 0.0)) {
    std::ostringstream os;
    os << "ground state is not normalizable: mu = " << mu_ground() << " must be positive";
    throw NonNormalizable(os.str());
  }
}

// ---------------------------------------------------------------------------
// Coulomb

CoulombParams coulomb_parameters(const RationalMassMorseModel& model, int n) {
  const double eps = model.energy(n);
  if (eps > -0.25) {
    std::ostringstream os;
    os << "complex angular momentum: eps_" << n << " = " << eps << " > -1/4";
    throw ComplexAngularMomentum(os.str());
  }
  const double kappa = model.kappa();
  const double delta = model.delta();
  const double c = model.linear_coupling();
  const double nd = static_cast<double>(n);

  CoulombParams cp;
  cp.kappa = kappa;
  cp.level = n;
  cp.z_charge = 0.5 * c - 0.25 * kappa;
  cp.l_quantum = (2.0 * c - (2.0 * (nd + 1.0) * delta + (2.0 * nd * nd + 4.0 * nd + 3.0) * kappa)) /
                 (2.0 * (delta + (2.0 * nd + 1.0) * kappa));
  const double l = cp.l_quantum;
  const double ratio = (2.0 * cp.z_charge - (nd * nd + (l + 1.0) * (2.0 * nd + 1.0)) * kappa) / (2.0 * (nd + l + 1.0));
  cp.lambda_nl = -ratio * ratio;
  cp.angular_identity_gap = std::abs(l * (l + 1.0) + eps + 0.25);
  cp.energy_identity_gap = std::abs(cp.lambda_nl + model.b_prime_squared() + kappa * kappa);
  return cp;
}

CoulombGroundState::CoulombGroundState(const CoulombParams& cp, const RationalMassMorseModel& model)
    : cp_(cp), lambda_(model.lambda_ground()), mu_(model.mu_ground()) {
  if (cp.level != 0) throw InvalidParameter("closed-form Coulomb wavefunction exists for the ground level only");
  if (!(cp.l_quantum > -1.0)) throw NonNormalizable("Coulomb ground state requires l > -1");
  const double l1 = cp.l_quantum + 1.0;
  const bool decays = cp.kappa == 0.0 ? cp.z_charge / l1 > 0.0 : cp.z_charge / (l1 * cp.kappa) > 0.5;
  if (!decays) throw NonNormalizable("Coulomb ground state does not decay fast enough to be normalizable");
  // r^{mu+1/2} must be square integrable at 0; at infinity the exponent sum is lambda/kappa.
  const bool exponents_ok = mu_ > -1.0 && (cp.kappa == 0.0 ? lambda_ < 0.0 : lambda_ / cp.kappa < -0.5);
  if (!exponents_ok) throw NonNormalizable("ground-state exponents give a non-normalizable radial function");

  const Interval dom = default_domain();
  auto normalize = [&](double& log_scale, auto fn) {
    log_scale = 0.0;
    log_scale = log_l2_norm([&](double r) { return std::log(fn(r)); }, 0.0, dom.hi, true);
  };
  normalize(log_scale_, [this](double r) { return value(r); });
  normalize(log_scale_exponents_, [this](double r) { return value_from_exponents(r); });
  normalize(log_scale_hydrogen_, [this](double r) { return hydrogen_limit(r); });
}

Interval CoulombGroundState::truncated_domain(double tolerance) const {
  return widen_until_negligible([this](double r) { return value(r); }, default_domain(), tolerance, true);
}

double CoulombGroundState::hydrogen_limit(double r) const {
  const double l1 = cp_.l_quantum + 1.0;
  return std::exp(l1 * std::log(r) - cp_.z_charge / l1 * r - log_scale_hydrogen_);
}

Interval CoulombGroundState::default_domain() const {
  return {0.0, 40.0 / std::abs(cp_.z_charge) * (cp_.level + cp_.l_quantum + 1.0)};
}

}  // namespace pdm
