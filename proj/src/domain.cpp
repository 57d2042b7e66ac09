#include "pdm/domain.hpp"

#include <cmath>
#include <sstream>

#include "pdm/errors.hpp"

namespace pdm {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double checked(double value, const char* what, double x) {
  if (!std::isfinite(value)) {
    std::ostringstream os;
    os << "domain overflow: " << what << " is not finite at x = " << x;
    throw DomainOverflow(os.str(), x);
  }
  return value;
}

}  // namespace

void AmbiguityParams::validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw InvalidParameter("ambiguity parameters alpha, beta must be finite");
  }
}

MassProfile MassProfile::constant(double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidParameter("constant mass must be a positive finite value");
  }
  return MassProfile(Constant{value});
}

MassProfile MassProfile::exponential_decay() { return MassProfile(ExponentialDecay{}); }

MassProfile MassProfile::rational(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw InvalidParameter("rational mass requires kappa > 0");
  }
  return MassProfile(RationalKappa{kappa});
}

MassTriple MassProfile::evaluate(double x) const {
  const MassTriple t = std::visit(
      Overloaded{
          [](const Constant& c) { return MassTriple{c.value, 0.0, 0.0}; },
          [x](const ExponentialDecay&) {
            const double m = std::exp(-2.0 * x);
            return MassTriple{m, -2.0 * m, 4.0 * m};
          },
          [x](const RationalKappa& r) {
            // u = kappa e^x, M = (1+u)^-2, M' = -2u(1+u)^-3, M'' = (4u^2 - 2u)(1+u)^-4.
            const double u = r.kappa * std::exp(x);
            const double s = 1.0 / (1.0 + u);
            const double s2 = s * s;
            return MassTriple{s2, -2.0 * u * s2 * s, (4.0 * u * u - 2.0 * u) * s2 * s2};
          },
      },
      variant_);
  checked(t.value, "M", x);
  checked(t.first, "M'", x);
  checked(t.second, "M''", x);
  if (!(t.value > 0.0)) {
    throw DomainOverflow("domain overflow: M underflows to zero", x);
  }
  return t;
}

double MassProfile::inverse(double x) const {
  const double p = std::visit(Overloaded{
                                  [](const Constant& c) { return 1.0 / c.value; },
                                  [x](const ExponentialDecay&) { return std::exp(2.0 * x); },
                                  [x](const RationalKappa& r) {
                                    const double w = 1.0 + r.kappa * std::exp(x);
                                    return w * w;
                                  },
                              },
                              variant_);
  return checked(p, "1/M", x);
}

std::string MassProfile::describe() const {
  return std::visit(Overloaded{
                        [](const Constant& c) {
                          std::ostringstream os;
                          os << "constant(" << c.value << ")";
                          return os.str();
                        },
                        [](const ExponentialDecay&) { return std::string("exp(-2x)"); },
                        [](const RationalKappa& r) {
                          std::ostringstream os;
                          os << "(1+" << r.kappa << " e^x)^-2";
                          return os.str();
                        },
                    },
                    variant_);
}

double MorseParams::operator()(double x) const {
  const double e = std::exp(x);
  return v0 * e * e - b_coupling * (2.0 * a_coupling + 1.0) * e;
}

void MorseParams::validate() const {
  if (!std::isfinite(v0) || !std::isfinite(a_coupling) || !std::isfinite(b_coupling)) {
    throw InvalidParameter("Morse couplings must be finite");
  }
  if (!(b_coupling > 0.0)) {
    throw InvalidParameter("Morse coupling B must be positive (B > 0)");
  }
  if (!(a_coupling > 0.0)) {
    throw NoBoundState("Morse coupling A must be positive for a bound state to exist (n_max < A)");
  }
}

Grid::Grid(double x_min, double x_max, std::size_t n_points) : x_min_(x_min), x_max_(x_max), n_points_(n_points) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
    throw InvalidParameter("grid requires finite x_min < x_max");
  }
  if (n_points < 3) {
    throw InvalidParameter("grid requires at least 3 points");
  }
}

double Grid::point(std::size_t i) const {
  if (i + 1 == n_points_) return x_max_;
  return x_min_ + static_cast<double>(i) * spacing();
}

double effective_potential(const RealFunction& v, const MassProfile& mass, const AmbiguityParams& amb, double x) {
  const MassTriple m = mass.evaluate(x);
  const double curvature = m.second / (m.value * m.value);
  const double slope = m.first * m.first / (m.value * m.value * m.value);
  const double result = v(x) + amb.curvature_weight() * curvature - amb.slope_weight() * slope;
  return checked(result, "V_eff", x);
}

double kinetic_correction(const MassProfile& mass, double x) {
  const MassTriple m = mass.evaluate(x);
  const double result =
      0.75 * m.first * m.first / (m.value * m.value * m.value) - 0.5 * m.second / (m.value * m.value);
  return checked(result, "kinetic correction", x);
}

}  // namespace pdm
