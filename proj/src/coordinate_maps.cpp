#include "pdm/coordinate_maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pdm/errors.hpp"
#include "pdm/quadrature.hpp"

namespace pdm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Non-finite discrepancies are reported as +inf so max() never swallows them.
double worsen(double current, double candidate) {
  if (!std::isfinite(candidate)) return kInf;
  return std::max(current, candidate);
}

double relative(double residual, double scale) {
  return std::abs(residual) / (scale + std::numeric_limits<double>::min());
}

// Quadrature reaches the infinite endpoints, where the log-space forms give inf - inf.
double squared_or_zero(double v) { return std::isfinite(v) ? v * v : 0.0; }

double potential_gap(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

// Barrier, Coulomb and constant pieces of eps_n, Z and l for the radial forms.
struct RadialData {
  double eps;
  double l;
  double b_prime_sq;
  double linear_coupling;
  double kappa;
};

RadialData radial_data(const RationalMassMorseModel& model, int n) {
  const CoulombParams cp = coulomb_parameters(model, n);
  return {model.energy(n), cp.l_quantum, model.b_prime_squared(), model.linear_coupling(), model.kappa()};
}

// V-bar_eff of the three-dimensional radial equation.
double radial_3d_potential(const MassProfile& mass, const RealFunction& v_hat_of_x, const RadialData& d, double r,
                           double energy_shift) {
  const MassTriple m = radial_mass(mass, r);
  const double l_half = d.l + 0.5;
  const double v_hat = v_hat_of_x(from_radial(r));
  return -(1.0 / m.value) * (-0.5 / r * m.first / m.value + l_half * l_half / (r * r)) + (v_hat - d.eps) / (r * r) +
         energy_shift;
}

double chain_tilde_potential(const MassProfile& mass, const RealFunction& v_hat_of_x, const RadialData& d, double r,
                             double energy_shift) {
  const MassTriple m = radial_mass(mass, r);
  return radial_3d_potential(mass, v_hat_of_x, d, r, energy_shift) - m.first / (m.value * m.value * r) +
         d.l * (d.l + 1.0) / (m.value * r * r);
}

}  // namespace

double to_radial(double x) { return std::exp(x); }

double from_radial(double r) {
  if (!(r > 0.0)) {
    std::ostringstream os;
    os << "radial coordinate must be positive (r = " << r << ")";
    throw DomainError(os.str());
  }
  return std::log(r);
}

MassTriple radial_mass(const MassProfile& mass, double r) {
  const MassTriple m = mass.evaluate(from_radial(r));
  return {m.value, m.first / r, (m.second - m.first) / (r * r)};
}

double radial_effective_potential(const RationalMassMorseModel& model, int n, double r, double energy_shift,
                                  HalfKappaSign sign) {
  if (!(r > 0.0)) throw DomainError("radial effective potential requires r > 0");
  const double eps = model.energy(n);
  const double kappa = model.kappa();
  const double half_kappa = sign == HalfKappaSign::minus ? -0.5 * kappa : 0.5 * kappa;
  return -(model.linear_coupling() + half_kappa) / r - (eps + 0.25) / (r * r) + energy_shift +
         model.b_prime_squared() + 0.75 * kappa * kappa;
}

double radial_effective_potential_chain(const RationalMassMorseModel& model, int n, double r, double energy_shift) {
  if (!(r > 0.0)) throw DomainError("radial effective potential requires r > 0");
  const RadialData d = radial_data(model, n);
  const MassProfile mass = model.mass();
  const RealFunction v_hat = [&model](double x) { return model.effective_potential(x); };
  return chain_tilde_potential(mass, v_hat, d, r, energy_shift);
}

double coulomb_form_potential(const CoulombParams& cp, double r, double energy_shift) {
  return -2.0 * cp.z_charge / r + cp.l_quantum * (cp.l_quantum + 1.0) / (r * r) - 0.25 * cp.kappa * cp.kappa -
         cp.lambda_nl + energy_shift;
}

double z_charge_for(const RationalMassMorseModel& model, HalfKappaSign sign) {
  const double quarter = 0.25 * model.kappa();
  return 0.5 * model.linear_coupling() + (sign == HalfKappaSign::minus ? -quarter : quarter);
}

double coulomb_residual(const CoulombParams& cp, const JetFunction& xi, std::span<const double> radii) {
  const double shifted = 0.25 * cp.kappa * cp.kappa + cp.lambda_nl;
  double worst = 0.0;
  bool any_nonzero = false;
  for (double r : radii) {
    const Jet f = xi(Jet::variable(r));
    const double w = 1.0 + cp.kappa * r;
    const double p = w * w;
    const double dp = 2.0 * cp.kappa * w;
    const double lhs = -p * f.d2 - dp * f.d1 +
                       (-2.0 * cp.z_charge / r + cp.l_quantum * (cp.l_quantum + 1.0) / (r * r) - shifted) * f.v;
    if (f.v != 0.0) any_nonzero = true;
    worst = worsen(worst, relative(lhs, std::abs(shifted) * std::abs(f.v)));
  }
  if (!any_nonzero && !radii.empty()) throw DegenerateTest("Coulomb residual is degenerate: xi vanishes at every radius");
  return worst;
}

std::string_view to_string(ChainStage stage) {
  switch (stage) {
    case ChainStage::full_line:
      return "full-line";
    case ChainStage::radial_first_order:
      return "radial-first-order";
    case ChainStage::radial_3d:
      return "radial-3d";
    case ChainStage::radial_1d:
      return "radial-1d";
  }
  return "unknown";
}

MapChainReport verify_chain(const RationalMassMorseModel& model, int n, std::size_t sample_count,
                            double energy_shift) {
  return verify_chain(model, model, n, sample_count, energy_shift);
}

MapChainReport verify_chain(const RationalMassMorseModel& model, const RationalMassMorseModel& analytic, int n,
                            std::size_t sample_count, double energy_shift) {
  MapChainReport report;
  if (sample_count == 0) return report;

  std::vector<StageReport> stages = {{ChainStage::full_line, {}, 0.0},
                                     {ChainStage::radial_first_order, {}, 0.0},
                                     {ChainStage::radial_3d, {}, 0.0},
                                     {ChainStage::radial_1d, {}, 0.0}};
  auto finish = [&](MapChainReport& rep) {
    for (const StageReport& s : stages) rep.max_discrepancy = worsen(rep.max_discrepancy, s.max_discrepancy);
    rep.max_discrepancy = worsen(rep.max_discrepancy, rep.closed_form_gap);
    rep.max_discrepancy = worsen(rep.max_discrepancy, rep.norm_gap);
    rep.stages = std::move(stages);
  };

  // Closed-form side: energy, Coulomb constants and the ground state.
  RadialData d{};
  CoulombParams cp;
  try {
    d = radial_data(analytic, n);
    cp = coulomb_parameters(analytic, n);
  } catch (const Error&) {
    for (StageReport& s : stages) s.max_discrepancy = kInf;
    finish(report);
    return report;
  }

  const MassProfile mass = model.mass();
  const RealFunction v_eff = [&model](double x) { return model.effective_potential(x); };

  // Radii spread geometrically from 0.1 to the default Coulomb cut.
  const double r_max = 40.0 / std::abs(cp.z_charge) * (n + cp.l_quantum + 1.0);
  std::vector<double> radii(sample_count);
  for (std::size_t i = 0; i < sample_count; ++i) {
    const double t = sample_count == 1 ? 0.5 : static_cast<double>(i) / static_cast<double>(sample_count - 1);
    radii[i] = 0.1 * std::pow(r_max / 0.1, t);
  }

  const bool with_wavefunction = n == 0 && analytic.mu_ground() > 0.0;
  report.wavefunction_checked = with_wavefunction;

  auto phi = [&analytic](const Jet& x) { return analytic.ground_wavefunction(x); };
  auto phi_bar = [&](const Jet& r) { return phi(log(r)); };
  auto chi = [&](const Jet& r) { return phi_bar(r) / sqrt(r); };
  auto xi = [&](const Jet& r) { return r * chi(r); };

  for (double r : radii) {
    const double x = from_radial(r);
    try {
      const MassTriple mx = mass.evaluate(x);
      const MassTriple mr = radial_mass(mass, r);
      const double v_x = v_eff(x);
      const double v_bar = radial_3d_potential(mass, v_eff, d, r, energy_shift);
      const double v_tilde_closed = radial_effective_potential(analytic, n, r, energy_shift);
      const double v_tilde_chain = chain_tilde_potential(mass, v_eff, d, r, energy_shift);
      const double v_coulomb = coulomb_form_potential(cp, r, energy_shift);

      stages[0].potential_samples.emplace_back(x, v_x);
      stages[1].potential_samples.emplace_back(r, v_x);
      stages[2].potential_samples.emplace_back(r, v_bar);
      stages[3].potential_samples.emplace_back(r, v_tilde_chain);

      double& last = stages[3].max_discrepancy;
      last = worsen(last, potential_gap(v_tilde_closed, v_tilde_chain));
      last = worsen(last, potential_gap(v_coulomb, v_tilde_chain));
      if (!with_wavefunction) continue;

      // PDM equation for phi(x) on the full line.
      {
        const Jet f = phi(Jet::variable(x));
        const double t1 = -f.d2 / mx.value;
        const double t2 = mx.first / (mx.value * mx.value) * f.d1;
        const double t3 = (v_x - d.eps) * f.v;
        stages[0].max_discrepancy =
            worsen(stages[0].max_discrepancy, relative(t1 + t2 + t3, std::abs(t1) + std::abs(t2) + std::abs(t3)));
      }
      // First-order radial form for phi-bar(r).
      {
        const Jet f = phi_bar(Jet::variable(r));
        const double t1 = -f.d2 / mr.value;
        const double t2 = (mr.first / mr.value - 1.0 / r) / mr.value * f.d1;
        const double t3 = (v_x - d.eps) / (r * r) * f.v;
        stages[1].max_discrepancy =
            worsen(stages[1].max_discrepancy, relative(t1 + t2 + t3, std::abs(t1) + std::abs(t2) + std::abs(t3)));
      }
      // Three-dimensional radial form for chi(r).
      {
        const Jet f = chi(Jet::variable(r));
        const double t1 = -f.d2 / mr.value;
        const double t2 = (mr.first / mr.value - 2.0 / r) / mr.value * f.d1;
        const double t3 = d.l * (d.l + 1.0) / (mr.value * r * r) * f.v;
        const double t4 = (v_bar - energy_shift) * f.v;
        stages[2].max_discrepancy =
            worsen(stages[2].max_discrepancy, relative(t1 + t2 + t3 + t4, std::abs(t1) + std::abs(t2) + std::abs(t3) +
                                                                              std::abs(t4)));
      }
      // One-dimensional radial form for xi(r), with V-tilde and with the Coulomb reading.
      {
        const Jet f = xi(Jet::variable(r));
        const double p = 1.0 / mr.value;
        const double dp = -mr.first / (mr.value * mr.value);
        const double t1 = -p * f.d2 - dp * f.d1;
        const double t2 = (v_tilde_chain - energy_shift) * f.v;
        const double t3 = (v_coulomb - energy_shift) * f.v;
        const double scale_tilde = std::abs(p * f.d2) + std::abs(dp * f.d1) + std::abs(t2);
        const double scale_coulomb = std::abs(p * f.d2) + std::abs(dp * f.d1) + std::abs(t3);
        double& s = stages[3].max_discrepancy;
        s = worsen(s, relative(t1 + t2, scale_tilde));
        s = worsen(s, relative(t1 + t3, scale_coulomb));
      }
    } catch (const Error&) {
      for (StageReport& s : stages) s.max_discrepancy = kInf;
    }
  }

  if (with_wavefunction) {
    try {
      const CoulombGroundState closed(cp, analytic);
      const double xi_norm_sq = quadrature::integrate_half_line([&](double r) {
        return r > 0.0 ? squared_or_zero(xi(Jet(r)).v) : 0.0;
      });
      const double scale = 1.0 / std::sqrt(xi_norm_sq);
      double peak = 0.0;
      double gap = 0.0;
      for (double r : radii) {
        const double a = scale * xi(Jet(r)).v;
        const double b = closed.value(r);
        peak = std::max(peak, std::abs(b));
        gap = worsen(gap, std::abs(a - b));
      }
      report.closed_form_gap = std::isfinite(gap) ? gap / peak : kInf;

      const double norm_x = quadrature::integrate_line([&](double x) {
        return squared_or_zero(phi(Jet(x)).v);
      });
      const double norm_r = quadrature::integrate_half_line([&](double r) {
        return r > 0.0 ? squared_or_zero(xi(Jet(r)).v) / (r * r) : 0.0;
      });
      report.norm_gap = std::abs(norm_x - norm_r);
    } catch (const Error&) {
      report.closed_form_gap = kInf;
    }
  }

  finish(report);
  return report;
}

}  // namespace pdm
