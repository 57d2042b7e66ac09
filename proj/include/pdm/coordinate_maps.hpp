#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "pdm/domain.hpp"
#include "pdm/models.hpp"
#include "pdm/solver.hpp"

namespace pdm {

/// r = e^x.
double to_radial(double x);
/// x = ln r; throws DomainError for r <= 0.
double from_radial(double r);

/// M(ln r) with derivatives taken in r.
MassTriple radial_mass(const MassProfile& mass, double r);

/// Sign carried by the kappa/2 term in the 1/r coefficient of the radial potential.
enum class HalfKappaSign {
  minus,  ///< 2Z = B'(2A'+1) - kappa/2: consistent with the radial equation
  plus,   ///< the alternative printed form, retained so the choice stays testable
};

/// Closed form  -(B'(2A'+1) -/+ kappa/2)/r - (eps_n + 1/4)/r^2 + E + B'^2 + (3/4) kappa^2.
double radial_effective_potential(const RationalMassMorseModel& model, int n, double r, double energy_shift = 0.0,
                                  HalfKappaSign sign = HalfKappaSign::minus);

/// Same potential assembled from its definitions: V-bar_eff of the 3-D radial
/// equation, then the first-derivative and centrifugal corrections of the 1-D form.
double radial_effective_potential_chain(const RationalMassMorseModel& model, int n, double r,
                                        double energy_shift = 0.0);

/// -2Z/r + l(l+1)/r^2 - kappa^2/4 - lambda_nl + E, the Coulomb reading of the same potential.
double coulomb_form_potential(const CoulombParams& cp, double r, double energy_shift = 0.0);

enum class ChainStage { full_line, radial_first_order, radial_3d, radial_1d };
std::string_view to_string(ChainStage stage);

struct StageReport {
  ChainStage stage;
  /// (coordinate, potential) samples: V_eff(x), V-hat(r), V-bar(r) and V-tilde(r) in stage order.
  std::vector<std::pair<double, double>> potential_samples;
  /// Worst relative residual of the stage's equation (or potential identity) over the samples.
  double max_discrepancy = 0.0;
};

struct MapChainReport {
  std::vector<StageReport> stages;
  double max_discrepancy = 0.0;
  /// Largest |xi_chain - xi_closed| relative to max |xi| (ground level only).
  double closed_form_gap = 0.0;
  /// |int |phi|^2 dx - int |xi|^2 / r^2 dr| for the chain-built xi (ground level only).
  double norm_gap = 0.0;
  bool wavefunction_checked = false;
};

/// Runs the x = ln r, phi-bar = sqrt(r) chi, chi = xi/r chain for level n.
///
/// For n = 0 the closed-form ground state is pushed through every stage and
/// each stage's differential equation is checked with exact derivatives. For
/// higher levels only the potential algebra of the last stage is compared.
/// sample_count = 0 yields an empty report.
MapChainReport verify_chain(const RationalMassMorseModel& model, int n, std::size_t sample_count,
                            double energy_shift = 0.0);

/// verify_chain variant where the closed forms come from `analytic` while the
/// operators use `model`; `analytic == model` reproduces verify_chain.
MapChainReport verify_chain(const RationalMassMorseModel& model, const RationalMassMorseModel& analytic, int n,
                            std::size_t sample_count, double energy_shift = 0.0);

/// Z for either sign of the kappa/2 term (minus reproduces coulomb_parameters).
double z_charge_for(const RationalMassMorseModel& model, HalfKappaSign sign);

/// max over radii of |(-d/dr (1/M) d/dr - 2Z/r + l(l+1)/r^2 - kappa^2/4 - lambda) xi|
/// divided by |kappa^2/4 + lambda| |xi|, with M = (1 + kappa r)^-2.
double coulomb_residual(const CoulombParams& cp, const JetFunction& xi, std::span<const double> radii);

}  // namespace pdm
