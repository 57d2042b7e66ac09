#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pdm/domain.hpp"
#include "pdm/jet.hpp"

namespace pdm {

/// Closed-form function evaluated on a Jet seed to get exact derivatives.
using JetFunction = std::function<Jet(const Jet&)>;

/// -(p y')' + q y = lambda w y with p, w > 0; an empty `weight` means w = 1.
struct SturmLiouvilleProblem {
  RealFunction p;
  RealFunction q;
  RealFunction weight;
};

/// Symmetric tridiagonal discretization of -d/dx p(x) d/dx + V_eff(x), p = 1/M,
/// with Dirichlet conditions at both grid ends.
struct DiscretizedOperator {
  Grid grid;
  std::vector<double> diagonal;      ///< one entry per interior node
  std::vector<double> off_diagonal;  ///< diagonal.size() - 1 entries
  bool symmetric = true;
  /// sqrt(w) at the interior nodes for weighted problems (empty when w = 1); the
  /// stored matrix is W^{-1/2} A W^{-1/2}.
  std::vector<double> sqrt_weight;

  std::size_t size() const { return diagonal.size(); }
};

struct EigenResult {
  std::vector<double> eigenvalues;  ///< ascending
  /// Grid samples of each eigenvector (endpoints included, zero), unit trapezoid norm
  /// (weighted by w for weighted problems).
  std::optional<std::vector<std::vector<double>>> eigenvectors;
  Grid grid;
  bool extrapolated = false;
};

/// Conservative second-order stencil with p sampled at cell midpoints.
DiscretizedOperator discretize(const MassProfile& mass, const RealFunction& v_eff, const Grid& grid);
DiscretizedOperator discretize(const RealFunction& inverse_mass, const RealFunction& v_eff, const Grid& grid);
DiscretizedOperator discretize(const SturmLiouvilleProblem& problem, const Grid& grid);

/// Number of eigenvalues strictly below `shift` (Sturm sequence).
std::size_t sturm_count(const DiscretizedOperator& op, double shift);

/// The k smallest eigenvalues by bisection, optionally with inverse-iteration eigenvectors.
EigenResult eigenvalues_bisect(const DiscretizedOperator& op, std::size_t k, bool with_vectors = false,
                               double absolute_tolerance = 1e-12);

/// (4 fine - coarse)/3 for a second-order method; equal inputs return that value exactly.
double richardson_combine(double coarse, double fine);

/// Solves at h and h/2 and combines (4 lambda_{h/2} - lambda_h)/3.
/// Eigenvectors, when requested, come from the fine grid.
EigenResult refine_richardson(const RealFunction& inverse_mass, const RealFunction& v_eff, const Grid& grid,
                              std::size_t k, bool with_vectors = false);
EigenResult refine_richardson(const SturmLiouvilleProblem& problem, const Grid& grid, std::size_t k,
                              bool with_vectors = false);
EigenResult refine_richardson(const MassProfile& mass, const RealFunction& v_eff, const Grid& grid,
                              std::size_t k, bool with_vectors = false);

/// Controls for solve_with_widening.
struct WideningOptions {
  /// Relative size of an eigenvector's first/last interior sample that triggers widening.
  double boundary_tolerance = 1e-10;
  int max_widenings = 8;
  bool widen_left = true;
  bool widen_right = true;
};

/// Richardson solve that first grows the domain (at fixed spacing) until the k
/// lowest eigenvectors are negligible next to both cuts. A side whose growth
/// overflows the mass or potential stays where it is.
EigenResult solve_with_widening(const RealFunction& inverse_mass, const RealFunction& v_eff, const Grid& initial,
                                std::size_t k, const WideningOptions& options = {});
EigenResult solve_with_widening(const SturmLiouvilleProblem& problem, const Grid& initial, std::size_t k,
                                const WideningOptions& options = {});

/// max_i |(-phi''/M + M' phi'/M^2 + (V_eff - eps) phi)(x_i)| / (|eps| |phi(x_i)| + floor).
double residual_norm(const MassProfile& mass, const RealFunction& v_eff, double eps, const JetFunction& phi,
                     std::span<const double> sample_points);

/// Sign changes along a sampled function, ignoring samples below rel_floor * max|v|.
int count_sign_changes(std::span<const double> values, double rel_floor = 1e-9);

/// n uniformly spaced points on [lo, hi] (endpoints included).
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace pdm
