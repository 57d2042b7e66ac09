#include "pdm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pdm/errors.hpp"

namespace pdm {
namespace {

double finite_or_throw(double value, const char* what, double x) {
  if (!std::isfinite(value)) {
    std::ostringstream os;
    os << "domain too wide: " << what << " is not finite at node x = " << x;
    throw DomainOverflow(os.str(), x);
  }
  return value;
}

// Solves (T - shift I) x = rhs in place with partial pivoting (LAPACK gttrf/gttrs layout).
void solve_shifted(const DiscretizedOperator& op, double shift, std::vector<double>& rhs) {
  const std::size_t n = op.size();
  std::vector<double> dl(n > 0 ? n - 1 : 0), d(n), du(n > 0 ? n - 1 : 0), du2(n > 1 ? n - 2 : 0, 0.0);
  std::vector<unsigned char> swapped(n, 0);
  for (std::size_t i = 0; i < n; ++i) d[i] = op.diagonal[i] - shift;
  for (std::size_t i = 0; i + 1 < n; ++i) dl[i] = du[i] = op.off_diagonal[i];

  const double tiny = std::numeric_limits<double>::epsilon() *
                      std::max(1.0, *std::max_element(op.diagonal.begin(), op.diagonal.end(),
                                                      [](double a, double b) { return std::abs(a) < std::abs(b); }));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = tiny;
      const double f = dl[i] / d[i];
      dl[i] = f;
      d[i + 1] -= f * du[i];
    } else {
      const double f = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = f;
      const double t = du[i];
      du[i] = d[i + 1];
      d[i + 1] = t - f * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -f * du[i + 1];
      }
      swapped[i] = 1;
    }
  }
  if (n > 0 && d[n - 1] == 0.0) d[n - 1] = tiny;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (swapped[i]) std::swap(rhs[i], rhs[i + 1]);
    rhs[i + 1] -= dl[i] * rhs[i];
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = rhs[ii];
    if (ii + 1 < n) s -= du[ii] * rhs[ii + 1];
    if (ii + 2 < n) s -= du2[ii] * rhs[ii + 2];
    rhs[ii] = s / d[ii];
  }
}

std::vector<double> inverse_iteration(const DiscretizedOperator& op, double eigenvalue) {
  const std::size_t n = op.size();
  std::vector<double> v(n);
  // Deterministic, non-symmetric start vector.
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i) + 0.3);
  const double shift = eigenvalue + 1e-13 * std::max(1.0, std::abs(eigenvalue));
  for (int it = 0; it < 4; ++it) {
    solve_shifted(op, shift, v);
    double scale = 0.0;
    for (double e : v) scale = std::max(scale, std::abs(e));
    for (double& e : v) e /= scale;
  }
  return v;
}

// Pads with the Dirichlet zeros and undoes the W^{1/2} scaling; the trapezoid
// sum of w y^2 is then the plain sum of squares of the scaled vector.
std::vector<double> to_grid_samples(const std::vector<double>& interior, double h,
                                    const std::vector<double>& sqrt_weight) {
  std::vector<double> full(interior.size() + 2, 0.0);
  double norm = 0.0;
  for (std::size_t i = 0; i < interior.size(); ++i) {
    norm += interior[i] * interior[i];
    full[i + 1] = sqrt_weight.empty() ? interior[i] : interior[i] / sqrt_weight[i];
  }
  std::size_t peak = 0;
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (std::abs(full[i]) > std::abs(full[peak])) peak = i;
  }
  const double scale = (full[peak] < 0.0 ? -1.0 : 1.0) / std::sqrt(norm * h);
  for (double& e : full) e *= scale;
  return full;
}

}  // namespace

DiscretizedOperator discretize(const RealFunction& inverse_mass, const RealFunction& v_eff, const Grid& grid) {
  return discretize(SturmLiouvilleProblem{inverse_mass, v_eff, {}}, grid);
}

DiscretizedOperator discretize(const SturmLiouvilleProblem& problem, const Grid& grid) {
  const RealFunction& inverse_mass = problem.p;
  const RealFunction& v_eff = problem.q;
  const std::size_t m = grid.interior_count();
  const double h = grid.spacing();
  const double h2 = h * h;

  std::vector<double> p(grid.n_points() - 1);
  for (std::size_t i = 0; i + 1 < grid.n_points(); ++i) {
    const double xm = 0.5 * (grid.point(i) + grid.point(i + 1));
    const double pi = finite_or_throw(inverse_mass(xm), "1/M", xm);
    if (!(pi > 0.0)) {
      std::ostringstream os;
      os << "mass positivity violated at midpoint x = " << xm;
      throw DomainError(os.str());
    }
    p[i] = pi;
  }

  DiscretizedOperator op{grid, std::vector<double>(m), std::vector<double>(m > 0 ? m - 1 : 0), true, {}};
  for (std::size_t i = 0; i < m; ++i) {
    const double x = grid.point(i + 1);
    const double v = finite_or_throw(v_eff(x), "V_eff", x);
    op.diagonal[i] = finite_or_throw((p[i] + p[i + 1]) / h2 + v, "diagonal entry", x);
    if (i + 1 < m) op.off_diagonal[i] = -p[i + 1] / h2;
  }
  if (problem.weight) {
    op.sqrt_weight.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double x = grid.point(i + 1);
      const double w = finite_or_throw(problem.weight(x), "weight", x);
      if (!(w > 0.0)) throw DomainError("weight must be positive");
      op.sqrt_weight[i] = std::sqrt(w);
    }
    for (std::size_t i = 0; i < m; ++i) {
      op.diagonal[i] /= op.sqrt_weight[i] * op.sqrt_weight[i];
      if (i + 1 < m) op.off_diagonal[i] /= op.sqrt_weight[i] * op.sqrt_weight[i + 1];
    }
  }
  return op;
}

DiscretizedOperator discretize(const MassProfile& mass, const RealFunction& v_eff, const Grid& grid) {
  return discretize([&mass](double x) { return mass.inverse(x); }, v_eff, grid);
}

std::size_t sturm_count(const DiscretizedOperator& op, double shift) {
  const std::size_t n = op.size();
  double emax = 0.0;
  for (double e : op.off_diagonal) emax = std::max(emax, e * e);
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, emax);

  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    q = op.diagonal[i] - shift - (i > 0 ? op.off_diagonal[i - 1] * op.off_diagonal[i - 1] / q : 0.0);
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

EigenResult eigenvalues_bisect(const DiscretizedOperator& op, std::size_t k, bool with_vectors,
                               double absolute_tolerance) {
  const std::size_t n = op.size();
  if (k > n) {
    std::ostringstream os;
    os << "requested " << k << " eigenvalues but the operator has only " << n << " interior points";
    throw InvalidParameter(os.str());
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(op.off_diagonal[i - 1]) : 0.0) +
                          (i + 1 < n ? std::abs(op.off_diagonal[i]) : 0.0);
    lo = std::min(lo, op.diagonal[i] - radius);
    hi = std::max(hi, op.diagonal[i] + radius);
  }
  const double pad = std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)) + absolute_tolerance;
  lo -= pad;
  hi += pad;

  EigenResult result{{}, std::nullopt, op.grid, false};
  result.eigenvalues.reserve(k);
  double floor = lo;
  for (std::size_t j = 0; j < k; ++j) {
    double a = floor;
    double b = hi;
    // Shrink the initial upper bracket geometrically; Gerschgorin's bound is huge when 1/M is.
    for (double step = 1.0; a + step < b; step *= 2.0) {
      if (sturm_count(op, a + step) > j) {
        b = a + step;
        break;
      }
    }
    while (b - a > absolute_tolerance) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(op, mid) > j) {
        b = mid;
      } else {
        a = mid;
      }
    }
    const double lambda = 0.5 * (a + b);
    result.eigenvalues.push_back(lambda);
    floor = a;
  }

  if (with_vectors) {
    std::vector<std::vector<double>> vectors;
    vectors.reserve(k);
    for (double lambda : result.eigenvalues) {
      vectors.push_back(to_grid_samples(inverse_iteration(op, lambda), op.grid.spacing(), op.sqrt_weight));
    }
    result.eigenvectors = std::move(vectors);
  }
  return result;
}

double richardson_combine(double coarse, double fine) { return coarse == fine ? fine : (4.0 * fine - coarse) / 3.0; }

EigenResult refine_richardson(const RealFunction& inverse_mass, const RealFunction& v_eff, const Grid& grid,
                              std::size_t k, bool with_vectors) {
  return refine_richardson(SturmLiouvilleProblem{inverse_mass, v_eff, {}}, grid, k, with_vectors);
}

EigenResult refine_richardson(const SturmLiouvilleProblem& problem, const Grid& grid, std::size_t k,
                              bool with_vectors) {
  const EigenResult coarse = eigenvalues_bisect(discretize(problem, grid), k);
  EigenResult fine = eigenvalues_bisect(discretize(problem, grid.refined()), k, with_vectors);
  for (std::size_t i = 0; i < k; ++i) {
    fine.eigenvalues[i] = richardson_combine(coarse.eigenvalues[i], fine.eigenvalues[i]);
  }
  fine.extrapolated = true;
  return fine;
}

EigenResult refine_richardson(const MassProfile& mass, const RealFunction& v_eff, const Grid& grid, std::size_t k,
                              bool with_vectors) {
  return refine_richardson([&mass](double x) { return mass.inverse(x); }, v_eff, grid, k, with_vectors);
}

EigenResult solve_with_widening(const RealFunction& inverse_mass, const RealFunction& v_eff, const Grid& initial,
                                std::size_t k, const WideningOptions& options) {
  return solve_with_widening(SturmLiouvilleProblem{inverse_mass, v_eff, {}}, initial, k, options);
}

EigenResult solve_with_widening(const SturmLiouvilleProblem& problem, const Grid& initial, std::size_t k,
                                const WideningOptions& options) {
  const double h = initial.spacing();
  double lo = initial.x_min();
  double hi = initial.x_max();
  bool grow_left = options.widen_left;
  bool grow_right = options.widen_right;

  auto make_grid = [h](double a, double b) {
    const auto n = static_cast<std::size_t>(std::llround((b - a) / h)) + 1;
    return Grid(a, a + static_cast<double>(n - 1) * h, n);
  };

  Grid grid = initial;
  for (int round = 0; round < options.max_widenings && (grow_left || grow_right); ++round) {
    const EigenResult probe = eigenvalues_bisect(discretize(problem, grid), k, true);
    bool left_heavy = false;
    bool right_heavy = false;
    for (const auto& vec : *probe.eigenvectors) {
      double peak = 0.0;
      for (double e : vec) peak = std::max(peak, std::abs(e));
      left_heavy = left_heavy || std::abs(vec[1]) > options.boundary_tolerance * peak;
      right_heavy = right_heavy || std::abs(vec[vec.size() - 2]) > options.boundary_tolerance * peak;
    }
    if (!(left_heavy && grow_left) && !(right_heavy && grow_right)) break;

    const double width = hi - lo;
    double new_lo = (left_heavy && grow_left) ? lo - 0.5 * width : lo;
    double new_hi = (right_heavy && grow_right) ? hi + 0.5 * width : hi;
    try {
      const Grid candidate = make_grid(new_lo, new_hi);
      (void)discretize(problem, candidate.refined());
      grid = candidate;
      lo = new_lo;
      hi = grid.x_max();
    } catch (const DomainOverflow& e) {
      // Keep whichever side overflowed fixed and retry with the other one.
      if (new_hi != hi && e.where() > hi) {
        grow_right = false;
      } else if (new_lo != lo && e.where() < lo) {
        grow_left = false;
      } else {
        throw;
      }
    }
  }
  return refine_richardson(problem, grid, k, true);
}

double residual_norm(const MassProfile& mass, const RealFunction& v_eff, double eps, const JetFunction& phi,
                     std::span<const double> sample_points) {
  constexpr double kFloor = std::numeric_limits<double>::min();
  double worst = 0.0;
  bool any_nonzero = false;
  for (double x : sample_points) {
    const Jet f = phi(Jet::variable(x));
    const MassTriple m = mass.evaluate(x);
    const double lhs = -f.d2 / m.value + m.first / (m.value * m.value) * f.d1 + (v_eff(x) - eps) * f.v;
    if (f.v != 0.0) any_nonzero = true;
    const double rel = std::abs(lhs) / (std::abs(eps) * std::abs(f.v) + kFloor);
    if (std::isnan(rel)) return std::numeric_limits<double>::quiet_NaN();
    worst = std::max(worst, rel);
  }
  if (!any_nonzero) throw DegenerateTest("residual test is degenerate: phi vanishes at every sample point");
  return worst;
}

int count_sign_changes(std::span<const double> values, double rel_floor) {
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, std::abs(v));
  const double floor = rel_floor * peak;
  int changes = 0;
  int last_sign = 0;
  for (double v : values) {
    if (std::abs(v) <= floor) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++changes;
    last_sign = s;
  }
  return changes;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  if (n > 0) out.back() = hi;
  return out;
}

}  // namespace pdm
