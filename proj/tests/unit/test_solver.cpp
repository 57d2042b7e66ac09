#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pdm/errors.hpp"
#include "pdm/models.hpp"
#include "pdm/solver.hpp"

using namespace pdm;

namespace {

const RealFunction kZero = [](double) { return 0.0; };
const RealFunction kUnitInverseMass = [](double) { return 1.0; };

DiscretizedOperator two_by_two() {
  // Grid with 2 interior nodes and h = 1: diagonal p+p = 2, off-diagonal -1.
  return discretize(MassProfile::constant(1.0), kZero, Grid(0.0, 3.0, 4));
}

}  // namespace

TEST_CASE("2x2 tridiagonal") {
  const DiscretizedOperator op = two_by_two();
  REQUIRE(op.size() == 2);
  CHECK(op.diagonal[0] == 2.0);
  CHECK(op.off_diagonal[0] == -1.0);
  const EigenResult r = eigenvalues_bisect(op, 2);
  CHECK(r.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_THROWS_AS(eigenvalues_bisect(op, 3), InvalidParameter);
}

TEST_CASE("Sturm count below zero of a positive definite operator") {
  const DiscretizedOperator op = discretize(MassProfile::constant(1.0), kZero, Grid(0.0, 1.0, 50));
  CHECK(sturm_count(op, 0.0) == 0);
  CHECK(sturm_count(op, 1e9) == op.size());
}

TEST_CASE("Sturm count is monotone in the shift") {
  const RationalMassMorseModel model(2.0, 1.0, {0.0, 0.0}, 0.1);
  const DiscretizedOperator op =
      discretize(model.mass(), [&](double x) { return model.effective_potential(x); }, Grid(-12.0, 12.0, 601));
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    double a = dist(rng), b = dist(rng);
    if (a > b) std::swap(a, b);
    CHECK(sturm_count(op, a) <= sturm_count(op, b));
  }
}

TEST_CASE("assembled operator is symmetric by construction") {
  const RationalMassMorseModel model(2.0, 1.0, {0.2, -0.3}, 0.4);
  const DiscretizedOperator op =
      discretize(model.mass(), [&](double x) { return model.effective_potential(x); }, Grid(-5.0, 5.0, 41));
  CHECK(op.symmetric);
  // Row i's super-diagonal entry and row i+1's sub-diagonal entry are the same stored
  // value -p_{i+1/2}/h^2; check it against the midpoint sample directly.
  const double h = op.grid.spacing();
  for (std::size_t i = 0; i + 1 < op.size(); ++i) {
    const double xm = 0.5 * (op.grid.point(i + 1) + op.grid.point(i + 2));
    CHECK(op.off_diagonal[i] == -model.mass().inverse(xm) / (h * h));
  }
}

TEST_CASE("particle in a box") {
  const Grid grid(0.0, std::numbers::pi, 2000);
  const EigenResult r = eigenvalues_bisect(discretize(kUnitInverseMass, kZero, grid), 3, true);
  CHECK(std::abs(r.eigenvalues[0] - 1.0) < 1e-4);
  CHECK(std::abs(r.eigenvalues[1] - 4.0) < 1e-4);
  CHECK(std::abs(r.eigenvalues[2] - 9.0) < 1e-4);

  // Eigenvectors: unit trapezoid norm and sqrt(2/pi) sin(kx) shape.
  const auto& vecs = *r.eigenvectors;
  const double h = grid.spacing();
  for (std::size_t k = 0; k < 3; ++k) {
    double norm = 0.0;
    for (double v : vecs[k]) norm += v * v * h;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(count_sign_changes(vecs[k]) == static_cast<int>(k));
  }
  double gap = 0.0;
  for (std::size_t i = 0; i < grid.n_points(); ++i) {
    gap = std::max(gap, std::abs(vecs[0][i] - std::sqrt(2.0 / std::numbers::pi) * std::sin(grid.point(i))));
  }
  CHECK(gap < 1e-5);
}

TEST_CASE("Richardson extrapolation on the box") {
  const Grid grid(0.0, std::numbers::pi, 201);
  const EigenResult r = refine_richardson(kUnitInverseMass, kZero, grid, 2);
  CHECK(r.extrapolated);
  CHECK(std::abs(r.eigenvalues[0] - 1.0) < 1e-7);
  CHECK(std::abs(r.eigenvalues[1] - 4.0) < 1e-6);

  const double coarse = eigenvalues_bisect(discretize(kUnitInverseMass, kZero, grid), 1).eigenvalues[0];
  const double fine = eigenvalues_bisect(discretize(kUnitInverseMass, kZero, grid.refined()), 1).eigenvalues[0];
  const double order = std::log2(std::abs(coarse - 1.0) / std::abs(fine - 1.0));
  CHECK(order == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("Richardson leaves a resolution-independent value unchanged") {
  // A constant potential shifts every discrete eigenvalue by the same amount at any h.
  const Grid grid(0.0, 1.0, 41);
  const RealFunction five = [](double) { return 5.0; };
  const EigenResult base = refine_richardson(kUnitInverseMass, kZero, grid, 1);
  const EigenResult shifted = refine_richardson(kUnitInverseMass, five, grid, 1);
  CHECK(shifted.eigenvalues[0] - base.eigenvalues[0] == doctest::Approx(5.0).epsilon(1e-12));

  // Fixed point: identical coarse and fine values extrapolate to themselves exactly.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1e3, 1e3);
  for (int i = 0; i < 100; ++i) {
    const double c = dist(rng);
    CHECK(richardson_combine(c, c) == c);
  }
  CHECK(richardson_combine(1.0, 1.0 - 3e-4) == doctest::Approx(1.0 - 4e-4).epsilon(1e-14));
}

TEST_CASE("constant-mass Morse ladder") {
  const double a = 2.5, b = 1.0;
  const RealFunction u = [=](double x) { return b * b * std::exp(-2.0 * x) - b * (2.0 * a + 1.0) * std::exp(-x); };
  const EigenResult r = solve_with_widening(kUnitInverseMass, u, Grid(-6.0, 10.0, 6401), 3);
  CHECK(r.extrapolated);
  CHECK(std::abs(r.eigenvalues[0] + 6.25) < 1e-6);
  CHECK(std::abs(r.eigenvalues[1] + 2.25) < 1e-6);
  CHECK(std::abs(r.eigenvalues[2] + 0.25) < 1e-6);
  CHECK(r.grid.x_max() > 40.0);
}

TEST_CASE("eigenvalues are strictly increasing") {
  const RationalMassMorseModel model(2.0, 1.0, {0.0, 0.0}, 0.1);
  const EigenResult r = eigenvalues_bisect(
      discretize(model.mass(), [&](double x) { return model.effective_potential(x); }, Grid(-12.0, 12.0, 601)), 6);
  for (std::size_t i = 1; i < r.eigenvalues.size(); ++i) CHECK(r.eigenvalues[i] > r.eigenvalues[i - 1]);
}

TEST_CASE("eigenvalues decrease as the domain widens") {
  const RationalMassMorseModel model(2.0, 1.0, {0.0, 0.0}, 0.1);
  const RealFunction v = [&](double x) { return model.effective_potential(x); };
  // Same spacing 0.04, nested and node-aligned.
  const EigenResult small = eigenvalues_bisect(discretize(model.mass(), v, Grid(-4.0, 4.0, 201)), 3);
  const EigenResult mid = eigenvalues_bisect(discretize(model.mass(), v, Grid(-8.0, 8.0, 401)), 3);
  const EigenResult large = eigenvalues_bisect(discretize(model.mass(), v, Grid(-12.0, 12.0, 601)), 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(mid.eigenvalues[k] <= small.eigenvalues[k]);
    CHECK(large.eigenvalues[k] <= mid.eigenvalues[k]);
  }
}

TEST_CASE("discretization errors name the failing node") {
  const RealFunction v = [](double) { return 0.0; };
  try {
    (void)discretize(MassProfile::exponential_decay(), v, Grid(0.0, 400.0, 101));
    FAIL("expected DomainOverflow");
  } catch (const DomainOverflow& e) {
    CHECK(e.where() > 350.0);
  }
}

TEST_CASE("residual norm of the exponential-mass ground state") {
  const ExpMassMorseModel model(2.5, 1.0, {0.0, 0.0}, 0);
  const RealFunction v_eff = [&](double x) { return model.effective_potential(x); };
  const JetFunction phi = [&](const Jet& x) { return model.wavefunction(x); };
  const auto samples = linspace(-3.0, 6.0, 50);
  CHECK(residual_norm(model.mass(), v_eff, model.energy(), phi, samples) <= 1e-8);
  CHECK(residual_norm(model.mass(), v_eff, model.energy() + 0.1, phi, samples) > 1e-2);

  const JetFunction zero = [](const Jet&) { return Jet(0.0); };
  CHECK_THROWS_AS(residual_norm(model.mass(), v_eff, model.energy(), zero, samples), DegenerateTest);
}

TEST_CASE("sign-change counting") {
  const std::vector<double> v = {0.0, 1.0, 2.0, 1e-14, -1.0, -2.0, 0.0, 3.0, 0.0};
  CHECK(count_sign_changes(v) == 2);
  CHECK(count_sign_changes(std::vector<double>{}) == 0);
  CHECK(linspace(0.0, 1.0, 5)[2] == 0.5);
}

TEST_CASE("constant weight rescales the box spectrum") {
  const Grid grid(0.0, std::numbers::pi, 401);
  const SturmLiouvilleProblem plain{kUnitInverseMass, kZero, {}};
  const SturmLiouvilleProblem heavy{kUnitInverseMass, kZero, [](double) { return 4.0; }};
  const EigenResult a = eigenvalues_bisect(discretize(plain, grid), 3);
  const EigenResult b = eigenvalues_bisect(discretize(heavy, grid), 3, true);
  for (std::size_t k = 0; k < 3; ++k) CHECK(b.eigenvalues[k] == doctest::Approx(a.eigenvalues[k] / 4.0).epsilon(1e-12));

  // Eigenvectors carry unit weighted norm.
  double norm = 0.0;
  for (double v : (*b.eigenvectors)[0]) norm += 4.0 * v * v * grid.spacing();
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hydrogen s-states on a logarithmic grid") {
  // -xi'' - 2 xi / r = lambda xi with r = e^t becomes -(e^{-t} xi_t)_t - 2 xi = lambda e^t xi.
  // The Dirichlet cut at r0 shifts s-levels by about xi'(0)^2 r0, hence the tiny inner radius.
  const SturmLiouvilleProblem p{[](double t) { return std::exp(-t); }, [](double) { return -2.0; },
                                [](double t) { return std::exp(t); }};
  const EigenResult r = refine_richardson(p, Grid(std::log(1e-10), std::log(60.0), 4001), 3);
  for (std::size_t n = 0; n < 3; ++n) {
    const double exact = -1.0 / ((n + 1.0) * (n + 1.0));
    CAPTURE(n);
    CHECK(std::abs(r.eigenvalues[n] - exact) < 1e-6);
  }
}

TEST_CASE("non-positive weight is rejected") {
  const SturmLiouvilleProblem p{kUnitInverseMass, kZero, [](double x) { return x - 0.5; }};
  CHECK_THROWS(discretize(p, Grid(0.0, 1.0, 11)));
}
