#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "pdm/coordinate_maps.hpp"
#include "pdm/errors.hpp"

using namespace pdm;

namespace {
constexpr AmbiguityParams kBenDaniel{0.0, 0.0};
}

TEST_CASE("x = ln r round trip") {
  CHECK(to_radial(0.0) == 1.0);
  for (double x : linspace(-10.0, 10.0, 201)) CHECK(std::abs(from_radial(to_radial(x)) - x) <= 1e-15 * std::max(1.0, std::abs(x)));
  CHECK_THROWS_AS(from_radial(0.0), DomainError);
  CHECK_THROWS_AS(from_radial(-1.0), DomainError);
}

TEST_CASE("radial mass and its r-derivatives") {
  const MassProfile mass = MassProfile::rational(0.5);
  CHECK(radial_mass(mass, 2.0).value == doctest::Approx(0.25).epsilon(1e-15));
  const auto m_of_r = [](double r) { return std::pow(1.0 + 0.5 * r, -2.0); };
  for (double r : {0.2, 1.0, 3.0, 10.0}) {
    const MassTriple m = radial_mass(mass, r);
    CHECK(m.value == doctest::Approx(m_of_r(r)).epsilon(1e-14));
    CHECK(m.first == doctest::Approx(oracle::central_difference(m_of_r, r, 1e-5)).epsilon(1e-7));
    CHECK(m.second == doctest::Approx(oracle::second_difference(m_of_r, r, 1e-4)).epsilon(1e-5));
  }
}

TEST_CASE("radial potential limits") {
  const RationalMassMorseModel m(2.0, 1.0, kBenDaniel, 0.1);
  const double far = radial_effective_potential(m, 0, 1e12);
  CHECK(far == doctest::Approx(m.b_prime_squared() + 0.75 * 0.01).epsilon(1e-10));
  CHECK(radial_effective_potential(m, 0, 1e12, 3.5) == doctest::Approx(far + 3.5).epsilon(1e-12));

  // kappa = 0, A = 3/2, B = 1: 1/r coefficient -B(2A+1) = -4 = -2Z.
  const RationalMassMorseModel h(1.5, 1.0, kBenDaniel, 0.0);
  const double r = 1e7;
  const double coeff = (radial_effective_potential(h, 0, r) - h.b_prime_squared()) * r;
  CHECK(coeff == doctest::Approx(-4.0).epsilon(1e-6));
  CHECK(coulomb_parameters(h, 0).z_charge == doctest::Approx(2.0));
}

TEST_CASE("closed-form radial potential against the composed chain") {
  for (double kappa : {0.0, 0.1, 0.5}) {
    const RationalMassMorseModel m(2.0, 1.0, kBenDaniel, kappa);
    for (double r : {0.5, 1.0, 2.0, 5.0}) {
      const double chain = radial_effective_potential_chain(m, 0, r);
      const double closed = radial_effective_potential(m, 0, r);
      CHECK(std::abs(chain - closed) <= 1e-10 * std::max(1.0, std::abs(chain)));
      CHECK(std::abs(coulomb_form_potential(coulomb_parameters(m, 0), r) - chain) <= 1e-10 * std::max(1.0, std::abs(chain)));
      if (kappa > 0.0) {
        const double plus = radial_effective_potential(m, 0, r, 0.0, HalfKappaSign::plus);
        CHECK(std::abs(plus - chain) > 1e-3 * kappa);
      }
    }
  }
}

TEST_CASE("Coulomb equation residual selects the sign of the kappa/2 term") {
  const RationalMassMorseModel m(2.0, 1.0, kBenDaniel, 0.1);
  const CoulombParams cp = coulomb_parameters(m, 0);
  const CoulombGroundState g(cp, m);
  const double r_max = g.default_domain().hi;
  std::vector<double> radii = linspace(0.1, r_max, 50);
  const JetFunction xi = [&](const Jet& r) { return g.value(r); };
  CHECK(coulomb_residual(cp, xi, radii) <= 1e-8);

  CoulombParams flipped = cp;
  flipped.z_charge = z_charge_for(m, HalfKappaSign::plus);
  CHECK(z_charge_for(m, HalfKappaSign::minus) == cp.z_charge);
  CHECK(coulomb_residual(flipped, xi, radii) > 1e-3);

  const JetFunction zero = [](const Jet&) { return Jet(0.0); };
  CHECK_THROWS_AS(coulomb_residual(cp, zero, radii), DegenerateTest);
}

TEST_CASE("map chain for the ground level") {
  const RationalMassMorseModel m(2.0, 1.0, kBenDaniel, 0.1);
  const MapChainReport rep = verify_chain(m, 0, 50);
  REQUIRE(rep.stages.size() == 4);
  CHECK(rep.wavefunction_checked);
  for (const StageReport& s : rep.stages) {
    CAPTURE(to_string(s.stage));
    CHECK(s.potential_samples.size() == 50);
    CHECK(s.max_discrepancy <= 1e-8);
  }
  CHECK(rep.closed_form_gap <= 1e-10);
  CHECK(rep.norm_gap <= 1e-8);
  CHECK(rep.max_discrepancy <= 1e-8);
  CHECK(rep.stages[0].stage == ChainStage::full_line);
  CHECK(rep.stages[3].stage == ChainStage::radial_1d);
}

TEST_CASE("map chain is insensitive to the additive constant E") {
  const RationalMassMorseModel m(2.0, 1.0, AmbiguityParams{0.2, -0.4}, 0.3);
  const MapChainReport a = verify_chain(m, 0, 30, 0.0);
  const MapChainReport b = verify_chain(m, 0, 30, 3.7);
  CHECK(a.max_discrepancy <= 1e-8);
  CHECK(b.max_discrepancy <= 1e-8);
  CHECK(b.stages[2].potential_samples[5].second ==
        doctest::Approx(a.stages[2].potential_samples[5].second + 3.7).epsilon(1e-12));
}

TEST_CASE("map chain for an excited level checks the potential only") {
  const RationalMassMorseModel m(2.0, 1.0, kBenDaniel, 0.1);
  const MapChainReport rep = verify_chain(m, 1, 20);
  CHECK_FALSE(rep.wavefunction_checked);
  CHECK(rep.max_discrepancy <= 1e-8);
}

TEST_CASE("map chain edge cases and fault detection") {
  const RationalMassMorseModel m(2.0, 1.0, kBenDaniel, 0.1);
  const MapChainReport empty = verify_chain(m, 0, 0);
  CHECK(empty.stages.empty());
  CHECK(empty.max_discrepancy == 0.0);

  const auto flipped = RationalMassMorseModel::unchecked(2.0, 1.0, kBenDaniel, -0.1);
  CHECK_FALSE(verify_chain(m, flipped, 0, 20).max_discrepancy <= 1e-8);
  const auto nudged = RationalMassMorseModel::unchecked(2.0, 1.0, kBenDaniel, 0.101);
  CHECK_FALSE(verify_chain(m, nudged, 0, 20).max_discrepancy <= 1e-8);
  CHECK(verify_chain(m, m, 0, 20).max_discrepancy <= 1e-8);
}
