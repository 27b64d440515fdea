#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "morsenu/potential.hpp"

using namespace morsenu;

TEST_CASE("morse potential anchors") {
  const auto co = testing::co();
  CHECK(morse_potential(co, co.r0) == doctest::Approx(-co.D).epsilon(1e-15));
  CHECK(morse_potential(co, co.r0 + 200.0) == doctest::Approx(0.0));
  CHECK(morse_potential(co, co.r0 + 100.0) < 0.0);  // approaches 0 from below
  // r = r0 + 1/a: D (e^-2 - 2 e^-1)
  const double expected = co.D * (std::exp(-2.0) - 2.0 * std::exp(-1.0));
  CHECK(morse_potential(co, co.r0 + 1.0 / co.a) ==
        doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected / co.D == doctest::Approx(-0.6004235991).epsilon(1e-9));
}

TEST_CASE("morse potential minimum at r0") {
  const auto p = testing::lih();
  const double h = 1e-4;
  for (double r = 0.3; r < 6.0; r += 0.05)
    CHECK(morse_potential(p, r) >= -p.D);
  // Derivative sign change across r0.
  CHECK((morse_potential(p, p.r0) - morse_potential(p, p.r0 - h)) < 0.0);
  CHECK((morse_potential(p, p.r0 + h) - morse_potential(p, p.r0)) > 0.0);
}

TEST_CASE("effective potential") {
  const auto co = testing::co();
  SUBCASE("l = 0 reduces to the Morse potential pointwise") {
    for (double r = 0.2; r < 10.0; r += 0.37)
      CHECK(effective_potential(co, 0, r) == morse_potential(co, r));
  }
  SUBCASE("centrifugal shift at r0") {
    const double rot = units::rotational_unit(co.mu, co.r0);
    CHECK(effective_potential(co, 1, co.r0) ==
          doctest::Approx(-co.D + 2.0 * rot).epsilon(1e-14));
    CHECK(effective_potential(co, 10, co.r0) ==
          doctest::Approx(-co.D + 110.0 * rot).epsilon(1e-14));
  }
  SUBCASE("domain error") {
    CHECK_THROWS_AS(effective_potential(co, 1, 0.0), std::domain_error);
    CHECK_THROWS_AS(effective_potential(co, 1, -1.0), std::domain_error);
  }
}

TEST_CASE("pekeris coefficients") {
  SUBCASE("exact integers at alpha = 1") {
    MoleculeParams p{"toy", 1.0, 1.0, 1.0, 1.0};
    const auto c = pekeris_coefficients(p, 3);
    CHECK(c.d0 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.d1 == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(c.d2 == doctest::Approx(2.0).epsilon(1e-15));
  }
  SUBCASE("CO values") {
    const auto c = pekeris_coefficients(testing::co(), 5);
    CHECK(c.alpha == doctest::Approx(2.59441302).epsilon(1e-10));
    CHECK(c.d0 == doctest::Approx(0.2893694783).epsilon(1e-9));
    CHECK(c.d1 == doctest::Approx(0.6503737618).epsilon(1e-9));
    CHECK(c.d2 == doctest::Approx(0.0602567598).epsilon(1e-9));
  }
  SUBCASE("gamma is zero iff l = 0") {
    const auto co = testing::co();
    CHECK(pekeris_coefficients(co, 0).gamma == 0.0);
    CHECK(pekeris_coefficients(co, 1).gamma > 0.0);
  }
}

TEST_CASE("pekeris Taylor-matching identities for random alpha") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> alpha_dist(0.5, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double alpha = alpha_dist(rng);
    MoleculeParams p{"toy", 1.0, alpha, 1.0, 1.0};  // r0 = 1 so a r0 = alpha
    const auto c = pekeris_coefficients(p, 2);
    CHECK(c.d0 + c.d1 + c.d2 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(c.d1 * alpha + 2.0 * c.d2 * alpha ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(c.d1 * alpha * alpha / 2.0 + 2.0 * c.d2 * alpha * alpha ==
          doctest::Approx(3.0).epsilon(1e-13));
  }
}

TEST_CASE("pekeris rotational potential") {
  const auto co = testing::co();
  const auto c = pekeris_coefficients(co, 5);
  SUBCASE("x = 0 anchor equals gamma") {
    CHECK(pekeris_rotational_potential(c, 0.0) ==
          doctest::Approx(c.gamma).epsilon(1e-13));
  }
  SUBCASE("l = 0 vanishes everywhere") {
    const auto c0 = pekeris_coefficients(co, 0);
    for (double x = -0.5; x < 2.0; x += 0.1)
      CHECK(pekeris_rotational_potential(c0, x) == 0.0);
  }
  SUBCASE("matches gamma/(1+x)^2 to second order") {
    CHECK(std::fabs(pekeris_rotational_potential(c, 0.1) -
                    c.gamma / (1.1 * 1.1)) < 1e-3 * c.gamma);
    // O(x^3) remainder: ratio to x^3 stays bounded near x = 0.
    for (double x = -0.05; x <= 0.05; x += 0.004) {
      if (std::fabs(x) < 1e-3) continue;
      const double diff =
          pekeris_rotational_potential(c, x) - c.gamma / ((1 + x) * (1 + x));
      CHECK(std::fabs(diff / (x * x * x)) < 2.0 * c.gamma);
    }
  }
}

TEST_CASE("x/r coordinate helpers invert each other") {
  const auto co = testing::co();
  CHECK(radial_x(co, co.r0) == 0.0);
  CHECK(radial_r(co, radial_x(co, 2.345)) ==
        doctest::Approx(2.345).epsilon(1e-15));
}

TEST_CASE("molecule parameter validation") {
  CHECK_THROWS_AS(validate(MoleculeParams{"bad", -1.0, 1.0, 1.0, 1.0}),
                  std::domain_error);
  CHECK_THROWS_AS(validate(MoleculeParams{"bad", 1.0, 0.0, 1.0, 1.0}),
                  std::domain_error);
  CHECK_THROWS_AS(validate(MoleculeParams{"bad", 1.0, 1.0, -0.1, 1.0}),
                  std::domain_error);
  CHECK_THROWS_AS(validate(MoleculeParams{"bad", 1.0, 1.0, 1.0, 0.0}),
                  std::domain_error);
  CHECK_NOTHROW(validate(testing::co()));
}
