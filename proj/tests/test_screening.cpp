#include <cmath>

#include "doctest.h"
#include "photocorr/hydrogenic.hpp"
#include "photocorr/screening.hpp"

using namespace photocorr;

TEST_CASE("eta without screening is one") {
  for (double z : {1.0, 7.0, 10.0, 54.0}) {
    const auto ch = EffectiveCharges::from_screening(z, 0.0, 0.0, 0.0);
    CHECK(eta(ch) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eta_linearized(z, 0.0, 0.0, 0.0) == 1.0);
  }
}

TEST_CASE("eta for neon with the default screening constants") {
  const auto ch = EffectiveCharges::from_screening(10.0);
  CHECK(ch.z_1s == doctest::Approx(9.65));
  CHECK(ch.z_2s == doctest::Approx(6.75));
  CHECK(ch.z_2p == doctest::Approx(5.25));
  CHECK(std::abs(eta(ch) - 0.676) <= 0.001);
}

TEST_CASE("closed form equals mixed-charge overlaps") {
  for (double z : {7.0, 10.0, 18.0, 50.0}) {
    const auto ch = EffectiveCharges::from_screening(z);
    CHECK(eta_from_overlaps(ch) == doctest::Approx(eta(ch)).epsilon(1e-10));
  }
  const EffectiveCharges odd{10.0, 9.0, 4.0, 8.5};
  CHECK(eta_from_overlaps(odd) == doctest::Approx(eta(odd)).epsilon(1e-10));
}

TEST_CASE("linearized eta is exact to first order in 1/Z") {
  const double lin_coeff = -kDelta1s / 3.0 - 5.0 * kDelta2p / 3.0 + 2.0 * kDelta2s;
  CHECK(lin_coeff == doctest::Approx(-1.5333333333).epsilon(1e-9));
  CHECK(eta_linearized(10.0, kDelta1s, kDelta2s, kDelta2p) ==
        doctest::Approx(0.8466666667).epsilon(1e-9));
  double scaled[3];
  int i = 0;
  for (double z : {50.0, 100.0, 500.0}) {
    const double diff =
        eta(EffectiveCharges::from_screening(z)) - eta_linearized(z, kDelta1s, kDelta2s, kDelta2p);
    scaled[i++] = diff * z * z;
  }
  // z^2 (eta - eta_lin) settles to the second-order coefficient.
  CHECK(std::abs(scaled[2] - scaled[1]) < 0.15 * std::abs(scaled[2]));
  CHECK(std::abs(scaled[1] - scaled[0]) < 0.3 * std::abs(scaled[2]));
  CHECK(std::abs(scaled[2]) < 50.0);
}

TEST_CASE("screening lowers eta for full K and L shells") {
  for (double z = 7.0; z <= 100.0; z += 1.0) {
    const double e = eta(EffectiveCharges::from_screening(z));
    REQUIRE(e < 1.0);
    REQUIRE(eta_linearized(z, kDelta1s, kDelta2s, kDelta2p) < 1.0);
    const double xc = x_ratio_coulomb(1, 2);
    REQUIRE(x_ph_two_term(xc, e) > x_ph_two_term(xc, 1.0));
  }
}

TEST_CASE("two-term estimate") {
  CHECK(std::abs(x_ph_two_term(-1.58, 0.676) + 0.068) <= 0.002);
  CHECK(x_ph_two_term(-1.58, 1.0) == doctest::Approx(-0.58).epsilon(1e-14));
  CHECK(std::abs(x_ph_two_term(-1.58, 0.702) + 0.11) <= 0.005);
  const double computed = x_ph_two_term(x_ratio_coulomb(1, 2),
                                        eta(EffectiveCharges::from_screening(10.0)));
  CHECK(std::abs(computed + 0.068) <= 0.002);
  // Sensitivity: d x_ph / d eta = x^C.
  const double h = 1e-6;
  CHECK((x_ph_two_term(-1.58, 0.7 + h) - x_ph_two_term(-1.58, 0.7)) / h ==
        doctest::Approx(-1.58).epsilon(1e-6));
}

TEST_CASE("invalid effective charges") {
  CHECK_THROWS_AS(EffectiveCharges::from_screening(3.0), DomainError);
  CHECK_THROWS_AS(eta(EffectiveCharges{10.0, 11.0, 6.0, 5.0}), DomainError);
  CHECK_THROWS_AS(eta(EffectiveCharges{10.0, 9.0, 1.0, 4.0}), DomainError);
  CHECK_THROWS_AS(eta_linearized(0.0, 0.1, 0.1, 0.1), DomainError);
}
