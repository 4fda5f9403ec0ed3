#include <array>
#include <cmath>
#include <complex>

#include "doctest.h"
#include "oracles.hpp"
#include "photocorr/numerics.hpp"
#include "photocorr/observables.hpp"

using namespace photocorr;

TEST_CASE("IPA amplitude") {
  const auto a = ipa_reduced_amplitude(1.0, 2.0, 10.0);
  CHECK(a.value == doctest::Approx(std::sqrt(4.0 * oracle::pi) * 2.0 / 1e4).epsilon(1e-15));
  CHECK(a.value == doctest::Approx(7.0898e-4).epsilon(1e-4));
  CHECK_FALSE(a.below_asymptotic_range);
  CHECK(ipa_reduced_amplitude(3.0, 2.0, 10.0).below_asymptotic_range);
  CHECK_THROWS_AS(ipa_reduced_amplitude(1.0, 2.0, 0.0), DomainError);
}

TEST_CASE("amplitudes scale as P^-4") {
  for (double p : {7.0, 10.0, 33.3, 100.0}) {
    CHECK(ipa_reduced_amplitude(2.0, 1.3, 2 * p).value / ipa_reduced_amplitude(2.0, 1.3, p).value ==
          doctest::Approx(1.0 / 16.0).epsilon(1e-12));
    CHECK(tc2_reduced_amplitude(0.8, 2.0, 2 * p).value / tc2_reduced_amplitude(0.8, 2.0, p).value ==
          doctest::Approx(1.0 / 16.0).epsilon(1e-12));
  }
  // Log-log slope over [10, 100].
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int m = 10;
  for (int i = 0; i < m; ++i) {
    const double p = 10.0 * std::pow(10.0, i / (m - 1.0));
    const double x = std::log(p);
    const double y = std::log(tc2_reduced_amplitude(0.5, 1.0, p).value);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  CHECK((m * sxy - sx * sy) / (m * sxx - sx * sx) == doctest::Approx(-4.0).epsilon(1e-12));
}

TEST_CASE("correlation amplitude") {
  const auto t = tc2_reduced_amplitude(0.5, 2.0, 20.0);
  CHECK(t.value == doctest::Approx(6.0 * std::sqrt(3.0 * oracle::pi) * 0.5 * 2.0 / 160000.0)
                       .epsilon(1e-15));
  CHECK(tc2_reduced_amplitude(1.0, 2.0, 20.0).value ==
        doctest::Approx(2.0 * t.value).epsilon(1e-15));
}

TEST_CASE("correction factors") {
  CHECK(amplitude_correction_factor(1.0, 2.0, 0.0) == 1.0);
  CHECK(cross_section_factor(1.0, 2.0, 0.0) == 1.0);
  CHECK(amplitude_correction_factor(0.7, 1.0, -0.11) < 1.0);
  CHECK(cross_section_factor(0.7, 1.0, -0.11) < 1.0);
  for (double x : {-0.2, -0.05, 0.3, 1.0}) {
    const double r = 0.66;
    CHECK(cross_section_factor(r, 1.0, x) - 1.0 ==
          doctest::Approx(2.0 / 3.0 * (amplitude_correction_factor(r, 1.0, x) - 1.0))
              .epsilon(1e-14));
  }
  CHECK_THROWS_AS(amplitude_correction_factor(1.0, 0.0, 0.1), DomainError);
  CHECK_THROWS_AS(cross_section_factor(1.0, 0.0, 0.1), DomainError);
}

TEST_CASE("X(Q) closed form against direct quadrature") {
  auto ln = [](double t) { return std::log(t); };
  for (double q : {1.0, 3.0, 8.0})
    for (double lambda : {0.2, 0.5, 1.0}) {
      const auto exact = xq_analytic(q, lambda, 0.7);
      const auto brute = oracle::xq_bruteforce(q, lambda, 0.7, ln);
      INFO("Q=" << q << " lambda=" << lambda);
      CHECK(std::abs(exact - brute) <= 1e-6 * std::abs(exact));
    }
}

TEST_CASE("X(Q) falls as Q^-4 without the regulator") {
  const double limit = 6.0 * std::sqrt(3.0 * oracle::pi) * 0.7;
  for (double q : {20.0, 50.0, 100.0, 200.0}) {
    const auto x = xq_analytic(q, 0.0, 0.7);
    CHECK(std::abs(x) * std::pow(q, 4) == doctest::Approx(limit).epsilon(1e-12));
    CHECK(std::abs(std::abs(xq_analytic(q, 1e-6, 0.7)) * std::pow(q, 4) / limit - 1.0) < 1e-4);
  }
}

TEST_CASE("a constant in place of the logarithm gives no Q^-4 term") {
  const double c = 0.9;
  auto konst = [c](double) { return c; };
  std::array<double, 3> mag{};
  const std::array<double, 3> lambdas = {0.4, 0.2, 0.1};
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const double lambda = lambdas[i];
    const double q = 3.0;
    const auto brute = oracle::xq_bruteforce(q, lambda, 1.0, konst);
    const double d = lambda * lambda + q * q;
    const double closed = std::sqrt(3.0 * oracle::pi) / 2.0 * 32.0 * c * lambda * q / (d * d * d);
    CHECK(std::abs(std::abs(brute) - closed) < 1e-8 * closed);
    mag[i] = std::abs(brute);
  }
  // Vanishes linearly as the regulator is removed.
  CHECK(mag[1] / mag[0] == doctest::Approx(0.5).epsilon(0.02));
  CHECK(mag[2] / mag[1] == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("X(Q) domain") {
  CHECK_THROWS_AS(xq_analytic(0.0, 0.1, 1.0), DomainError);
  CHECK_THROWS_AS(xq_analytic(1.0, -0.1, 1.0), DomainError);
}

TEST_CASE("mechanism classifier anchors") {
  CHECK(classify_mechanism(0, 0, 1) == MechanismClass::CorrelationOnly);
  CHECK(classify_mechanism(2, 0, 0) == MechanismClass::CorrelationDominates);
  CHECK(classify_mechanism(0, 0, 0) == MechanismClass::ShakeupDominates);
  CHECK(classify_mechanism(1, 0, 0) == MechanismClass::InterplayOverlapSmall);
  CHECK(classify_mechanism(1, 2, 2) == MechanismClass::ShakeupDominates);
  CHECK(to_string(MechanismClass::InterplayOverlapSmall) == "InterplayOverlapSmall");
  CHECK_THROWS_AS(classify_mechanism(-1, 0, 0), DomainError);
}

TEST_CASE("mechanism class is invariant under exchange of the removed electrons") {
  for (int l = 0; l <= 4; ++l)
    for (int lp = 0; lp <= 4; ++lp)
      for (int ls = 0; ls <= 4; ++ls)
        REQUIRE(classify_mechanism(l, lp, ls) == classify_mechanism(lp, l, ls));
}
