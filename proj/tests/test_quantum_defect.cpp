#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "photocorr/atomdata.hpp"
#include "photocorr/numerics.hpp"
#include "photocorr/quantum_defect.hpp"

using namespace photocorr;

namespace {

const AtomRecord &atom(double z) {
  for (const auto &a : builtin_dataset())
    if (a.z == z)
      return a;
  throw std::runtime_error("atom not bundled");
}

double delta_n_of(const AtomRecord &a, int n) {
  return defect_from_normalization(a.norm_sq_s.at(n), a.z, n);
}

} // namespace

TEST_CASE("defect from binding energy") {
  CHECK(defect_from_binding(-0.5, 1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(defect_from_binding(-0.125, 3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(defect_from_binding(0.0, 2), DomainError);
  CHECK_THROWS_AS(defect_from_binding(0.1, 2), DomainError);
  CHECK_THROWS_AS(binding_from_defect(3.0, 3), DomainError);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(0.0, 0.95);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + i % 6;
    const double delta = d(rng) * n;
    const double back = defect_from_binding(binding_from_defect(delta, n), n);
    REQUIRE(std::abs(back - delta) < 1e-12);
  }
}

TEST_CASE("defect from normalization") {
  for (int n = 1; n <= 6; ++n) {
    const double nsq = 4.0 / (n * n * n);
    CHECK(std::abs(defect_from_normalization(nsq, 1.0, n)) < 1e-14);
    CHECK(normalization_from_defect(0.0, 1.0, n) == doctest::Approx(nsq).epsilon(1e-15));
  }
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(0.0, 0.9);
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + i % 4;
    const double z = 1.0 + 10.0 * d(rng);
    const double delta = d(rng) * n;
    REQUIRE(std::abs(defect_from_normalization(normalization_from_defect(delta, z, n), z, n) -
                     delta) < 1e-12);
  }
  CHECK_THROWS_AS(defect_from_normalization(0.0, 1.0, 2), DomainError);
  CHECK_THROWS_AS(defect_from_normalization(-1.0, 1.0, 2), DomainError);
}

TEST_CASE("defect recovered from the bundled normalization for neon") {
  CHECK(std::abs(delta_n_of(atom(10), 2) - 1.44) <= 0.02);
}

TEST_CASE("defect recovered from the bundled normalization for argon") {
  CHECK(std::abs(delta_n_of(atom(18), 3) - 2.31) <= 0.02);
}

TEST_CASE("quantum-defect ratios") {
  const DefectModel coulomb{0.0, 0.0, 2, 1.0};
  CHECK(x_ratio_qd(coulomb, 4, 2, 0.0) == doctest::Approx(0.125).epsilon(1e-15));
  const DefectModel m{0.4, 0.3, 2, 5.0};
  CHECK(x_ratio_qd(m, 3, 3, 0.3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(x_ratio_qd(DefectModel{0.0, 3.5, 2, 1.0}, 3, 2, 0.0), DomainError);
}

TEST_CASE("x_d tail sum equals direct summation") {
  for (double a : {0.23, 1.0, 1.56, 2.7, 4.1}) {
    double direct = 0.0;
    for (long k = 999'999; k >= 0; --k) {
      const double x = a + k;
      direct += 1.0 / (x * x * x);
    }
    const double x = a + 1e6;
    direct += 1.0 / (2 * x * x) + 1.0 / (2 * x * x * x);
    REQUIRE(numerics::sum_tail_cubes(a, 0) == doctest::Approx(direct).epsilon(1e-10));
  }
  // Every bundled model, through x_d itself.
  for (const auto &a : builtin_dataset()) {
    const auto model = a.defect_model();
    const double base = model.n_h + 1 - model.delta_inf;
    double direct = 0.0;
    for (long k = 999'999; k >= 0; --k) {
      const double x = base + k;
      direct += 1.0 / (x * x * x);
    }
    const double xt = base + 1e6;
    direct += 1.0 / (2 * xt * xt) + 1.0 / (2 * xt * xt * xt);
    const int n = a.norm_sq_s.rbegin()->first;
    const double dn = delta_n_of(a, n);
    REQUIRE(x_d(model, n, dn) == doctest::Approx(std::pow(n - dn, 3) * direct).epsilon(1e-10));
  }
}

TEST_CASE("x_d grows with the asymptotic defect") {
  double prev = 0.0;
  for (double d = 0.0; d < 2.5; d += 0.1) {
    const double v = x_d(DefectModel{0.0, d, 2, 10.0}, 2, 1.4);
    REQUIRE(v > prev);
    prev = v;
  }
  CHECK_THROWS_AS(x_d(DefectModel{0.0, 3.0, 2, 10.0}, 2, 1.4), DomainError);
}

TEST_CASE("threshold density") {
  CHECK(x_threshold(2.0, 3.0) == doctest::Approx(2.0 * x_threshold(4.0, 3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(x_threshold(0.0, 1.0), DomainError);
  // Coulomb inputs: x_{n's} = (n/n')^3, so lim n'^3 x = n^3, and the density
  // from that limit is n^3 / (2 I_Z). The threshold formula is half of it.
  for (double z : {1.0, 4.0})
    for (int n : {2, 3}) {
      const double nsq = 4.0 * z * z * z / (n * n * n);
      const double from_limit = n * n * n / (z * z);
      CHECK(2.0 * x_threshold(nsq, z) == doctest::Approx(from_limit).epsilon(1e-14));
    }
}

TEST_CASE("continuum estimate") {
  CHECK(x_c_estimate(10.0, 2.0, -1e-12) < 1e-12);
  CHECK(x_c_estimate(10.0, 2.0, -0.3) == doctest::Approx(0.3 * x_threshold(10.0, 2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(x_c_estimate(10.0, 2.0, 0.0), DomainError);
}

TEST_CASE("neon and argon rows") {
  const auto &ne = atom(10);
  const auto b_ne = x_ph(ne.defect_model(), 2, delta_n_of(ne, 2), ne.norm_sq_s.at(2),
                         ne.e_np_hartree(2));
  CHECK(std::abs(b_ne.x_d - 0.04) <= 0.01);
  CHECK(std::abs(b_ne.x_c - 0.07) <= 0.01);
  CHECK(std::abs(b_ne.x_ph + 0.11) <= 0.02);
  CHECK(b_ne.x_ph == doctest::Approx(-b_ne.x_d - b_ne.x_c).epsilon(1e-15));

  const auto &ar = atom(18);
  const auto b_ar = x_ph(ar.defect_model(), 3, delta_n_of(ar, 3), ar.norm_sq_s.at(3),
                         ar.e_np_hartree(3));
  CHECK(std::abs(b_ar.x_d - 0.05) <= 0.01);
  CHECK(std::abs(b_ar.x_c - 0.10) <= 0.01);
  CHECK(std::abs(b_ar.x_ph + 0.15) <= 0.02);

  const auto &n7 = atom(7);
  const auto b_n = x_ph(n7.defect_model(), 2, delta_n_of(n7, 2), n7.norm_sq_s.at(2),
                        n7.e_np_hartree(2));
  CHECK(std::abs(b_n.x_ph + 0.14) <= 0.02);
}

TEST_CASE("every bundled row has positive discrete and continuum shares") {
  for (const auto &a : builtin_dataset())
    for (const auto &[n, nsq] : a.norm_sq_s) {
      if (!a.e_np_ev.count(n))
        continue;
      const auto b = x_ph(a.defect_model(), n, delta_n_of(a, n), nsq, a.e_np_hartree(n));
      CHECK(b.x_d > 0.0);
      CHECK(b.x_c > 0.0);
      CHECK(b.x_ph < 0.0);
    }
}

TEST_CASE("model validation") {
  CHECK_NOTHROW((DefectModel{1.0, 2.9, 2, 1.0}.validate()));
  CHECK_THROWS_AS((DefectModel{1.0, 3.0, 2, 1.0}.validate()), DomainError);
  CHECK_THROWS_AS((DefectModel{1.0, 1.0, 2, 0.0}.validate()), DomainError);
}
