#include "photocorr/observables.hpp"

#include <cmath>

#include "photocorr/numerics.hpp"

namespace photocorr {

namespace {

void check_momentum(double p) {
  if (!(p > 0.0))
    throw DomainError("amplitude: momentum must be positive");
}

} // namespace

ReducedAmplitude ipa_reduced_amplitude(double z, double n_r, double p) {
  check_momentum(p);
  const double p2 = p * p;
  return {std::sqrt(4.0 * kPi) * z * n_r / (p2 * p2), p,
          "IPA s-state amplitude sqrt(4pi) Z N / P^4", p < 5.0 * z};
}

ReducedAmplitude tc2_reduced_amplitude(double n_np, double z, double p) {
  check_momentum(p);
  const double p2 = p * p;
  return {6.0 * std::sqrt(3.0 * kPi) * n_np * z / (p2 * p2), p,
          "np correlation amplitude 6 sqrt(3pi) N Z / P^4", p < 5.0 * z};
}

double amplitude_correction_factor(double n_ns, double n_np, double x) {
  if (n_np == 0.0)
    throw DomainError("amplitude_correction_factor: N_np must be nonzero");
  return 1.0 + n_ns / (2.0 * n_np) * x;
}

double cross_section_factor(double n_ns, double n_np, double x) {
  if (n_np == 0.0)
    throw DomainError("cross_section_factor: N_np must be nonzero");
  return 1.0 + n_ns / (3.0 * n_np) * x;
}

std::complex<double> xq_analytic(double q, double lambda, double n_np) {
  if (!(q > 0.0))
    throw DomainError("xq_analytic: Q must be positive");
  if (!(lambda >= 0.0))
    throw DomainError("xq_analytic: lambda must be non-negative");
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  const double d = lambda * lambda + q * q;
  // J = -4 g h with g = 1/d and h = gamma + ln((lambda - iQ)/2).
  const double g = 1.0 / d;
  const double g_l = -2.0 * lambda / (d * d);
  const double g_q = -2.0 * q / (d * d);
  const double g_lq = 8.0 * lambda * q / (d * d * d);
  const C w(lambda, -q);
  const C h = kEulerGamma + std::log(w / 2.0);
  const C h_l = 1.0 / w;
  const C h_q = -i / w;
  const C h_lq = i / (w * w);
  const C j_lq = -4.0 * (g_lq * h + g_l * h_q + g_q * h_l + g * h_lq);
  return -i * (std::sqrt(3.0 * kPi) * n_np / 2.0) * j_lq;
}

std::string_view to_string(MechanismClass m) {
  switch (m) {
  case MechanismClass::CorrelationOnly:
    return "CorrelationOnly";
  case MechanismClass::CorrelationDominates:
    return "CorrelationDominates";
  case MechanismClass::InterplayOverlapSmall:
    return "InterplayOverlapSmall";
  case MechanismClass::ShakeupDominates:
    return "ShakeupDominates";
  }
  return "?";
}

MechanismClass classify_mechanism(int l, int l_prime, int l_star) {
  if (l < 0 || l_prime < 0 || l_star < 0)
    throw DomainError("classify_mechanism: angular momenta must be >= 0");
  if (l_star != l && l_star != l_prime)
    return MechanismClass::CorrelationOnly;
  if (l == l_prime)
    return MechanismClass::ShakeupDominates;
  // The excited electron's partner is the one with l* = l'. If instead
  // l* = l, the two removed electrons exchange roles.
  const int ionized = l_star == l_prime ? l : l_prime;
  const int excited = l_star;
  if (excited < ionized - 1)
    return MechanismClass::CorrelationDominates;
  if (excited == ionized - 1)
    return MechanismClass::InterplayOverlapSmall;
  return MechanismClass::ShakeupDominates;
}

} // namespace photocorr
