#include "photocorr/sumrules.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "photocorr/hydrogenic.hpp"
#include "photocorr/observables.hpp"

namespace photocorr {

namespace {

void check_schedule(double z, int n, int n_max, double eps_max) {
  if (!(z > 0.0))
    throw DomainError("sum rule: charge must be positive");
  if (n < 2)
    throw DomainError("sum rule: np state requires n >= 2");
  if (n_max < n + 3) {
    std::ostringstream msg;
    msg << "sum rule: n_max=" << n_max << " must be >= n + 3";
    throw DomainError(msg.str());
  }
  if (!(eps_max >= 10.0 * 0.5 * z * z * (1.0 - 1e-12)))
    throw DomainError("sum rule: eps_max must be at least 10 I_Z");
}

// Discrete terms behave as n'^-3; extend the last one with the exact tail.
double cubic_tail(double last_term, int n_max) {
  const double nm = n_max;
  return nm * nm * nm * last_term * numerics::sum_tail_cubes(1.0, n_max);
}

struct ContinuumData {
  EnergyQuadrature quad;
  std::vector<ContinuumNode> nodes;
};

ContinuumData continuum(double z, int n, double eps_max, double tail_exponent) {
  ContinuumData d{EnergyQuadrature(z, eps_max, tail_exponent), {}};
  const std::array<HydrogenicOrbital, 1> targets = {HydrogenicOrbital(z, n, 1)};
  d.nodes = continuum_sweep(z, d.quad.energies(), targets);
  return d;
}

// a^2 of the continuum decays as eps^-7/2, x as eps^-3/2.
constexpr double kClosureTail = 3.5;
constexpr double kCancellationTail = 1.5;

} // namespace

SumRuleReport verify_closure(double z, int n, int n_max, double eps_max) {
  check_schedule(z, n, n_max, eps_max);
  const HydrogenicOrbital p(z, n, 1);
  SumRuleReport rep;
  rep.rule = SumRule::Closure;
  rep.n_max = n_max;
  rep.eps_max = eps_max;
  double last = 0.0;
  for (int k = 1; k <= n_max; ++k) {
    const double a = orbital_overlap(HydrogenicOrbital(z, k, 0), p).value;
    last = a * a;
    rep.bound_sum += last;
  }
  rep.discrete_tail = cubic_tail(last, n_max);
  rep.bound_sum += rep.discrete_tail;

  const auto data = continuum(z, n, eps_max, kClosureTail);
  std::vector<double> samples;
  for (const auto &node : data.nodes)
    samples.push_back(node.overlaps[0] * node.overlaps[0]);
  rep.continuum_integral = data.quad.integrate(samples);
  rep.residual = std::abs(1.0 - rep.bound_sum - rep.continuum_integral.value);
  return rep;
}

SumRuleReport verify_cancellation(double z, int n, int n_max, double eps_max) {
  check_schedule(z, n, n_max, eps_max);
  const HydrogenicOrbital p(z, n, 1);
  const HydrogenicOrbital s(z, n, 0);
  const double ref = s.origin_coefficient() * orbital_overlap(s, p).value;
  SumRuleReport rep;
  rep.rule = SumRule::Cancellation;
  rep.n_max = n_max;
  rep.eps_max = eps_max;
  double last = 0.0;
  for (int k = 1; k <= n_max; ++k) {
    const HydrogenicOrbital sk(z, k, 0);
    last = sk.origin_coefficient() * orbital_overlap(sk, p).value / ref;
    rep.bound_sum += last;
  }
  rep.discrete_tail = cubic_tail(last, n_max);
  rep.bound_sum += rep.discrete_tail;

  const auto data = continuum(z, n, eps_max, kCancellationTail);
  std::vector<double> samples;
  for (const auto &node : data.nodes)
    samples.push_back(node.origin_value * node.overlaps[0] / ref);
  rep.continuum_integral = data.quad.integrate(samples);
  rep.residual = std::abs(rep.bound_sum + rep.continuum_integral.value);
  return rep;
}

std::vector<SumRuleReport> refinement_study(SumRule rule, double z, int n) {
  constexpr std::array<std::pair<int, double>, 4> kSchedule = {
      {{10, 10.0}, {20, 25.0}, {30, 50.0}, {40, 100.0}}};
  const double iz = 0.5 * z * z;
  std::vector<SumRuleReport> out;
  for (const auto &[n_max, factor] : kSchedule) {
    out.push_back(rule == SumRule::Closure
                      ? verify_closure(z, n, n_max, factor * iz)
                      : verify_cancellation(z, n, n_max, factor * iz));
  }
  return out;
}

PartitionReport partition_report(double z, int n, double p, int n_max,
                                 double eps_max_over_iz) {
  const SumRuleReport rep =
      verify_cancellation(z, n, n_max, eps_max_over_iz * 0.5 * z * z);
  const HydrogenicOrbital pn(z, n, 1);
  const HydrogenicOrbital sn(z, n, 0);
  const double intra = sn.origin_coefficient() * orbital_overlap(sn, pn).value;
  // Each small-Q term is -2 sqrt(3 pi) z / P^4 * N_{n's} a_{n's,np}.
  const double p2 = p * p;
  const double unit = -2.0 * std::sqrt(3.0 * kPi) * z / (p2 * p2) * intra;

  PartitionReport out;
  out.t_discrete = unit * rep.bound_sum;
  out.t_continuum = unit * rep.continuum_integral.value;
  out.t_c2 = tc2_reduced_amplitude(pn.origin_coefficient(), z, p).value;
  out.t_total = out.t_discrete + out.t_continuum + out.t_c2;
  out.relative_residual = std::abs(out.t_total - out.t_c2) / std::abs(unit);
  return out;
}

double partition_check(double z, int n, double p) {
  return partition_report(z, n, p).relative_residual;
}

} // namespace photocorr
