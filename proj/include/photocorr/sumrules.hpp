#pragma once

#include <vector>

#include "photocorr/numerics.hpp"

namespace photocorr {

enum class SumRule { Closure, Cancellation };

struct SumRuleReport {
  SumRule rule = SumRule::Closure;
  double bound_sum = 0.0;     // n' <= n_max plus the n'^-3 tail
  double discrete_tail = 0.0; // the tail part of bound_sum
  QuadratureResult continuum_integral;
  double residual = 0.0; // |target - bound_sum - continuum|
  int n_max = 0;
  double eps_max = 0.0; // hartree
};

/// sum_n' a^2_{n's,np} + int a^2_{eps s,np} d eps = 1 for Coulomb functions.
SumRuleReport verify_closure(double z, int n, int n_max, double eps_max);

/// sum_n' x_{n's,np} + int x_{eps s,np} d eps = 0 for Coulomb functions.
SumRuleReport verify_cancellation(double z, int n, int n_max, double eps_max);

/// Runs the rule along (n_max, eps_max/I_Z) = (10,10) (20,25) (30,50) (40,100).
std::vector<SumRuleReport> refinement_study(SumRule rule, double z, int n);

struct PartitionReport {
  double t_discrete = 0.0;  // bound-state part of the small-Q sum
  double t_continuum = 0.0; // continuum part of the small-Q sum
  double t_c2 = 0.0;        // large-Q amplitude
  double t_total = 0.0;     // reconstructed total
  double relative_residual = 0.0;
};

/// Reduced amplitudes of the partition T = T_d + T_c1 + T_c2 at momentum p.
/// The small-Q parts must cancel; the residual is normalized to the
/// intra-shell term, so it equals the cancellation residual.
PartitionReport partition_report(double z, int n, double p, int n_max = 20,
                                 double eps_max_over_iz = 40.0);
double partition_check(double z, int n, double p);

} // namespace photocorr
