#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace photocorr {

/// Scalar multiplying (e.P)/m in an asymptotic amplitude (atomic units).
struct ReducedAmplitude {
  double value = 0.0;
  double momentum = 0.0;
  std::string description;
  /// P < 5 z: the asymptotic form is being used outside its range.
  bool below_asymptotic_range = false;
};

/// IPA amplitude of an s state: sqrt(4 pi) z N_r / P^4.
ReducedAmplitude ipa_reduced_amplitude(double z, double n_r, double p);

/// Large-momentum-transfer correlation amplitude of an np state:
/// 6 sqrt(3 pi) N_np z / P^4.
ReducedAmplitude tc2_reduced_amplitude(double n_np, double z, double p);

/// 1 + (N_ns / (2 N_np)) x.
double amplitude_correction_factor(double n_ns, double n_np, double x);

/// 1 + (N_ns / (3 N_np)) x.
double cross_section_factor(double n_ns, double n_np, double x);

/// X(Q) of the recoil-free correlation term in closed form:
///   J = -4/(lambda^2 + Q^2) (gamma_E + ln((lambda - iQ)/2)),
///   X = -i (sqrt(3 pi) N_np / 2) d^2 J / (d lambda dQ).
/// lambda = 0 gives the regulator-free limit 6 sqrt(3 pi) N_np / Q^4.
std::complex<double> xq_analytic(double q, double lambda, double n_np);

enum class MechanismClass {
  CorrelationOnly,
  CorrelationDominates,
  InterplayOverlapSmall,
  ShakeupDominates,
};

std::string_view to_string(MechanismClass m);

/// Dominant asymptotic mechanism for ionization of an l electron with an l'
/// electron excited to an l* state.
MechanismClass classify_mechanism(int l, int l_prime, int l_star);

} // namespace photocorr
