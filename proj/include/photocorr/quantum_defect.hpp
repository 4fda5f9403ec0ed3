#pragma once

#include <optional>

namespace photocorr {

/// Quantum-defect description of the unoccupied s series of one atom.
struct DefectModel {
  double delta_h = 0.0;   // defect of the highest occupied s state
  double delta_inf = 0.0; // asymptotic defect of the unoccupied levels
  int n_h = 1;            // principal quantum number of that state
  double z = 1.0;

  /// Throws DomainError if the tail sum over n* >= n_h + 1 has a pole.
  void validate() const;
};

/// One row of the correlation table.
struct CorrelationBreakdown {
  double x_d = 0.0;  // unoccupied discrete levels
  double x_c = 0.0;  // continuum
  double x_ph = 0.0; // occupied levels, = -x_d - x_c
  std::optional<double> x_dir; // direct summation, when known
};

/// Delta = n - 1/sqrt(2|E|) from E = -1/(2 (n - Delta)^2).
double defect_from_binding(double energy, int n);
double binding_from_defect(double delta, int n);

/// Fermi-Segre: N^2 = 4 z dE/dn = 4 z / (n - Delta)^3.
double defect_from_normalization(double norm_sq, double z, int n);
double normalization_from_defect(double delta, double z, int n);

/// ((n - delta_n) / (n' - delta_inf))^3, derivatives of the defect dropped.
double x_ratio_qd(const DefectModel &model, int n_prime, int n, double delta_n);

/// Sum of x_ratio_qd over all unoccupied n' >= n_h + 1, in closed form.
double x_d(const DefectModel &model, int n, double delta_n);

/// Threshold density of the continuum share, 4 z I_0 / N^2 (per hartree).
double x_threshold(double norm_sq_ns, double z);

/// Rectangle estimate of the continuum share: x_threshold * |E_np|.
double x_c_estimate(double norm_sq_ns, double z, double e_np);

/// (x_d, x_c, x_ph) for the np state of the model atom.
CorrelationBreakdown x_ph(const DefectModel &model, int n, double delta_n,
                          double norm_sq_ns, double e_np);

} // namespace photocorr
