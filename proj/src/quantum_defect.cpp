#include "photocorr/quantum_defect.hpp"

#include <cmath>
#include <sstream>

#include "photocorr/numerics.hpp"

namespace photocorr {

void DefectModel::validate() const {
  if (!(n_h + 1 - delta_inf > 0.0)) {
    std::ostringstream msg;
    msg << "defect model: n_h + 1 - delta_inf = " << n_h + 1 - delta_inf
        << " puts a pole in the unoccupied series";
    throw DomainError(msg.str());
  }
  if (!(z > 0.0))
    throw DomainError("defect model: nuclear charge must be positive");
}

double defect_from_binding(double energy, int n) {
  if (!(energy < 0.0))
    throw DomainError("defect_from_binding: binding energy must be negative");
  return n - 1.0 / std::sqrt(-2.0 * energy);
}

double binding_from_defect(double delta, int n) {
  const double n_eff = n - delta;
  if (!(n_eff > 0.0))
    throw DomainError("binding_from_defect: n - delta must be positive");
  return -0.5 / (n_eff * n_eff);
}

double defect_from_normalization(double norm_sq, double z, int n) {
  if (!(norm_sq > 0.0))
    throw DomainError("defect_from_normalization: N^2 must be positive");
  if (!(z > 0.0))
    throw DomainError("defect_from_normalization: charge must be positive");
  return n - std::cbrt(4.0 * z / norm_sq);
}

double normalization_from_defect(double delta, double z, int n) {
  const double n_eff = n - delta;
  if (!(n_eff > 0.0))
    throw DomainError("normalization_from_defect: n - delta must be positive");
  return 4.0 * z / (n_eff * n_eff * n_eff);
}

double x_ratio_qd(const DefectModel &model, int n_prime, int n, double delta_n) {
  const double lower = n_prime - model.delta_inf;
  if (!(lower > 0.0))
    throw DomainError("x_ratio_qd: n' - delta must be positive");
  const double upper = n - delta_n;
  if (!(upper > 0.0))
    throw DomainError("x_ratio_qd: n - delta_n must be positive");
  const double r = upper / lower;
  return r * r * r;
}

double x_d(const DefectModel &model, int n, double delta_n) {
  model.validate();
  const double upper = n - delta_n;
  if (!(upper > 0.0))
    throw DomainError("x_d: n - delta_n must be positive");
  return upper * upper * upper *
         numerics::sum_tail_cubes(model.n_h + 1 - model.delta_inf, 0);
}

double x_threshold(double norm_sq_ns, double z) {
  if (!(norm_sq_ns > 0.0))
    throw DomainError("x_threshold: N^2 must be positive");
  return 4.0 * z * kRydbergHartree / norm_sq_ns;
}

double x_c_estimate(double norm_sq_ns, double z, double e_np) {
  if (!(e_np < 0.0))
    throw DomainError("x_c_estimate: E_np must be negative");
  return x_threshold(norm_sq_ns, z) * -e_np;
}

CorrelationBreakdown x_ph(const DefectModel &model, int n, double delta_n,
                          double norm_sq_ns, double e_np) {
  CorrelationBreakdown out;
  out.x_d = x_d(model, n, delta_n);
  out.x_c = x_c_estimate(norm_sq_ns, model.z, e_np);
  out.x_ph = -out.x_d - out.x_c;
  return out;
}

} // namespace photocorr
