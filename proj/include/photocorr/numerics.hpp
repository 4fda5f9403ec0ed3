#pragma once

#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace photocorr {

// Hartree atomic units throughout (hbar = m = e = 1).
inline constexpr double kHartreeEv = 27.211386;
inline constexpr double kRydbergHartree = 0.5; // I_0 = 13.6 eV
inline constexpr double kEulerGamma = 0.5772156649015329;
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

inline double ev_to_hartree(double ev) { return ev / kHartreeEv; }
inline double hartree_to_ev(double ha) { return ha * kHartreeEv; }

/// Argument outside the domain of a formula (poles, wrong angular momentum,
/// non-physical sign).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Quadrature that did not reach its tolerance within the panel budget.
/// Carries the best available estimate.
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string &what, double best, double err)
      : std::runtime_error(what), best_estimate(best), error_estimate(err) {}
  double best_estimate;
  double error_estimate;
};

/// ODE integration that could not reach the asymptotic region.
class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;

  QuadratureResult &operator+=(const QuadratureResult &o) {
    value += o.value;
    abs_error += o.abs_error;
    return *this;
  }
};

inline QuadratureResult operator+(QuadratureResult a,
                                  const QuadratureResult &b) {
  return a += b;
}

namespace numerics {

/// Second derivative of the digamma function, psi''(a), for a > 0.
double polygamma2(double a);

/// Sum_{k=k_start}^inf 1/(k+a)^3 = -psi''(a + k_start)/2.
double sum_tail_cubes(double a, int k_start);

struct IntegrateOptions {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  // 2^max_depth panels per breakpoint interval at most; 13 keeps the total
  // under the default 10^4-panel budget for a handful of breakpoints.
  unsigned max_depth = 13;
};

/// Adaptive Gauss-Kronrod quadrature over [lower, upper]; upper may be
/// kInfinity. Breakpoints must be sorted and strictly inside the interval.
QuadratureResult integrate(const std::function<double(double)> &f,
                           double lower, double upper,
                           std::span<const double> breakpoints = {},
                           const IntegrateOptions &opts = {});

/// Fixed Gauss-Legendre nodes/weights on [-1, 1] used by the sampled-grid
/// quadratures.
struct GaussRule {
  std::span<const double> nodes;
  std::span<const double> weights;
};
GaussRule gauss_legendre(int points); // points in {3, 5}

/// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
/// kronrod_weights[i] and gauss_weights[i] refer to kronrod_nodes[i];
/// gauss weight is zero for nodes not in the Gauss rule.
struct KronrodRule {
  std::span<const double> nodes;
  std::span<const double> kronrod_weights;
  std::span<const double> gauss_weights;
};
KronrodRule gauss_kronrod15();

} // namespace numerics
} // namespace photocorr
