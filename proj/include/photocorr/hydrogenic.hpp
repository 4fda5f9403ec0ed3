#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "photocorr/numerics.hpp"

namespace photocorr {

enum class NormKind { Unit, PerUnitEnergy };

struct BoundLabel {
  int n;
};
struct ContinuumLabel {
  double energy; // hartree
};

/// Closed-form hydrogenic radial function R_{n l}(r) for a (possibly
/// effective) charge z:
///   R = N rho^l e^{-rho/2} L^{(2l+1)}_{n-l-1}(rho),  rho = 2 z r / n,
/// with R(r) ~ c r^l, c > 0, near the origin.
class HydrogenicOrbital {
public:
  HydrogenicOrbital(double z, int n, int ell);

  double operator()(double r) const;
  double derivative(double r) const;

  /// lim_{r->0} R(r)/r^l. For s states this is N^r = R(0).
  double origin_coefficient() const;

  /// Radius beyond which r^2 |R(r)| < 1e-14.
  double extent() const { return extent_; }

  double z() const { return z_; }
  int n() const { return n_; }
  int ell() const { return ell_; }

private:
  double z_;
  int n_;
  int ell_;
  double norm_;
  double extent_;
};

/// Sampled radial wavefunction. Bound functions also carry their closed form;
/// continuum functions are evaluated by cubic Hermite interpolation of the
/// stored (value, slope) pairs.
struct RadialFunction {
  std::vector<double> grid; // bohr, strictly increasing, positive
  std::vector<double> values;
  std::vector<double> slopes;
  int ell = 0;
  std::variant<BoundLabel, ContinuumLabel> label = BoundLabel{1};
  double z_eff = 1.0;
  NormKind norm_kind = NormKind::Unit;
  std::optional<HydrogenicOrbital> closed_form;

  /// R(0) for s states (N^r in the amplitude formulas), 0 otherwise.
  double origin_value = 0.0;

  // Continuum diagnostics: where the amplitude was matched and the relative
  // spread of the amplitude invariant over the final oscillation.
  double matching_radius = 0.0;
  double matching_spread = 0.0;

  /// R(r); zero beyond the stored grid for sampled functions.
  double operator()(double r) const;
  double extent() const { return grid.empty() ? 0.0 : grid.back(); }
};

RadialFunction bound_radial(double z, int n, int ell);

struct ContinuumOptions {
  double phase_step = 0.01;  // radians of local phase per RK4 step
  // Samples stored up to here; 0 -> 60 / max(z, 1), or the largest target
  // extent inside continuum_sweep.
  double keep_radius = 0.0;
  double max_match_radius = 1e6;
};

/// Regular s-wave Coulomb continuum function, normalized per unit energy.
/// Obtained by outward RK4 integration of u'' = -(2z/r + 2 eps) u from a
/// power series at the origin, then matching the amplitude to the
/// sqrt(2/(pi k)) envelope using the second-order WKB invariant.
RadialFunction continuum_radial_s(double z, double eps,
                                  const ContinuumOptions &opts = {});

/// Maximum relative drift of the Wronskian of two independent radial
/// solutions integrated with the continuum stepper over [r_start, r_end].
double continuum_wronskian_drift(double z, double eps, double r_start,
                                 double r_end, double phase_step = 0.01);

/// Radial overlap  int r^2 R_a R_b dr  (no angular-momentum checks).
QuadratureResult radial_overlap(const RadialFunction &a,
                                const RadialFunction &b);

/// <s|p> radial overlap; requires ell = 0 and ell = 1 respectively.
QuadratureResult overlap_s_p(const RadialFunction &s_fn,
                             const RadialFunction &p_fn);

/// Closed-form-only overlap, used when both orbitals are hydrogenic.
QuadratureResult orbital_overlap(const HydrogenicOrbital &a,
                                 const HydrogenicOrbital &b);

/// x^C_{n's,np} = N_{n's} a_{n's,np} / (N_{ns} a_{ns,np}) for Coulomb
/// functions of charge z. Independent of z.
double x_ratio_coulomb(int n_prime, int n, double z = 1.0);

/// lim_{n'->inf} n'^3 x^C_{n's,np}, extrapolated from n' in [10, 40].
double coulomb_limit_C(int n = 2);

/// Threshold suppression factor of the Coulomb continuum correlation,
///   Phi = exp(-2 xi (arctan(2/xi) - 2/xi)),  xi = sqrt(I_Z / eps),
/// with Phi -> 1 as eps -> 0.
double phi_suppression(double eps, double ionization_z);

/// Closed-form Coulomb continuum density x_{eps s,2p} (per hartree) built on
/// Phi. With sommerfeld_factor the 1/(1 - exp(-2 pi xi)) factor is kept and
/// the expression is exact; without it this is the printed model.
double x_eps_model_2p(double eps, double z, double limit_c,
                      bool sommerfeld_factor = true);

// ---------------------------------------------------------------------------
// Energy sweeps over the continuum (the data-parallel kernel).

struct ContinuumNode {
  double energy = 0.0;
  double origin_value = 0.0;         // N^r_{eps s}
  std::vector<double> overlaps;      // <eps s | target>, one per target
  std::vector<double> overlap_error; // quadrature error per target
  double matching_spread = 0.0;
};

/// Solves the continuum problem at every energy and projects onto each
/// target orbital. OpenMP-parallel over energies; results are stored by
/// index so the output does not depend on scheduling.
std::vector<ContinuumNode>
continuum_sweep(double z, std::span<const double> energies,
                std::span<const HydrogenicOrbital> targets,
                const ContinuumOptions &opts = {});

/// Serial reference for continuum_sweep; bit-identical results.
std::vector<ContinuumNode>
continuum_sweep_serial(double z, std::span<const double> energies,
                       std::span<const HydrogenicOrbital> targets,
                       const ContinuumOptions &opts = {});

/// Quadrature in k = sqrt(2 eps) over [0, eps_max]: Gauss-Kronrod 15 panels
/// doubling in width from momentum_scale/16. Beyond eps_max the integrand is
/// modelled as A eps^-s + B eps^-(s+1/2), fitted on two extra nodes at
/// eps_max/2 and eps_max (s = tail_exponent).
class EnergyQuadrature {
public:
  EnergyQuadrature(double momentum_scale, double eps_max,
                   double tail_exponent = 1.5);

  /// All energies at which the integrand must be sampled.
  const std::vector<double> &energies() const { return energies_; }
  double eps_max() const { return eps_max_; }

  /// Integral over [0, eps_max] and, if with_tail, the tail beyond it.
  /// samples[i] is the integrand at energies()[i].
  QuadratureResult integrate(std::span<const double> samples,
                             bool with_tail = true) const;
  /// Tail estimate alone (with its uncertainty).
  QuadratureResult tail(std::span<const double> samples) const;

private:
  std::vector<double> energies_;
  std::vector<double> panel_edges_; // in k
  double eps_max_;
  double tail_exponent_;
};

struct CoulombContinuumResult {
  QuadratureResult direct;   // int x_{eps s,np} d eps from continuum solves
  std::optional<double> model; // 2p only: closed-form model integral
};

CoulombContinuumResult x_c_coulomb_detailed(int n, double eps_max_over_iz = 400.0);

/// Continuum share x_c = int_0^inf x^C_{eps s,np} d eps (Coulomb, any z).
double x_c_coulomb(int n);

} // namespace photocorr
