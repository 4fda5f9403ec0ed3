#pragma once

namespace photocorr {

// Screening constants for the K and L shells of neon-like atoms.
inline constexpr double kDelta1s = 0.35;
inline constexpr double kDelta2s = 3.25;
inline constexpr double kDelta2p = 4.75;

struct EffectiveCharges {
  double z = 1.0;
  double z_1s = 1.0;
  double z_2s = 1.0;
  double z_2p = 1.0;

  static EffectiveCharges from_screening(double z, double d1s = kDelta1s,
                                         double d2s = kDelta2s,
                                         double d2p = kDelta2p);
  /// Throws DomainError unless 0 < z_nl <= z and 3 z_2s - z_2p > 0.
  void validate() const;
};

/// Suppression of x_{1s,2p} relative to its Coulomb value for screened
/// hydrogenic orbitals, in closed form.
double eta(const EffectiveCharges &ch);

/// The same ratio from numerical mixed-charge overlaps.
double eta_from_overlaps(const EffectiveCharges &ch);

/// First-order expansion 1 + (-d1s/3 - 5 d2p/3 + 2 d2s)/z.
double eta_linearized(double z, double d1s, double d2s, double d2p);

/// Two-term estimate 1 + x^C_{1s,np} * eta.
double x_ph_two_term(double x1s_coulomb, double eta_val);

} // namespace photocorr
