#include "photocorr/screening.hpp"

#include <cmath>
#include <sstream>

#include "photocorr/hydrogenic.hpp"
#include "photocorr/numerics.hpp"

namespace photocorr {

EffectiveCharges EffectiveCharges::from_screening(double z, double d1s,
                                                  double d2s, double d2p) {
  EffectiveCharges ch{z, z - d1s, z - d2s, z - d2p};
  ch.validate();
  return ch;
}

void EffectiveCharges::validate() const {
  for (double zi : {z_1s, z_2s, z_2p}) {
    if (!(zi > 0.0) || zi > z) {
      std::ostringstream msg;
      msg << "effective charge " << zi << " outside (0, " << z << "]";
      throw DomainError(msg.str());
    }
  }
  if (!(3.0 * z_2s - z_2p > 0.0))
    throw DomainError("effective charges: 3 z_2s - z_2p must be positive");
}

double eta(const EffectiveCharges &ch) {
  ch.validate();
  const double z = ch.z;
  const double r13 = ch.z_1s / ch.z_2s;
  const double b = 3.0 * z / (2.0 * ch.z_1s + ch.z_2p);
  const double c = (ch.z_2s + ch.z_2p) / (2.0 * z);
  return r13 * r13 * r13 * std::pow(b, 4) * std::pow(c, 5) * 2.0 * z /
         (3.0 * ch.z_2s - ch.z_2p);
}

double eta_from_overlaps(const EffectiveCharges &ch) {
  ch.validate();
  const HydrogenicOrbital s1(ch.z_1s, 1, 0);
  const HydrogenicOrbital s2(ch.z_2s, 2, 0);
  const HydrogenicOrbital p2(ch.z_2p, 2, 1);
  const double screened = s1.origin_coefficient() * orbital_overlap(s1, p2).value /
                          (s2.origin_coefficient() * orbital_overlap(s2, p2).value);
  return screened / x_ratio_coulomb(1, 2);
}

double eta_linearized(double z, double d1s, double d2s, double d2p) {
  if (!(z > 0.0))
    throw DomainError("eta_linearized: charge must be positive");
  return 1.0 + (-d1s / 3.0 - 5.0 * d2p / 3.0 + 2.0 * d2s) / z;
}

double x_ph_two_term(double x1s_coulomb, double eta_val) {
  return 1.0 + x1s_coulomb * eta_val;
}

} // namespace photocorr
