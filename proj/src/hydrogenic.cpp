#include "photocorr/hydrogenic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace photocorr {

namespace {

// Generalized Laguerre L^{(alpha)}_{deg}(x) by the three-term recurrence.
double laguerre(int deg, double alpha, double x) {
  if (deg < 0)
    return 0.0;
  double prev = 1.0;
  if (deg == 0)
    return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < deg; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) /
                        (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

} // namespace

HydrogenicOrbital::HydrogenicOrbital(double z, int n, int ell)
    : z_(z), n_(n), ell_(ell) {
  if (!(z > 0.0))
    throw DomainError("hydrogenic orbital: charge must be positive");
  if (n < 1)
    throw DomainError("hydrogenic orbital: n must be >= 1");
  if (ell < 0 || ell >= n) {
    std::ostringstream msg;
    msg << "hydrogenic orbital: ell=" << ell << " outside [0, " << n - 1 << "]";
    throw DomainError(msg.str());
  }
  const double scale = 2.0 * z / n;
  norm_ = std::exp(0.5 * (3.0 * std::log(scale) + std::lgamma(n - ell) -
                          std::log(2.0 * n) - std::lgamma(n + ell + 1.0)));

  // Outside the classical turning point there are no nodes and the envelope
  // decays monotonically.
  double r = 2.0 * n * n / z;
  while (r * r * std::abs((*this)(r)) >= 1e-14)
    r *= 1.05;
  extent_ = r;
}

double HydrogenicOrbital::operator()(double r) const {
  const double rho = 2.0 * z_ * r / n_;
  return norm_ * std::pow(rho, ell_) * std::exp(-0.5 * rho) *
         laguerre(n_ - ell_ - 1, 2.0 * ell_ + 1.0, rho);
}

double HydrogenicOrbital::derivative(double r) const {
  const double scale = 2.0 * z_ / n_;
  const double rho = scale * r;
  const int deg = n_ - ell_ - 1;
  const double alpha = 2.0 * ell_ + 1.0;
  const double lag = laguerre(deg, alpha, rho);
  const double dlag = -laguerre(deg - 1, alpha + 1.0, rho);
  const double e = std::exp(-0.5 * rho);
  double d = std::pow(rho, ell_) * (dlag - 0.5 * lag);
  if (ell_ > 0)
    d += ell_ * std::pow(rho, ell_ - 1) * lag;
  return norm_ * scale * e * d;
}

double HydrogenicOrbital::origin_coefficient() const {
  const double scale = 2.0 * z_ / n_;
  return norm_ * std::pow(scale, ell_) *
         laguerre(n_ - ell_ - 1, 2.0 * ell_ + 1.0, 0.0);
}

double RadialFunction::operator()(double r) const {
  if (closed_form)
    return (*closed_form)(r);
  if (grid.empty() || r > grid.back())
    return 0.0;
  if (r <= grid.front())
    return values.front() + slopes.front() * (r - grid.front());
  const auto it = std::upper_bound(grid.begin(), grid.end(), r);
  const std::size_t i = static_cast<std::size_t>(it - grid.begin()) - 1;
  const double h = grid[i + 1] - grid[i];
  const double t = (r - grid[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * values[i] + (t3 - 2 * t2 + t) * h * slopes[i] +
         (-2 * t3 + 3 * t2) * values[i + 1] + (t3 - t2) * h * slopes[i + 1];
}

RadialFunction bound_radial(double z, int n, int ell) {
  HydrogenicOrbital orb(z, n, ell);
  RadialFunction fn;
  fn.ell = ell;
  fn.label = BoundLabel{n};
  fn.z_eff = z;
  fn.norm_kind = NormKind::Unit;
  fn.origin_value = ell == 0 ? orb.origin_coefficient() : 0.0;

  // Quadratic spacing concentrates samples near the nucleus.
  constexpr int kPoints = 4000;
  const double rmax = orb.extent();
  fn.grid.reserve(kPoints);
  fn.values.reserve(kPoints);
  fn.slopes.reserve(kPoints);
  for (int i = 1; i <= kPoints; ++i) {
    const double t = static_cast<double>(i) / kPoints;
    const double r = rmax * t * t;
    fn.grid.push_back(r);
    fn.values.push_back(orb(r));
    fn.slopes.push_back(orb.derivative(r));
  }
  fn.closed_form = orb;
  return fn;
}

QuadratureResult orbital_overlap(const HydrogenicOrbital &a,
                                 const HydrogenicOrbital &b) {
  const double upper = std::min(a.extent(), b.extent());
  std::array<double, 15> breaks{};
  for (std::size_t i = 0; i < breaks.size(); ++i)
    breaks[i] = upper * (i + 1.0) / (breaks.size() + 1.0);
  return numerics::integrate([&](double r) { return r * r * a(r) * b(r); },
                             0.0, upper, breaks, {.rel_tol = 1e-11});
}

namespace {

// Piecewise Gauss-Legendre over the sampled grid of `sampled`, with `other`
// evaluated pointwise. Error estimate from the 5- vs 3-point difference.
QuadratureResult sampled_overlap(const RadialFunction &sampled,
                                 const RadialFunction &other) {
  const auto g5 = numerics::gauss_legendre(5);
  const auto g3 = numerics::gauss_legendre(3);
  const double upper = std::min(sampled.extent(), other.extent() > 0.0
                                                      ? other.extent()
                                                      : sampled.extent());
  QuadratureResult out;
  auto panel = [&](double a, double b, auto &&eval_s) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s5 = 0.0;
    for (std::size_t j = 0; j < g5.nodes.size(); ++j) {
      const double r = mid + half * g5.nodes[j];
      s5 += g5.weights[j] * r * r * eval_s(r) * other(r);
    }
    double s3 = 0.0;
    for (std::size_t j = 0; j < g3.nodes.size(); ++j) {
      const double r = mid + half * g3.nodes[j];
      s3 += g3.weights[j] * r * r * eval_s(r) * other(r);
    }
    out.value += half * s5;
    out.abs_error += half * std::abs(s5 - s3);
  };

  const auto &g = sampled.grid;
  const auto &v = sampled.values;
  const auto &d = sampled.slopes;
  // Innermost sliver: linear extrapolation to the origin.
  panel(0.0, g.front(),
        [&](double r) { return v.front() + d.front() * (r - g.front()); });
  for (std::size_t i = 0; i + 1 < g.size() && g[i] < upper; ++i) {
    const double a = g[i];
    const double b = std::min(g[i + 1], upper);
    const double h = g[i + 1] - g[i];
    panel(a, b, [&](double r) {
      const double t = (r - a) / h;
      const double t2 = t * t;
      const double t3 = t2 * t;
      return (2 * t3 - 3 * t2 + 1) * v[i] + (t3 - 2 * t2 + t) * h * d[i] +
             (-2 * t3 + 3 * t2) * v[i + 1] + (t3 - t2) * h * d[i + 1];
    });
  }
  out.abs_error = std::max(out.abs_error,
                           1e-15 * std::max(1.0, std::abs(out.value)));
  return out;
}

} // namespace

QuadratureResult radial_overlap(const RadialFunction &a,
                                const RadialFunction &b) {
  if (a.closed_form && b.closed_form)
    return orbital_overlap(*a.closed_form, *b.closed_form);
  if (!a.closed_form)
    return sampled_overlap(a, b);
  return sampled_overlap(b, a);
}

QuadratureResult overlap_s_p(const RadialFunction &s_fn,
                             const RadialFunction &p_fn) {
  if (s_fn.ell != 0)
    throw DomainError("overlap_s_p: first argument must be an s function");
  if (p_fn.ell != 1)
    throw DomainError("overlap_s_p: second argument must be a p function");
  return radial_overlap(s_fn, p_fn);
}

double x_ratio_coulomb(int n_prime, int n, double z) {
  if (n < 2)
    throw DomainError("x_ratio_coulomb: np state requires n >= 2");
  if (n_prime < 1)
    throw DomainError("x_ratio_coulomb: n' must be >= 1");
  const HydrogenicOrbital p(z, n, 1);
  const HydrogenicOrbital s_ref(z, n, 0);
  const HydrogenicOrbital s(z, n_prime, 0);
  const double ref = s_ref.origin_coefficient() * orbital_overlap(s_ref, p).value;
  return s.origin_coefficient() * orbital_overlap(s, p).value / ref;
}

double coulomb_limit_C(int n) {
  // n'^3 x^C is analytic in the bound energy, i.e. in h = 1/n'^2; Neville
  // extrapolation to h = 0.
  constexpr std::array<int, 7> kSeq = {10, 15, 20, 25, 30, 35, 40};
  std::array<double, kSeq.size()> h{};
  std::array<double, kSeq.size()> t{};
  for (std::size_t i = 0; i < kSeq.size(); ++i) {
    const double np = kSeq[i];
    h[i] = 1.0 / (np * np);
    t[i] = np * np * np * x_ratio_coulomb(kSeq[i], n);
  }
  auto neville = [&](std::size_t first) {
    std::array<double, kSeq.size()> p{};
    const std::size_t m = kSeq.size() - first;
    for (std::size_t i = 0; i < m; ++i)
      p[i] = t[first + i];
    for (std::size_t lvl = 1; lvl < m; ++lvl)
      for (std::size_t i = 0; i + lvl < m; ++i) {
        const double ha = h[first + i];
        const double hb = h[first + i + lvl];
        p[i] = (hb * p[i] - ha * p[i + 1]) / (hb - ha);
      }
    return p[0];
  };
  const double full = neville(0);
  const double reduced = neville(2);
  if (!std::isfinite(full) || std::abs(full - reduced) > 1e-3 * std::abs(full)) {
    std::ostringstream msg;
    msg << "coulomb_limit_C: extrapolation did not settle (" << full << " vs "
        << reduced << ")";
    throw std::runtime_error(msg.str());
  }
  return full;
}

double phi_suppression(double eps, double ionization_z) {
  if (!(eps > 0.0) || !(ionization_z > 0.0))
    throw DomainError("phi_suppression: energies must be positive");
  const double xi = std::sqrt(ionization_z / eps);
  const double y = 2.0 / xi;
  // arctan(y) - y, by series when y is small to avoid cancellation.
  double d;
  if (y < 0.1) {
    d = 0.0;
    double term = y * y * y;
    const double y2 = y * y;
    for (int k = 1; k <= 8; ++k) {
      d += ((k % 2 == 1) ? -1.0 : 1.0) * term / (2 * k + 1);
      term *= y2;
    }
  } else {
    d = std::atan(y) - y;
  }
  return std::exp(-2.0 * xi * d);
}

double x_eps_model_2p(double eps, double z, double limit_c,
                      bool sommerfeld_factor) {
  const double iz = 0.5 * z * z;
  const double x0 = limit_c / (2.0 * iz);
  const double shift = 0.25 * iz;
  double v = x0 * shift * shift * phi_suppression(eps, iz) /
             ((eps + shift) * (eps + shift));
  if (sommerfeld_factor) {
    const double xi = std::sqrt(iz / eps);
    v /= -std::expm1(-2.0 * kPi * xi);
  }
  return v;
}

} // namespace photocorr
