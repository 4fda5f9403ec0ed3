#include "photocorr/numerics.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace photocorr::numerics {

namespace {

// psi''(x) ~ -(1/x^2 + 1/x^3 + sum_k B_{2k} (2k+1) / x^{2k+2})
double polygamma2_asymptotic(double x) {
  static constexpr std::array<double, 7> coeff = {
      1.0 / 2.0,  -1.0 / 6.0,         1.0 / 6.0, -3.0 / 10.0,
      5.0 / 6.0,  -691.0 * 13.0 / 2730.0, 7.0 * 15.0 / 6.0};
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double p = inv2 * inv2; // x^-4
  for (double c : coeff) {
    series += c * p;
    p *= inv2;
  }
  return -(inv2 + inv2 * inv + series);
}

constexpr double kAsymptoticStart = 12.0;

} // namespace

double polygamma2(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    std::ostringstream msg;
    msg << "polygamma2: argument must be positive and finite, got " << a;
    throw DomainError(msg.str());
  }
  if (a >= kAsymptoticStart)
    return polygamma2_asymptotic(a);

  const int shift = static_cast<int>(std::ceil(kAsymptoticStart - a));
  double head = 0.0;
  for (int j = shift - 1; j >= 0; --j) {
    const double x = a + j;
    head += 1.0 / (x * x * x);
  }
  return polygamma2_asymptotic(a + shift) - 2.0 * head;
}

double sum_tail_cubes(double a, int k_start) {
  if (k_start < 0)
    throw DomainError("sum_tail_cubes: k_start must be non-negative");
  const double x = a + k_start;
  if (!(x > 0.0)) {
    std::ostringstream msg;
    msg << "sum_tail_cubes: a + k_start must be positive, got " << x;
    throw DomainError(msg.str());
  }
  return -0.5 * polygamma2(x);
}

QuadratureResult integrate(const std::function<double(double)> &f,
                           double lower, double upper,
                           std::span<const double> breakpoints,
                           const IntegrateOptions &opts) {
  if (!(upper > lower))
    throw DomainError("integrate: upper limit must exceed lower limit");
  std::vector<double> edges;
  edges.reserve(breakpoints.size() + 2);
  edges.push_back(lower);
  for (double b : breakpoints) {
    if (!(b > edges.back()) || !(b < upper))
      throw DomainError("integrate: breakpoints must be sorted and inside "
                        "(lower, upper)");
    edges.push_back(b);
  }
  edges.push_back(upper);

  using Rule = boost::math::quadrature::gauss_kronrod<double, 61>;
  QuadratureResult total;
  double l1_total = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    double err = 0.0;
    double l1 = 0.0;
    double v;
    if (std::isinf(edges[i + 1])) {
      // x = a + L (u^-4 - 1): an x^-p tail becomes u^(4p-5), regular for the
      // algebraic decays met here (p >= 3/2) and for any exponential.
      const double a = edges[i];
      const double scale = std::max(1.0, std::abs(a));
      auto mapped = [&](double u) {
        const double u2 = u * u;
        const double x = a + scale * (1.0 / (u2 * u2) - 1.0);
        if (!std::isfinite(x))
          return 0.0;
        return f(x) * 4.0 * scale / (u2 * u2 * u);
      };
      v = Rule::integrate(mapped, 0.0, 1.0, opts.max_depth, opts.rel_tol, &err,
                          &l1);
    } else {
      v = Rule::integrate(f, edges[i], edges[i + 1], opts.max_depth,
                          opts.rel_tol, &err, &l1);
    }
    total.value += v;
    // G-K estimates collapse to zero on polynomial-exact panels; keep a
    // round-off floor so the reported error stays honest.
    total.abs_error +=
        std::max(err, 8.0 * std::numeric_limits<double>::epsilon() * l1);
    l1_total += l1;
  }
  if (!std::isfinite(total.value))
    throw QuadratureError("integrate: non-finite result", total.value,
                          kInfinity);
  const double allowed =
      std::max(opts.abs_tol, 10.0 * opts.rel_tol * std::max(l1_total, 1e-300));
  if (total.abs_error > allowed) {
    std::ostringstream msg;
    msg << "integrate: error estimate " << total.abs_error
        << " exceeds tolerance " << allowed << " after panel budget";
    throw QuadratureError(msg.str(), total.value, total.abs_error);
  }
  return total;
}

namespace {

constexpr std::array<double, 3> kGL3Nodes = {-0.7745966692414834, 0.0,
                                             0.7745966692414834};
constexpr std::array<double, 3> kGL3Weights = {
    0.5555555555555556, 0.8888888888888888, 0.5555555555555556};
constexpr std::array<double, 5> kGL5Nodes = {
    -0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
    0.9061798459386640};
constexpr std::array<double, 5> kGL5Weights = {
    0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
    0.4786286704993665, 0.2369268850561891};

constexpr std::array<double, 15> kK15Nodes = {
    -0.991455371120812639, -0.949107912342758525, -0.864864423359769073,
    -0.741531185599394440, -0.586087235467691130, -0.405845151377397167,
    -0.207784955007898468, 0.0,
    0.207784955007898468,  0.405845151377397167,  0.586087235467691130,
    0.741531185599394440,  0.864864423359769073,  0.949107912342758525,
    0.991455371120812639};
constexpr std::array<double, 15> kK15Weights = {
    0.022935322010529225, 0.063092092629978553, 0.104790010322250184,
    0.140653259715525919, 0.169004726639267903, 0.190350578064785410,
    0.204432940075298892, 0.209482141084727828, 0.204432940075298892,
    0.190350578064785410, 0.169004726639267903, 0.140653259715525919,
    0.104790010322250184, 0.063092092629978553, 0.022935322010529225};
constexpr std::array<double, 15> kG7Weights = {
    0.0, 0.129484966168869693, 0.0, 0.279705391489276668, 0.0,
    0.381830050505118945, 0.0, 0.417959183673469388, 0.0,
    0.381830050505118945, 0.0, 0.279705391489276668, 0.0,
    0.129484966168869693, 0.0};

} // namespace

GaussRule gauss_legendre(int points) {
  switch (points) {
  case 3:
    return {kGL3Nodes, kGL3Weights};
  case 5:
    return {kGL5Nodes, kGL5Weights};
  default:
    throw DomainError("gauss_legendre: only 3 and 5 points are tabulated");
  }
}

KronrodRule gauss_kronrod15() { return {kK15Nodes, kK15Weights, kG7Weights}; }

} // namespace photocorr::numerics
