#include "photocorr/hydrogenic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <sstream>

namespace photocorr {

namespace {

struct Stepper {
  double z;
  double eps;

  double q(double r) const { return 2.0 * z / r + 2.0 * eps; }
  double local_momentum(double r) const { return std::sqrt(q(r)); }

  // One RK4 step of u'' = -q(r) u.
  void step(double r, double h, double &u, double &du) const {
    const double q0 = q(r);
    const double qm = q(r + 0.5 * h);
    const double q1 = q(r + h);
    const double k1u = du, k1d = -q0 * u;
    const double k2u = du + 0.5 * h * k1d, k2d = -qm * (u + 0.5 * h * k1u);
    const double k3u = du + 0.5 * h * k2d, k3d = -qm * (u + 0.5 * h * k2u);
    const double k4u = du + h * k3d, k4d = -q1 * (u + h * k3u);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    du += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
  }

  double step_size(double r, double phase_step) const {
    return std::min(phase_step / local_momentum(r), 0.1 * r);
  }

  // Second-order WKB frequency w and its slope (w' ~ p').
  void wkb(double r, double &w, double &dw) const {
    const double p = local_momentum(r);
    const double dp = -z / (r * r * p);
    const double ddp = 2.0 * z / (r * r * r * p) - z * z / (r * r * r * r * p * p * p);
    w = std::sqrt(p * p + 0.75 * (dp / p) * (dp / p) - 0.5 * ddp / p);
    dw = dp;
  }

  // Amplitude invariant A^2 = w u^2 + (u' + w'u/(2w))^2 / w.
  double invariant(double r, double u, double du) const {
    double w, dw;
    wkb(r, w, dw);
    const double t = du + 0.5 * dw / w * u;
    return w * u * u + t * t / w;
  }
};

// Regular solution u = sum a_j r^j with a_1 = 1.
void origin_series(double z, double eps, double r, double &u, double &du) {
  std::array<double, 24> a{};
  a[1] = 1.0;
  a[2] = -z;
  for (std::size_t j = 3; j < a.size(); ++j)
    a[j] = (-2.0 * z * a[j - 1] - 2.0 * eps * a[j - 2]) / (j * (j - 1.0));
  u = 0.0;
  du = 0.0;
  double rp = 1.0;
  for (std::size_t j = 1; j < a.size(); ++j) {
    du += j * a[j] * rp;
    rp *= r;
    u += a[j] * rp;
  }
}

constexpr long kStepBudget = 50'000'000;

} // namespace

RadialFunction continuum_radial_s(double z, double eps,
                                  const ContinuumOptions &opts) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw DomainError("continuum_radial_s: energy must be positive");
  if (!(z >= 0.0))
    throw DomainError("continuum_radial_s: charge must be non-negative");
  if (!(opts.phase_step > 0.0))
    throw DomainError("continuum_radial_s: phase_step must be positive");

  const Stepper st{z, eps};
  const double k = std::sqrt(2.0 * eps);
  const double zs = std::max(z, 1.0);
  const double keep = opts.keep_radius > 0.0 ? opts.keep_radius : 60.0 / zs;
  const double match = std::min(std::max(60.0 / k, std::sqrt(1e3 * z / (k * k * k))),
                                opts.max_match_radius / zs);

  double r = 1e-4 / zs;
  double u, du;
  origin_series(z, eps, r, u, du);

  std::vector<double> rs, us, dus;
  const double end = std::max(match, keep);
  long steps = 0;
  while (r < end) {
    if (r <= keep) {
      rs.push_back(r);
      us.push_back(u);
      dus.push_back(du);
    }
    const double h = st.step_size(r, opts.phase_step);
    st.step(r, h, u, du);
    r += h;
    if (++steps > kStepBudget || !std::isfinite(u))
      throw SolverError("continuum_radial_s: integration did not reach the "
                        "asymptotic region");
  }

  // Average the invariant over one full oscillation (2 pi of WKB phase).
  double phase = 0.0;
  double prev = st.invariant(r, u, du);
  double lo = prev, hi = prev, acc = 0.0;
  while (phase < 2.0 * kPi) {
    double w, dw;
    st.wkb(r, w, dw);
    const double h = st.step_size(r, opts.phase_step);
    st.step(r, h, u, du);
    r += h;
    const double cur = st.invariant(r, u, du);
    const double dphi = w * h;
    acc += 0.5 * (prev + cur) * dphi;
    phase += dphi;
    lo = std::min(lo, cur);
    hi = std::max(hi, cur);
    prev = cur;
    if (++steps > kStepBudget || !std::isfinite(u))
      throw SolverError("continuum_radial_s: amplitude matching failed");
  }
  const double amp = std::sqrt(acc / phase);
  if (!(amp > 0.0) || !std::isfinite(amp)) {
    std::ostringstream msg;
    msg << "continuum_radial_s: degenerate amplitude at r=" << r
        << " (eps=" << eps << ", z=" << z << ")";
    throw SolverError(msg.str());
  }
  const double scale = std::sqrt(2.0 / kPi) / amp;

  RadialFunction fn;
  fn.ell = 0;
  fn.label = ContinuumLabel{eps};
  fn.z_eff = z;
  fn.norm_kind = NormKind::PerUnitEnergy;
  fn.origin_value = scale;
  fn.matching_radius = match;
  fn.matching_spread = (std::sqrt(hi) - std::sqrt(lo)) / amp;
  fn.grid = std::move(rs);
  fn.values.resize(fn.grid.size());
  fn.slopes.resize(fn.grid.size());
  for (std::size_t i = 0; i < fn.grid.size(); ++i) {
    const double ri = fn.grid[i];
    fn.values[i] = scale * us[i] / ri;
    fn.slopes[i] = scale * (dus[i] / ri - us[i] / (ri * ri));
  }
  return fn;
}

double continuum_wronskian_drift(double z, double eps, double r_start,
                                 double r_end, double phase_step) {
  if (!(r_start > 0.0) || !(r_end > r_start))
    throw DomainError("continuum_wronskian_drift: need 0 < r_start < r_end");
  const Stepper st{z, eps};
  double u1 = 1.0, d1 = 0.0, u2 = 0.0, d2 = 1.0;
  const double w0 = u1 * d2 - d1 * u2;
  double drift = 0.0;
  double r = r_start;
  while (r < r_end) {
    const double h = std::min(st.step_size(r, phase_step), r_end - r);
    st.step(r, h, u1, d1);
    st.step(r, h, u2, d2);
    r += h;
    drift = std::max(drift, std::abs((u1 * d2 - d1 * u2) - w0) / std::abs(w0));
  }
  return drift;
}

namespace {

ContinuumNode solve_node(double z, double eps,
                         const std::vector<RadialFunction> &targets,
                         const ContinuumOptions &opts) {
  const RadialFunction fn = continuum_radial_s(z, eps, opts);
  ContinuumNode node;
  node.energy = eps;
  node.origin_value = fn.origin_value;
  node.matching_spread = fn.matching_spread;
  for (const auto &t : targets) {
    const QuadratureResult ov = radial_overlap(fn, t);
    node.overlaps.push_back(ov.value);
    node.overlap_error.push_back(ov.abs_error);
  }
  return node;
}

struct SweepSetup {
  std::vector<RadialFunction> targets;
  ContinuumOptions opts;
};

SweepSetup prepare(std::span<const HydrogenicOrbital> targets,
                   const ContinuumOptions &opts) {
  SweepSetup s;
  s.opts = opts;
  double reach = 0.0;
  for (const auto &t : targets) {
    s.targets.push_back(bound_radial(t.z(), t.n(), t.ell()));
    reach = std::max(reach, t.extent());
  }
  if (s.opts.keep_radius <= 0.0 && reach > 0.0)
    s.opts.keep_radius = reach;
  return s;
}

} // namespace

std::vector<ContinuumNode>
continuum_sweep(double z, std::span<const double> energies,
                std::span<const HydrogenicOrbital> targets,
                const ContinuumOptions &opts) {
  const SweepSetup setup = prepare(targets, opts);
  const long count = static_cast<long>(energies.size());
  std::vector<ContinuumNode> out(energies.size());
  std::vector<std::exception_ptr> failures(energies.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      out[i] = solve_node(z, energies[i], setup.targets, setup.opts);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (const auto &f : failures)
    if (f)
      std::rethrow_exception(f);
  return out;
}

std::vector<ContinuumNode>
continuum_sweep_serial(double z, std::span<const double> energies,
                       std::span<const HydrogenicOrbital> targets,
                       const ContinuumOptions &opts) {
  const SweepSetup setup = prepare(targets, opts);
  std::vector<ContinuumNode> out;
  out.reserve(energies.size());
  for (double e : energies)
    out.push_back(solve_node(z, e, setup.targets, setup.opts));
  return out;
}

EnergyQuadrature::EnergyQuadrature(double momentum_scale, double eps_max,
                                   double tail_exponent)
    : eps_max_(eps_max), tail_exponent_(tail_exponent) {
  if (!(momentum_scale > 0.0) || !(eps_max > 0.0))
    throw DomainError("EnergyQuadrature: scales must be positive");
  if (!(tail_exponent > 1.0))
    throw DomainError("EnergyQuadrature: tail exponent must exceed 1");
  const double k_max = std::sqrt(2.0 * eps_max);
  double edge = std::min(momentum_scale / 16.0, k_max);
  panel_edges_ = {0.0, edge};
  while (edge < k_max) {
    edge = std::min(2.0 * edge, k_max);
    // Avoid a sliver panel at the end.
    if (k_max - edge < 0.25 * (edge - panel_edges_.back()))
      edge = k_max;
    panel_edges_.push_back(edge);
  }
  const auto rule = numerics::gauss_kronrod15();
  for (std::size_t p = 0; p + 1 < panel_edges_.size(); ++p) {
    const double mid = 0.5 * (panel_edges_[p] + panel_edges_[p + 1]);
    const double half = 0.5 * (panel_edges_[p + 1] - panel_edges_[p]);
    for (double x : rule.nodes) {
      const double k = mid + half * x;
      energies_.push_back(0.5 * k * k);
    }
  }
  energies_.push_back(0.5 * eps_max);
  energies_.push_back(eps_max);
}

QuadratureResult EnergyQuadrature::integrate(std::span<const double> samples,
                                             bool with_tail) const {
  if (samples.size() != energies_.size())
    throw DomainError("EnergyQuadrature: sample count mismatch");
  const auto rule = numerics::gauss_kronrod15();
  QuadratureResult out;
  std::size_t idx = 0;
  for (std::size_t p = 0; p + 1 < panel_edges_.size(); ++p) {
    const double half = 0.5 * (panel_edges_[p + 1] - panel_edges_[p]);
    double kr = 0.0, gs = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j, ++idx) {
      const double k = std::sqrt(2.0 * energies_[idx]);
      const double f = samples[idx] * k; // d eps = k dk
      kr += rule.kronrod_weights[j] * f;
      gs += rule.gauss_weights[j] * f;
    }
    out.value += half * kr;
    out.abs_error += half * std::abs(kr - gs);
  }
  if (with_tail)
    out += tail(samples);
  return out;
}

QuadratureResult EnergyQuadrature::tail(std::span<const double> samples) const {
  if (samples.size() != energies_.size())
    throw DomainError("EnergyQuadrature: sample count mismatch");
  const double e1 = energies_[energies_.size() - 2];
  const double e2 = energies_.back();
  const double f1 = samples[samples.size() - 2];
  const double f2 = samples.back();
  const double s = tail_exponent_;
  // f = A e^-s + B e^-(s+1/2) through both nodes.
  const double det = std::pow(e1, -s) * std::pow(e2, -s - 0.5) -
                     std::pow(e2, -s) * std::pow(e1, -s - 0.5);
  const double a = (f1 * std::pow(e2, -s - 0.5) - f2 * std::pow(e1, -s - 0.5)) / det;
  const double b = (std::pow(e1, -s) * f2 - std::pow(e2, -s) * f1) / det;
  const double two_term = a * std::pow(e2, 1.0 - s) / (s - 1.0) +
                          b * std::pow(e2, 0.5 - s) / (s - 0.5);
  // Single local power law as the comparison estimate.
  double single = f2 * e2 / (s - 1.0);
  if (f1 != 0.0 && f2 != 0.0 && (f1 > 0.0) == (f2 > 0.0)) {
    const double local = std::log(f1 / f2) / std::log(e2 / e1);
    if (local > 1.0)
      single = f2 * e2 / (local - 1.0);
  }
  return {two_term, std::abs(two_term - single)};
}

CoulombContinuumResult x_c_coulomb_detailed(int n, double eps_max_over_iz) {
  if (n < 2)
    throw DomainError("x_c_coulomb: np state requires n >= 2");
  if (!(eps_max_over_iz > 0.0))
    throw DomainError("x_c_coulomb: eps_max must be positive");
  constexpr double z = 1.0; // Coulomb ratios do not depend on z
  const double iz = 0.5 * z * z;
  const HydrogenicOrbital p(z, n, 1);
  const HydrogenicOrbital s(z, n, 0);
  const double ref = s.origin_coefficient() * orbital_overlap(s, p).value;

  const EnergyQuadrature quad(z, eps_max_over_iz * iz);
  const std::array<HydrogenicOrbital, 1> targets = {p};
  const auto nodes = continuum_sweep(z, quad.energies(), targets);
  std::vector<double> samples(nodes.size());
  double node_error = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    samples[i] = nodes[i].origin_value * nodes[i].overlaps[0] / ref;
    node_error = std::max(node_error, std::abs(nodes[i].origin_value *
                                               nodes[i].overlap_error[0] / ref));
  }

  CoulombContinuumResult out;
  out.direct = quad.integrate(samples);
  out.direct.abs_error += node_error * quad.eps_max();
  if (n == 2) {
    const double c = coulomb_limit_C(2);
    const std::array<double, 3> breaks = {0.05, 0.5, 5.0};
    out.model = numerics::integrate(
                    [&](double e) { return e > 0.0 ? x_eps_model_2p(e, z, c) : c / (2.0 * iz); },
                    0.0, kInfinity, breaks)
                    .value;
  }
  return out;
}

double x_c_coulomb(int n) { return x_c_coulomb_detailed(n).direct.value; }

} // namespace photocorr
