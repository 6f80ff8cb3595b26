#include "kgsolve/oracle.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kgsolve/error.hpp"
#include "kgsolve/special_functions.hpp"

namespace kgsolve::oracle {

using hulthen::ModelParams;
using hulthen::QuantumNumbers;

namespace {

// Coefficients of W = (E^2 - m0^2) + A u + C u^2 - centrifugal, u = 1/(e^{r/r0} - 1).
struct Couplings {
  double A;
  double C;
};

Couplings couplings(const ModelParams& p, double E) {
  return {2.0 * p.m0 * (p.S0 - p.m1) + 2.0 * E * p.V0,
          2.0 * p.m1 * p.S0 - p.m1 * p.m1 + p.V0 * p.V0 - p.S0 * p.S0};
}

using State = std::array<double, 2>;

constexpr int kMaxSteps = 2'000'000;

}  // namespace

void ShootingConfig::validate() const {
  if (!(step_tol > 0.0) || !(e_tol > 0.0)) {
    throw Error(ErrorKind::DomainError, "shooting tolerances must be positive");
  }
  if (r_min && !(*r_min > 0.0)) throw Error(ErrorKind::DomainError, "r_min must be positive");
  if (r_min && r_max && !(*r_min < *r_max)) {
    throw Error(ErrorKind::DomainError, "r_min must be below r_max");
  }
}

double radial_rhs(double r, double E, const ModelParams& p, int l, CentrifugalMode mode) {
  if (!(r > 0.0)) throw Error(ErrorKind::DomainError, "radial_rhs requires r > 0");
  const Couplings c = couplings(p, E);
  const double x = r / p.r0;
  const double em1 = std::expm1(x);
  const double u = 1.0 / em1;
  const double ll = static_cast<double>(l) * (l + 1);
  double centrifugal = 0.0;
  if (ll != 0.0) {
    centrifugal = mode == CentrifugalMode::exact
                      ? ll / (r * r)
                      : ll * std::exp(x) / (p.r0 * p.r0 * em1 * em1);
  }
  return E * E - p.m0 * p.m0 + c.A * u + c.C * u * u - centrifugal;
}

double indicial_exponent(const ModelParams& p, int l) {
  // Near r = 0 both centrifugal forms and u^2 behave like 1/r^2, so
  // W ~ w2 / r^2 with w2 = C r0^2 - l(l+1), and gamma (gamma - 1) = -w2.
  const double w2 = couplings(p, 0.0).C * p.r0 * p.r0 - static_cast<double>(l) * (l + 1);
  const double radicand = 0.25 - w2;
  if (radicand < 0.0) {
    throw Error(ErrorKind::ComplexDeltaPrime, "oscillatory behaviour at the origin (fall to centre)");
  }
  return 0.5 + std::sqrt(radicand);
}

double outer_cutoff(const ModelParams& p, int l, double E, const ShootingConfig& cfg) {
  if (cfg.r_max) return *cfg.r_max;
  const double alpha = p.r0 * std::sqrt(std::max(0.0, p.m0 * p.m0 - E * E));
  double r_max = 50.0 * p.r0 / std::max(alpha, 0.1);
  // Push out until the screened terms are negligible against E^2 - m0^2.
  const double asymptote = E * E - p.m0 * p.m0;
  auto screened = [&](double r) {
    return std::abs(radial_rhs(r, E, p, l, CentrifugalMode::approximate) - asymptote);
  };
  while (screened(r_max) >= 1e-14 && r_max < 1e4 * p.r0) r_max *= 1.25;
  return r_max;
}

RadialSweep integrate_radial(const ModelParams& p, int l, double E, const ShootingConfig& cfg) {
  namespace odeint = boost::numeric::odeint;
  cfg.validate();
  const double r_min = cfg.r_min.value_or(1e-6 * p.r0);
  const double r_max = outer_cutoff(p, l, E, cfg);
  if (!(r_min < r_max)) throw Error(ErrorKind::DomainError, "r_min must be below r_max");

  const double gamma = indicial_exponent(p, l);
  // First Frobenius correction: phi = r^gamma (1 + c1 r), c1 = -w1 / (2 gamma),
  // with w1 the 1/r coefficient of W (the approximate centrifugal form has none).
  const Couplings c = couplings(p, E);
  const double w1 = p.r0 * (c.A - c.C);
  const double c1 = -w1 / (2.0 * gamma);
  State y{std::pow(r_min, gamma) * (1.0 + c1 * r_min),
          gamma * std::pow(r_min, gamma - 1.0) + c1 * (gamma + 1.0) * std::pow(r_min, gamma)};

  auto system = [&](const State& s, State& ds, double r) {
    ds[0] = s[1];
    ds[1] = -radial_rhs(r, E, p, l, cfg.mode) * s[0];
  };

  auto stepper = odeint::make_controlled(1e-250, cfg.step_tol, odeint::runge_kutta_dopri5<State>());

  RadialSweep out{0.0, 0.0, 0, r_max, 0};
  double r = r_min;
  double dt = 0.1 * r_min;
  double last_sign = y[0] >= 0.0 ? 1.0 : -1.0;
  int attempts = 0;
  while (r < r_max) {
    if (r + dt > r_max) dt = r_max - r;
    const auto result = stepper.try_step(system, y, r, dt);
    if (++attempts > kMaxSteps) {
      throw Error(ErrorKind::StiffnessFailure, "radial integration exceeded its step budget");
    }
    if (result == odeint::fail) {
      if (dt < 1e-14 * std::max(r, p.r0)) {
        std::ostringstream msg;
        msg << "step size collapsed at r = " << r << " (E = " << E << ")";
        throw Error(ErrorKind::StiffnessFailure, msg.str());
      }
      continue;
    }
    ++out.steps;
    if (!std::isfinite(y[0]) || !std::isfinite(y[1])) {
      throw Error(ErrorKind::StiffnessFailure, "radial solution overflowed");
    }
    if (y[0] != 0.0) {
      const double sign = y[0] > 0.0 ? 1.0 : -1.0;
      if (sign != last_sign) {
        ++out.nodes;
        last_sign = sign;
      }
    }
  }
  out.phi_end = y[0];
  out.dphi_end = y[1];
  return out;
}

ShootResult shoot(const ModelParams& p, const QuantumNumbers& qn, const ShootingConfig& cfg,
                  std::pair<double, double> bracket) {
  p.validate();
  qn.validate();
  auto [lo, hi] = bracket;
  if (lo > hi) std::swap(lo, hi);
  if (!(std::abs(lo) < p.m0 && std::abs(hi) < p.m0)) {
    throw Error(ErrorKind::DomainError, "shooting bracket must lie inside (-m0, m0)");
  }
  const auto above = [&](double E) { return integrate_radial(p, qn.l, E, cfg).nodes > qn.n; };
  const bool above_lo = above(lo);
  const bool above_hi = above(hi);
  if (above_lo == above_hi) {
    std::ostringstream msg;
    msg << "no level with " << qn.n << " nodes in [" << lo << ", " << hi << "]";
    throw Error(ErrorKind::NoSignChange, msg.str());
  }
  int iterations = 0;
  while (hi - lo > cfg.e_tol) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    if (above(mid) == above_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  // The side below the jump carries the eigenfunction's own node count.
  const double below_side = above_lo ? hi : lo;
  const int nodes = integrate_radial(p, qn.l, below_side, cfg).nodes;
  return {0.5 * (lo + hi), nodes, iterations};
}

namespace {

void refine_levels(const ModelParams& p, int l, const ShootingConfig& cfg, double lo, int n_lo,
                   double hi, int n_hi, int depth, std::vector<OracleLevel>& out) {
  if (n_lo == n_hi) return;
  if (std::abs(n_lo - n_hi) == 1 || depth > 30) {
    const int n = std::min(n_lo, n_hi);
    const ShootResult r = shoot(p, {n, l}, cfg, {lo, hi});
    out.push_back({r.energy, r.nodes});
    return;
  }
  const double mid = 0.5 * (lo + hi);
  const int n_mid = integrate_radial(p, l, mid, cfg).nodes;
  refine_levels(p, l, cfg, lo, n_lo, mid, n_mid, depth + 1, out);
  refine_levels(p, l, cfg, mid, n_mid, hi, n_hi, depth + 1, out);
}

}  // namespace

std::vector<OracleLevel> find_levels(const ModelParams& p, int l, const ShootingConfig& cfg,
                                     int samples, std::optional<std::pair<double, double>> range) {
  p.validate();
  if (samples < 2) throw Error(ErrorKind::DomainError, "find_levels needs at least two samples");
  double lo = -p.m0;
  double hi = p.m0;
  if (range) {
    lo = std::max(lo, std::min(range->first, range->second));
    hi = std::min(hi, std::max(range->first, range->second));
  }
  // Chebyshev-like spacing, strictly inside the range: levels crowd towards
  // the thresholds +-m0 where the decay rate vanishes.
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  std::vector<double> energies(samples);
  std::vector<int> nodes(samples);
  for (int i = 0; i < samples; ++i) {
    const double theta = std::numbers::pi * (samples - i - 0.5) / samples;
    energies[i] = centre + half * std::cos(theta);
    nodes[i] = integrate_radial(p, l, energies[i], cfg).nodes;
  }
  std::vector<OracleLevel> out;
  for (int i = 0; i + 1 < samples; ++i) {
    refine_levels(p, l, cfg, energies[i], nodes[i], energies[i + 1], nodes[i + 1], 0, out);
  }
  std::sort(out.begin(), out.end(),
            [](const OracleLevel& a, const OracleLevel& b) { return a.energy < b.energy; });
  return out;
}

WaveDerivatives wave_derivatives(const hulthen::BoundState& b, double r,
                                 hulthen::ExponentConvention conv) {
  if (!(r > 0.0)) throw Error(ErrorKind::DomainError, "wave_derivatives requires r > 0");
  const hulthen::WaveShape w = b.shape(conv);
  const double r0 = b.params().r0;
  const int n = b.qn().n;
  const double norm = conv == hulthen::ExponentConvention::derived
                          ? b.norm_quad()
                          : hulthen::normalization_quadrature(b, conv);
  const double s = std::exp(-r / r0);
  const double t = -std::expm1(-r / r0);  // 1 - s
  const double x = 1.0 - 2.0 * s;
  const special::JacobiIndex idx(w.jacobi_a, w.jacobi_b);
  const double P = special::jacobi_eval(n, idx, x);
  const double dP = special::jacobi_derivative(n, idx, x, 1);
  const double d2P = special::jacobi_derivative(n, idx, x, 2);

  // f(s) = g(s) P(1 - 2s), g = s^alpha (1-s)^e; derivatives in s first.
  const double g = std::pow(s, w.alpha) * std::pow(t, w.one_minus_exponent);
  // g'/g = alpha/s - e/(1-s); everything is carried pre-multiplied by s or s^2
  // so no 1/s factor is formed at large r.
  const double q = s / t;
  const double sL = w.alpha - w.one_minus_exponent * q;
  const double s2_dL = -w.alpha - w.one_minus_exponent * q * q;
  const double s_g1 = g * sL;                    // s g'
  const double s2_g2 = g * (sL * sL + s2_dL);    // s^2 g''
  const double s_f1 = s_g1 * P - 2.0 * s * g * dP;                               // s f'
  const double s2_f2 = s2_g2 * P - 4.0 * s * s_g1 * dP + 4.0 * s * s * g * d2P;  // s^2 f''

  // s = e^{-r/r0}: d/dr = -(s/r0) d/ds, d2/dr2 = (s^2 f'' + s f') / r0^2.
  WaveDerivatives out;
  out.phi = norm * g * P;
  out.dphi = -norm * s_f1 / r0;
  out.d2phi = norm * (s2_f2 + s_f1) / (r0 * r0);
  return out;
}

double ode_residual(const hulthen::BoundState& b, std::span<const double> grid,
                    hulthen::ExponentConvention conv) {
  double worst = 0.0;
  for (const double r : grid) {
    const WaveDerivatives d = wave_derivatives(b, r, conv);
    const double w_phi =
        radial_rhs(r, b.energy(), b.params(), b.qn().l, CentrifugalMode::approximate) * d.phi;
    const double residual = std::abs(d.d2phi + w_phi) / std::max(1.0, std::abs(w_phi));
    worst = std::max(worst, residual);
  }
  return worst;
}

std::vector<double> residual_grid(const hulthen::BoundState& b, int points) {
  if (points < 1) throw Error(ErrorKind::DomainError, "residual grid needs at least one point");
  const double r_max = 50.0 * b.params().r0 / std::max(b.coeffs().alpha, 0.1);
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = r_max * (i + 1.0) / (points + 1.0);
  return grid;
}

}  // namespace kgsolve::oracle
