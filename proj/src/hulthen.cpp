#include "kgsolve/hulthen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kgsolve/error.hpp"
#include "kgsolve/special_functions.hpp"

namespace kgsolve::hulthen {

namespace {

void require_positive_r(double r) {
  if (!(r > 0.0)) {
    std::ostringstream msg;
    msg << "radius must be positive, got " << r;
    throw Error(ErrorKind::DomainError, msg.str());
  }
}

constexpr double kAlphaFloor = 1e-12;

}  // namespace

void ModelParams::validate() const {
  if (!(m0 > 0.0)) throw Error(ErrorKind::DomainError, "m0 must be positive");
  if (!(r0 > 0.0)) throw Error(ErrorKind::DomainError, "r0 must be positive");
  if (!(m1 >= 0.0)) throw Error(ErrorKind::DomainError, "m1 must be non-negative");
  if (!std::isfinite(V0) || !std::isfinite(S0)) {
    throw Error(ErrorKind::DomainError, "couplings must be finite");
  }
}

void QuantumNumbers::validate() const {
  if (n < 0 || l < 0) throw Error(ErrorKind::DomainError, "quantum numbers must be non-negative");
}

double mass_at(double r, const ModelParams& p) {
  require_positive_r(r);
  // e^{-x} / (1 - e^{-x}) == 1 / (e^{x} - 1)
  return p.m0 + p.m1 / std::expm1(r / p.r0);
}

PotentialPair potentials_at(double r, const ModelParams& p) {
  require_positive_r(r);
  const double u = 1.0 / std::expm1(r / p.r0);
  return {-p.S0 * u, -p.V0 * u};
}

CentrifugalPair centrifugal_pair(double r, int l, double r0) {
  const double ll = static_cast<double>(l) * (l + 1);
  if (ll == 0.0) return {0.0, 0.0};
  const double x = r / r0;
  const double em1 = std::expm1(x);
  return {ll / (r * r), ll * std::exp(x) / (r0 * r0 * em1 * em1)};
}

double delta_prime(const ModelParams& p, int l) {
  const double nu_sq_m1 = p.r0 * p.r0 * ((p.S0 - p.m1) * (p.S0 - p.m1) - p.V0 * p.V0);
  const double radicand = (2.0 * l + 1.0) * (2.0 * l + 1.0) + 4.0 * nu_sq_m1;
  if (radicand < 0.0) {
    std::ostringstream msg;
    msg << "delta' radicand (2l+1)^2 + 4 nu^2(m1) = " << radicand << " < 0 for l = " << l;
    throw Error(ErrorKind::ComplexDeltaPrime, msg.str());
  }
  return 0.5 + 0.5 * std::sqrt(radicand);
}

CoefficientSet coefficients(double E, const ModelParams& p, const QuantumNumbers& qn) {
  const double r0sq = p.r0 * p.r0;
  double eta_sq = p.m0 * p.m0 - E * E;
  if (eta_sq < 0.0) {
    if (eta_sq < -1e-12 * std::max(1.0, p.m0 * p.m0)) {
      std::ostringstream msg;
      msg << "|E| = " << std::abs(E) << " exceeds m0 = " << p.m0;
      throw Error(ErrorKind::UnboundEnergy, msg.str());
    }
    eta_sq = 0.0;
  }
  CoefficientSet c{};
  c.alpha = p.r0 * std::sqrt(eta_sq);
  c.alpha_m1_sq = r0sq * ((p.m1 - p.m0) * (p.m1 - p.m0) - E * E);
  c.beta1_sq = r0sq * (2.0 * E * p.V0 - 2.0 * p.S0 * (p.m1 - p.m0));
  c.beta2_sq = r0sq * (2.0 * E * p.V0 - 2.0 * p.m0 * (p.m1 - p.S0));
  c.nu_sq = r0sq * (p.S0 * p.S0 - p.V0 * p.V0);
  c.nu_sq_m1 = r0sq * ((p.S0 - p.m1) * (p.S0 - p.m1) - p.V0 * p.V0);
  c.delta_prime = delta_prime(p, qn.l);
  return c;
}

double nu_sq_m1_from_identity(const CoefficientSet& c) {
  return -c.alpha * c.alpha + c.alpha_m1_sq + c.beta1_sq - c.beta2_sq + c.nu_sq;
}

nu::NuProblem build_nu_problem(double E, const ModelParams& p, const QuantumNumbers& qn) {
  const CoefficientSet c = coefficients(E, p, qn);
  const double alpha_sq = c.alpha * c.alpha;
  const double ll = static_cast<double>(qn.l) * (qn.l + 1);
  nu::NuProblem np;
  np.a1 = 1.0;
  np.a2 = 1.0;
  np.a3 = 1.0;
  np.xi1 = alpha_sq + c.beta2_sq + c.nu_sq_m1;
  np.xi2 = 2.0 * alpha_sq + c.beta2_sq - ll;
  np.xi3 = alpha_sq;
  return np;
}

QuantizationQuadratic quantization_quadratic(const ModelParams& p, const QuantumNumbers& qn) {
  p.validate();
  qn.validate();
  const double dp = delta_prime(p, qn.l);
  const double r0sq = p.r0 * p.r0;
  const double n = qn.n;
  const double ll = static_cast<double>(qn.l) * (qn.l + 1);
  QuantizationQuadratic q{};
  q.P = 2.0 * p.V0 * r0sq;
  q.Q = 2.0 * p.m0 * (p.S0 - p.m1) * r0sq - ll - n * n - (2.0 * n + 1.0) * dp;
  q.D = 2.0 * (n + dp);
  q.A = q.P * q.P + q.D * q.D * r0sq;
  q.B = 2.0 * q.P * q.Q;
  q.C = q.Q * q.Q - q.D * q.D * r0sq * p.m0 * p.m0;
  return q;
}

QuantizationSides quantization_sides(double E, const ModelParams& p, const QuantumNumbers& qn) {
  const QuantizationQuadratic q = quantization_quadratic(p, qn);
  const double eta_sq = std::max(0.0, p.m0 * p.m0 - E * E);
  return {p.r0 * std::sqrt(eta_sq), (q.P * E + q.Q) / q.D};
}

std::optional<EnergyPair> energy_levels(const ModelParams& p, const QuantumNumbers& qn) {
  const QuantizationQuadratic q = quantization_quadratic(p, qn);
  double disc = q.B * q.B - 4.0 * q.A * q.C;
  const double scale = q.B * q.B + 4.0 * std::abs(q.A * q.C);
  if (disc < 0.0) {
    if (disc < -1e-9 * scale) return std::nullopt;
    disc = 0.0;
  }
  double lo = 0.0;
  double hi = 0.0;
  if (disc == 0.0) {
    lo = hi = -q.B / (2.0 * q.A);
  } else {
    const double root = std::sqrt(disc);
    const double t = -0.5 * (q.B + std::copysign(root, q.B));
    lo = t / q.A;
    hi = q.C / t;
    if (lo > hi) std::swap(lo, hi);
  }
  const double bound_cap = p.m0 * (1.0 + 1e-12);
  EnergyPair out{};
  out.e_a = lo;
  out.e_p = hi;
  out.discriminant = disc;
  out.valid_a = q.P * lo + q.Q >= -1e-9;
  out.valid_p = q.P * hi + q.Q >= -1e-9;
  out.bound_a = std::abs(lo) <= bound_cap;
  out.bound_p = std::abs(hi) <= bound_cap;
  return out;
}

std::optional<EnergyPair> constant_mass_levels(const ModelParams& p, const QuantumNumbers& qn) {
  ModelParams constant = p;
  constant.m1 = 0.0;
  return energy_levels(constant, qn);
}

BoundState::BoundState(const ModelParams& p, const QuantumNumbers& qn, double E)
    : params_(p), qn_(qn), energy_(E), coeffs_{}, norm_closed_(0.0), norm_quad_(0.0) {
  p.validate();
  qn.validate();
  coeffs_ = coefficients(E, p, qn);
  if (!(coeffs_.alpha > kAlphaFloor)) {
    std::ostringstream msg;
    msg << "alpha = " << coeffs_.alpha << " at E = " << E << "; the state does not decay";
    throw Error(ErrorKind::NotNormalizable, msg.str());
  }
  norm_quad_ = normalization_quadrature(*this);
  norm_closed_ = normalization_closed(*this);
}

BoundState BoundState::make(const ModelParams& p, const QuantumNumbers& qn, double E) {
  const QuantizationSides sides = quantization_sides(E, p, qn);
  const double lhs_sq = sides.lhs * sides.lhs;
  const double rhs_sq = sides.rhs * sides.rhs;
  if (std::abs(lhs_sq - rhs_sq) > 1e-9 * std::max(1.0, rhs_sq)) {
    std::ostringstream msg;
    msg << "E = " << E << " does not satisfy the quantization condition (|lhs^2 - rhs^2| = "
        << std::abs(lhs_sq - rhs_sq) << ")";
    throw Error(ErrorKind::NoConvergence, msg.str());
  }
  return BoundState(p, qn, E);
}

BoundState BoundState::trial(const ModelParams& p, const QuantumNumbers& qn, double E) {
  return BoundState(p, qn, E);
}

WaveShape BoundState::shape(ExponentConvention conv) const {
  const double a = coeffs_.alpha;
  const double dp = coeffs_.delta_prime;
  if (conv == ExponentConvention::printed) return {a, 1.0 + dp, 2.0 * a, 1.0 + 2.0 * dp};
  return {a, dp, 2.0 * a, 2.0 * dp - 1.0};
}

double wave_shape_at(const WaveShape& shape, int n, double r, double r0) {
  require_positive_r(r);
  const double x = r / r0;
  const double s = std::exp(-x);
  const double one_minus_s = -std::expm1(-x);
  const special::JacobiIndex idx(shape.jacobi_a, shape.jacobi_b);
  return std::pow(s, shape.alpha) * std::pow(one_minus_s, shape.one_minus_exponent) *
         special::jacobi_eval(n, idx, 1.0 - 2.0 * s);
}

double wavefunction(const BoundState& b, double r, ExponentConvention conv) {
  const double scale = conv == ExponentConvention::derived ? b.norm_quad()
                                                           : normalization_quadrature(b, conv);
  return scale * wave_shape_at(b.shape(conv), b.qn().n, r, b.params().r0);
}

double normalization_closed(const BoundState& b) {
  const double a = b.coeffs().alpha;
  const double beta = 2.0 * b.coeffs().delta_prime - 1.0;
  const double n = b.qn().n;
  const double g1 = 2.0 * a + beta + n + 1.0;
  const double g2 = 2.0 * a + n + 1.0;
  const double g3 = beta + n + 1.0;
  if (!(g1 > 0.0 && g2 > 0.0 && g3 > 0.0)) {
    throw Error(ErrorKind::DomainError, "non-positive Gamma argument in the closed normalization");
  }
  const double ratio_num = (2.0 * a + beta + 2.0 * n + 2.0) * (2.0 * a + beta + 2.0 * n);
  const double ratio_den =
      4.0 * n * (n + 1.0 + 2.0 * a + beta) + 2.0 * (1.0 + beta) * (2.0 * a + beta);
  if (!(ratio_den > 0.0) || !(ratio_num > 0.0) || !(a > 0.0)) {
    throw Error(ErrorKind::DomainError, "closed normalization radicand is not positive");
  }
  const double log_inner = special::log_gamma(n + 1.0) + std::log(a) + std::log(ratio_num) -
                           std::log(ratio_den) + special::log_gamma(g1) -
                           special::log_gamma(g2) - special::log_gamma(g3);
  return 2.0 / std::sqrt(b.params().r0) * std::exp(0.5 * log_inner);
}

double normalization_quadrature(const BoundState& b, ExponentConvention conv) {
  const WaveShape w = b.shape(conv);
  const int n = b.qn().n;
  const special::JacobiIndex idx(w.jacobi_a, w.jacobi_b);
  // \int_0^\infty phi^2 dr = r0 \int_0^1 s^{2 alpha - 1} (1-s)^{2e} P_n(1-2s)^2 ds
  auto density = [&](double s) {
    if (s <= 0.0 || s >= 1.0) return 0.0;
    const double poly = special::jacobi_eval(n, idx, 1.0 - 2.0 * s);
    return std::pow(s, 2.0 * w.alpha - 1.0) * std::pow(1.0 - s, 2.0 * w.one_minus_exponent) *
           poly * poly;
  };
  const double integral = special::integrate_relative(density, 0.0, 1.0, 1e-13);
  const double mass = b.params().r0 * integral;
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw Error(ErrorKind::NotNormalizable, "norm integral is not a positive finite number");
  }
  return 1.0 / std::sqrt(mass);
}

}  // namespace kgsolve::hulthen
