#include "kgsolve/special_functions.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "kgsolve/error.hpp"

namespace kgsolve::special {

JacobiIndex::JacobiIndex(double a_, double b_) : a(a_), b(b_) {
  if (!(a > -1.0) || !(b > -1.0)) {
    std::ostringstream msg;
    msg << "Jacobi indices must exceed -1, got (" << a << ", " << b << ")";
    throw Error(ErrorKind::DomainError, msg.str());
  }
}

double jacobi_eval(int n, const JacobiIndex& idx, double x) {
  if (n < 0) throw Error(ErrorKind::DomainError, "Jacobi degree must be non-negative");
  if (!(std::abs(x) <= 1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "Jacobi argument outside [-1, 1]: " << x;
    throw Error(ErrorKind::DomainError, msg.str());
  }
  const double a = idx.a;
  const double b = idx.b;
  if (n == 0) return 1.0;
  double p_prev = 1.0;
  double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (a * a - b * b);
    const double c3 = (s - 1.0) * s * (s - 2.0);
    const double c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double p_next = ((c2 + c3 * x) * p - c4 * p_prev) / c1;
    p_prev = p;
    p = p_next;
  }
  return p;
}

double jacobi_derivative(int n, const JacobiIndex& idx, double x, int order) {
  if (order < 0) throw Error(ErrorKind::DomainError, "derivative order must be non-negative");
  if (order > n) return 0.0;
  double scale = 1.0;
  for (int j = 0; j < order; ++j) scale *= 0.5 * (n + idx.a + idx.b + 1.0 + j);
  return scale * jacobi_eval(n - order, JacobiIndex(idx.a + order, idx.b + order), x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    std::ostringstream msg;
    msg << "log_gamma requires x > 0, got " << x;
    throw Error(ErrorKind::DomainError, msg.str());
  }
  return std::lgamma(x);
}

double jacobi_norm_integral(int n, double z, double zp) {
  if (n < 0) throw Error(ErrorKind::DomainError, "Jacobi degree must be non-negative");
  if (!(z > 0.0)) throw Error(ErrorKind::DomainError, "jacobi_norm_integral requires z > 0");
  if (!(zp > -1.0)) throw Error(ErrorKind::DomainError, "jacobi_norm_integral requires zp > -1");
  const double log_value = (z + zp) * std::log(2.0) + log_gamma(z + n + 1.0) +
                           log_gamma(zp + n + 1.0) - log_gamma(n + 1.0) - std::log(z) -
                           log_gamma(z + zp + n + 1.0);
  return std::exp(log_value);
}

namespace {

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

// One 15-point Kronrod panel with the embedded 7-point Gauss rule; the error
// estimate is |K - G|, floored at a few ulps of the panel's L1 mass.
Panel evaluate_panel(const Integrand& f, double lo, double hi) {
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  using Gauss = boost::math::quadrature::gauss<double, 7>;
  const auto& x = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();
  const double half = 0.5 * (hi - lo);
  const double centre = 0.5 * (hi + lo);

  double f0 = f(centre);
  double kronrod = f0 * wk[0];
  double gauss = f0 * wg[0];
  double l1 = std::abs(kronrod);
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double fp = f(centre + half * x[i]);
    const double fm = f(centre - half * x[i]);
    kronrod += (fp + fm) * wk[i];
    l1 += (std::abs(fp) + std::abs(fm)) * wk[i];
    if (i % 2 == 0) gauss += (fp + fm) * wg[i / 2];
  }
  kronrod *= half;
  gauss *= half;
  l1 *= std::abs(half);
  const double err = std::max(std::abs(kronrod - gauss), 2.0 * l1 * std::numeric_limits<double>::epsilon());
  return {lo, hi, kronrod, err};
}

constexpr int kMaxPanels = 20000;

}  // namespace

double integrate(const Integrand& f, double lo, double hi, double tol, double* error_estimate) {
  if (!(tol > 0.0)) throw Error(ErrorKind::DomainError, "integration tolerance must be positive");
  if (!(hi > lo)) {
    if (hi == lo) return 0.0;
    return -integrate(f, hi, lo, tol, error_estimate);
  }
  std::priority_queue<Panel> panels;
  Panel whole = evaluate_panel(f, lo, hi);
  double total = whole.value;
  double total_err = whole.error;
  panels.push(whole);

  int count = 1;
  while (total_err > tol) {
    if (count >= kMaxPanels) {
      std::ostringstream msg;
      msg << "adaptive quadrature stalled: error estimate " << total_err << " > tol " << tol;
      throw Error(ErrorKind::NoConvergence, msg.str());
    }
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      throw Error(ErrorKind::NoConvergence, "adaptive quadrature reached floating-point resolution");
    }
    Panel left = evaluate_panel(f, worst.lo, mid);
    Panel right = evaluate_panel(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
    // Resum periodically so cancellation in the running totals cannot drift.
    if (count % 256 == 0) {
      auto copy = panels;
      total = 0.0;
      total_err = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        total_err += copy.top().error;
        copy.pop();
      }
    }
  }
  if (error_estimate) *error_estimate = total_err;
  return total;
}

double integrate_relative(const Integrand& f, double lo, double hi, double rel_tol) {
  double tol = 1e-2;
  double value = integrate(f, lo, hi, tol);
  for (int pass = 0; pass < 40 && std::abs(value) < 1e3 * tol; ++pass) {
    if (value == 0.0) {
      tol *= 1e-6;
    } else {
      tol = 1e-4 * std::abs(value);
    }
    value = integrate(f, lo, hi, tol);
  }
  return integrate(f, lo, hi, rel_tol * std::max(std::abs(value), 1e-300));
}

double integrate_to_infinity(const Integrand& f, double scale, double tol,
                             double* error_estimate) {
  if (!(scale > 0.0)) throw Error(ErrorKind::DomainError, "integration scale must be positive");
  auto mapped = [&](double s) {
    if (s <= 0.0) return 0.0;
    const double r = -scale * std::log(s);
    return scale * f(r) / s;
  };
  return integrate(mapped, 0.0, 1.0, tol, error_estimate);
}

}  // namespace kgsolve::special
