#pragma once

#include <functional>

namespace kgsolve::special {

/// Parameter pair (a, b) of P_n^{(a,b)}; both must exceed -1.
struct JacobiIndex {
  double a;
  double b;

  JacobiIndex(double a, double b);
};

/// P_n^{(a,b)}(x) by the ascending three-term recurrence.
/// Throws DomainError for |x| > 1 + 1e-12.
double jacobi_eval(int n, const JacobiIndex& idx, double x);

/// k-th derivative of P_n^{(a,b)} at x, using
/// d/dx P_n^{(a,b)} = (n + a + b + 1)/2 * P_{n-1}^{(a+1,b+1)}.
double jacobi_derivative(int n, const JacobiIndex& idx, double x, int order = 1);

/// Closed form of  \int_{-1}^{1} (1-x)^{z-1} (1+x)^{zp} [P_n^{(z,zp)}(x)]^2 dx,
///   2^{z+zp} Gamma(z+n+1) Gamma(zp+n+1) / (n! z Gamma(z+zp+n+1)),
/// assembled in log space. Requires z > 0 and zp > -1.
double jacobi_norm_integral(int n, double z, double zp);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

using Integrand = std::function<double(double)>;

/// Adaptive 15-point Gauss-Kronrod quadrature of f over (lo, hi). Panels are
/// bisected in order of largest error estimate until the summed estimate is
/// below `tol`; algebraic endpoint singularities resolve by repeated
/// subdivision toward the endpoint. Throws NoConvergence when the panel budget
/// is exhausted with the estimate still above `tol`.
double integrate(const Integrand& f, double lo, double hi, double tol,
                 double* error_estimate = nullptr);

/// integrate() with the tolerance taken relative to the magnitude of the
/// result, found by successively tightened passes.
double integrate_relative(const Integrand& f, double lo, double hi, double rel_tol);

/// \int_0^\infty f(r) dr through r = scale * ln(1/s), s in (0, 1).
double integrate_to_infinity(const Integrand& f, double scale, double tol,
                             double* error_estimate = nullptr);

}  // namespace kgsolve::special
