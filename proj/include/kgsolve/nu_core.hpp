#pragma once

namespace kgsolve::nu {

/// Coefficients of the hypergeometric-type equation
///   [s(1 - a3 s)]^2 Psi'' + s(1 - a3 s)(a1 - a2 s) Psi' + (-xi1 s^2 + xi2 s - xi3) Psi = 0.
struct NuProblem {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double xi1 = 0.0;
  double xi2 = 0.0;
  double xi3 = 0.0;
};

/// Which root of the k condition pi(s) is built from. Only `minus` yields a
/// negative tau' for this equation family; `plus` is rejected.
enum class KBranch { minus, plus };

struct NuDerived {
  double a4, a5, a6, a7, a8, a9, a10, a11, a12, a13;
  double k;
  double sqrt_a8;
  double sqrt_a9;
};

/// Shape of Psi(s) = s^{s_exponent} (1 - a3 s)^{one_minus_exponent}
///                   P_n^{(jacobi_a, jacobi_b)}(1 - 2 a3 s).
struct SolutionForm {
  double a3;
  double s_exponent;
  double one_minus_exponent;
  double jacobi_a;
  double jacobi_b;
};

/// Radicands a8, a9 in [-1e-12, 0) are clamped to zero; anything below throws
/// NegativeRadicand naming the offending constant. a3 == 0 throws DomainError.
NuDerived derive_parameters(const NuProblem& p, KBranch branch = KBranch::minus);

/// Left-hand side of the eigenvalue condition; vanishes on an eigenvalue.
double quantization_residual(const NuProblem& p, int n);

/// tau' = -2 a3 - 2 (sqrt(a9) + a3 sqrt(a8)); the method needs it negative.
double tau_slope(const NuProblem& p);

SolutionForm solution_form(const NuDerived& d, double a3);

/// Psi(s) for degree n. The caller keeps s inside (0, 1/a3).
double evaluate_solution(const SolutionForm& form, int n, double s);

}  // namespace kgsolve::nu
