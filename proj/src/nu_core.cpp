#include "kgsolve/nu_core.hpp"

#include <cmath>
#include <sstream>

#include "kgsolve/error.hpp"
#include "kgsolve/special_functions.hpp"

namespace kgsolve::nu {

namespace {

constexpr double kRadicandClamp = 1e-12;

double checked_root(double radicand, const char* name) {
  if (radicand >= 0.0) return std::sqrt(radicand);
  if (radicand >= -kRadicandClamp) return 0.0;
  std::ostringstream msg;
  msg << name << " = " << radicand << " < 0";
  throw Error(ErrorKind::NegativeRadicand, msg.str());
}

}  // namespace

NuDerived derive_parameters(const NuProblem& p, KBranch branch) {
  if (p.a3 == 0.0) throw Error(ErrorKind::DomainError, "a3 = 0 is not supported");
  if (branch == KBranch::plus) {
    throw Error(ErrorKind::UnsupportedBranch,
                "the + branch of k gives tau' > 0 for this family; only the - branch is built");
  }
  NuDerived d{};
  d.a4 = 0.5 * (1.0 - p.a1);
  d.a5 = 0.5 * (p.a2 - 2.0 * p.a3);
  d.a6 = d.a5 * d.a5 + p.xi1;
  d.a7 = 2.0 * d.a4 * d.a5 - p.xi2;
  d.a8 = d.a4 * d.a4 + p.xi3;
  d.a9 = p.a3 * d.a7 + p.a3 * p.a3 * d.a8 + d.a6;
  d.sqrt_a8 = checked_root(d.a8, "a8");
  d.sqrt_a9 = checked_root(d.a9, "a9");
  d.k = -(d.a7 + 2.0 * p.a3 * d.a8) - 2.0 * d.sqrt_a8 * d.sqrt_a9;
  d.a10 = p.a1 + 2.0 * d.a4 + 2.0 * d.sqrt_a8;
  d.a11 = p.a2 - 2.0 * d.a5 + 2.0 * (d.sqrt_a9 + p.a3 * d.sqrt_a8);
  d.a12 = d.a4 + d.sqrt_a8;
  d.a13 = d.a5 - (d.sqrt_a9 + p.a3 * d.sqrt_a8);
  return d;
}

double quantization_residual(const NuProblem& p, int n) {
  if (n < 0) throw Error(ErrorKind::DomainError, "n must be non-negative");
  const NuDerived d = derive_parameters(p);
  const double nn = static_cast<double>(n);
  return p.a2 * nn - (2.0 * nn + 1.0) * d.a5 +
         (2.0 * nn + 1.0) * (d.sqrt_a9 + p.a3 * d.sqrt_a8) + nn * (nn - 1.0) * p.a3 + d.a7 +
         2.0 * p.a3 * d.a8 + 2.0 * d.sqrt_a8 * d.sqrt_a9;
}

double tau_slope(const NuProblem& p) {
  const NuDerived d = derive_parameters(p);
  return -2.0 * p.a3 - 2.0 * (d.sqrt_a9 + p.a3 * d.sqrt_a8);
}

SolutionForm solution_form(const NuDerived& d, double a3) {
  if (a3 == 0.0) throw Error(ErrorKind::DomainError, "a3 = 0 is not supported");
  return {a3, d.a12, -d.a12 - d.a13 / a3, d.a10 - 1.0, d.a11 / a3 - d.a10 - 1.0};
}

double evaluate_solution(const SolutionForm& form, int n, double s) {
  const double t = 1.0 - form.a3 * s;
  const special::JacobiIndex idx(form.jacobi_a, form.jacobi_b);
  return std::pow(s, form.s_exponent) * std::pow(t, form.one_minus_exponent) *
         special::jacobi_eval(n, idx, 1.0 - 2.0 * form.a3 * s);
}

}  // namespace kgsolve::nu
