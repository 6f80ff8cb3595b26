#include "doctest.h"

#include <cmath>
#include <random>

#include "kgsolve/error.hpp"
#include "kgsolve/hulthen.hpp"
#include "kgsolve/nu_core.hpp"

using namespace kgsolve;

namespace {

// Hulthen input constants written out directly from the model parameters.
nu::NuProblem hulthen_problem(double E, double m0, double m1, double V0, double S0, int l) {
  const double alpha_sq = m0 * m0 - E * E;
  const double beta2_sq = 2 * E * V0 - 2 * m0 * (m1 - S0);
  const double nu_sq_m1 = (S0 - m1) * (S0 - m1) - V0 * V0;
  return {1.0, 1.0, 1.0, alpha_sq + beta2_sq + nu_sq_m1, 2 * alpha_sq + beta2_sq - l * (l + 1.0),
          alpha_sq};
}

struct Slopes {
  double d1, d2, d3;
};

Slopes analytic_slopes(const nu::NuProblem& p, int n) {
  const auto d = nu::derive_parameters(p);
  const double r9 = (2 * n + 1) / (2 * d.sqrt_a9) + d.sqrt_a8 / d.sqrt_a9;
  const double r8 = (2 * n + 1) * p.a3 / (2 * d.sqrt_a8) + 2 * p.a3 + d.sqrt_a9 / d.sqrt_a8;
  return {r9, -p.a3 * r9 - 1.0, p.a3 * p.a3 * r9 + r8};
}

}  // namespace

TEST_CASE("derived constants") {
  const nu::NuProblem p{1, 1, 1, 0.3, 0.7, 0.2};
  const auto d = nu::derive_parameters(p);
  CHECK(d.a4 == 0.0);
  CHECK(d.a5 == -0.5);
  CHECK(d.a8 == doctest::Approx(0.2));
  CHECK(d.a9 == doctest::Approx(p.a3 * d.a7 + d.a8 + d.a6));
  CHECK(d.k == doctest::Approx(-(d.a7 + 2 * d.a8) - 2 * std::sqrt(d.a8 * d.a9)));
  CHECK(d.a12 == doctest::Approx(d.a4 + d.sqrt_a8));
}

TEST_CASE("a9 identity on random hulthen sets") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double m0 = 1 + 9 * u(rng), m1 = u(rng), V0 = 0.5 + 5.5 * u(rng);
    const double S0 = V0 + m1 + 0.2 + 3 * u(rng);
    const int l = trial % 4;
    const double E = m0 * (2 * u(rng) - 1);
    const auto d = nu::derive_parameters(hulthen_problem(E, m0, m1, V0, S0, l));
    const double nu_sq_m1 = (S0 - m1) * (S0 - m1) - V0 * V0;
    CHECK(d.a9 == doctest::Approx(nu_sq_m1 + l * (l + 1.0) + 0.25).epsilon(1e-12));
  }
}

TEST_CASE("radicand and branch errors") {
  const nu::NuProblem bad{1, 1, 1, 0.0, 0.0, -0.1};
  CHECK_THROWS_AS(nu::derive_parameters(bad), Error);
  try {
    nu::derive_parameters(bad);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeRadicand);
  }
  const nu::NuProblem tiny{1, 1, 1, -0.25, 0.0, -5e-13};
  CHECK(nu::derive_parameters(tiny).sqrt_a8 == 0.0);
  CHECK_THROWS_AS(nu::derive_parameters({1, 1, 1, 0.3, 0.7, 0.2}, nu::KBranch::plus), Error);
  CHECK_THROWS_AS(nu::derive_parameters({1, 1, 0, 0.3, 0.7, 0.2}), Error);
}

TEST_CASE("quantization residual at tabulated energies") {
  const auto at = [](double E) { return hulthen_problem(E, 1, 0, 1, 1, 0); };
  CHECK(std::abs(nu::quantization_residual(at(1.0), 1)) < 1e-10);
  CHECK(std::abs(nu::quantization_residual(at(0.0), 1)) > 1e-3);
  // -0.6 solves only the squared condition: the right-hand side is negative there.
  CHECK(std::abs(nu::quantization_residual(at(-0.6), 1)) > 1.0);
  const auto sides = hulthen::quantization_sides(-0.6, {1, 0, 1, 1, 1}, {1, 0});
  CHECK(sides.rhs < 0.0);
  CHECK(sides.lhs * sides.lhs == doctest::Approx(sides.rhs * sides.rhs).epsilon(1e-12));
}

TEST_CASE("tau slope") {
  // a3 = 1 with a4 = 0: a8 = xi3, and xi1 - xi2 + xi3 sets a9 - 1/4.
  CHECK(nu::tau_slope({1, 1, 1, 0.0, 0.0, 0.0}) == doctest::Approx(-3.0));
  CHECK(nu::tau_slope({1, 1, 1, 4.75, 0.0, 4.0}) == doctest::Approx(-12.0));
  const auto d = nu::derive_parameters({1, 1, 1, 4.75, 0.0, 4.0});
  CHECK(d.a8 == doctest::Approx(4.0));
  CHECK(d.a9 == doctest::Approx(9.0));
}

TEST_CASE("solution form") {
  const auto d0 = nu::derive_parameters({1, 1, 1, 0.0, 0.0, 0.0});
  const auto f0 = nu::solution_form(d0, 1.0);
  CHECK(f0.s_exponent == doctest::Approx(0.0));
  CHECK(f0.one_minus_exponent == doctest::Approx(1.0));

  const hulthen::ModelParams p{1.0, 0.05, 2.0, 2.6, 1.0};
  const hulthen::QuantumNumbers qn{1, 2};
  const double E = 0.3;
  const auto c = hulthen::coefficients(E, p, qn);
  const auto d = nu::derive_parameters(hulthen_problem(E, p.m0, p.m1, p.V0, p.S0, qn.l));
  const auto f = nu::solution_form(d, 1.0);
  CHECK(f.s_exponent == doctest::Approx(c.alpha).epsilon(1e-13));
  CHECK(f.one_minus_exponent == doctest::Approx(c.delta_prime).epsilon(1e-13));
  CHECK(f.jacobi_a == doctest::Approx(2 * c.alpha).epsilon(1e-13));
  CHECK(f.jacobi_b == doctest::Approx(2 * c.delta_prime - 1).epsilon(1e-13));
  CHECK(f.one_minus_exponent ==
        doctest::Approx(-d.a4 - d.a5 / 1.0 + d.sqrt_a9 / 1.0).epsilon(1e-14));

  const auto eq = nu::solution_form(
      nu::derive_parameters(hulthen_problem(-0.6, 1, 0, 1, 1, 0)), 1.0);
  CHECK(eq.jacobi_a == doctest::Approx(1.6));
  CHECK(eq.jacobi_b == doctest::Approx(1.0));
}

TEST_CASE("residual slopes match finite differences") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const nu::NuProblem p{1.0, 1.0, 1.0, u(rng), u(rng) - 1.0, u(rng)};
    const int n = trial % 5;
    const auto s = analytic_slopes(p, n);
    const double h = 1e-6;
    auto fd = [&](double nu::NuProblem::*field) {
      nu::NuProblem up = p, down = p;
      up.*field += h;
      down.*field -= h;
      return (nu::quantization_residual(up, n) - nu::quantization_residual(down, n)) / (2 * h);
    };
    CHECK(fd(&nu::NuProblem::xi1) == doctest::Approx(s.d1).epsilon(1e-6));
    CHECK(fd(&nu::NuProblem::xi2) == doctest::Approx(s.d2).epsilon(1e-6));
    CHECK(fd(&nu::NuProblem::xi3) == doctest::Approx(s.d3).epsilon(1e-6));
  }
}

TEST_CASE("evaluate solution") {
  const auto d = nu::derive_parameters(hulthen_problem(-0.6, 1, 0, 1, 1, 0));
  const auto f = nu::solution_form(d, 1.0);
  const double s = 0.3;
  const double want = std::pow(s, 0.8) * (1 - s) * (0.5 * (1.6 - 1.0) + 0.5 * (1.6 + 1.0 + 2) * (1 - 2 * s));
  CHECK(nu::evaluate_solution(f, 1, s) == doctest::Approx(want).epsilon(1e-13));
}
