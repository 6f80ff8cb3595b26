#include "doctest.h"

#include <cmath>

#include "kgsolve/error.hpp"
#include "kgsolve/hulthen.hpp"
#include "kgsolve/oracle.hpp"

using namespace kgsolve;
using hulthen::ModelParams;
using oracle::CentrifugalMode;

namespace {

// Klein-Gordon radial coefficient assembled from the profiles themselves.
double kg_coefficient(double r, double E, const ModelParams& p, int l, bool exact) {
  const auto v = hulthen::potentials_at(r, p);
  const double m = hulthen::mass_at(r, p);
  const auto cf = hulthen::centrifugal_pair(r, l, p.r0);
  return (E - v.vector) * (E - v.vector) - (m + v.scalar) * (m + v.scalar) -
         (exact ? cf.exact : cf.approximate);
}

}  // namespace

TEST_CASE("radial coefficient") {
  const ModelParams p{5.0, 0.1, -1.0, 2.0, 1.3};
  for (double r : {0.05, 0.4, 1.0, 3.0, 9.0}) {
    for (int l : {0, 2}) {
      const double want = kg_coefficient(r, -4.2, p, l, false);
      CHECK(oracle::radial_rhs(r, -4.2, p, l, CentrifugalMode::approximate) ==
            doctest::Approx(want).epsilon(1e-12));
      CHECK(oracle::radial_rhs(r, -4.2, p, l, CentrifugalMode::exact) ==
            doctest::Approx(kg_coefficient(r, -4.2, p, l, true)).epsilon(1e-12));
    }
    CHECK(oracle::radial_rhs(r, 0.3, p, 0, CentrifugalMode::exact) ==
          oracle::radial_rhs(r, 0.3, p, 0, CentrifugalMode::approximate));
  }
  CHECK(oracle::radial_rhs(80.0, 0.3, p, 1, CentrifugalMode::approximate) ==
        doctest::Approx(0.09 - 25.0).epsilon(1e-14));

  const ModelParams eq{1.0, 0.0, 3.0, 3.0, 1.0};
  const double E = 0.2;
  for (double r : {0.1, 0.7, 2.0}) {
    const double u = 1.0 / std::expm1(r);
    CHECK(oracle::radial_rhs(r, E, eq, 0, CentrifugalMode::approximate) ==
          doctest::Approx(E * E - 1.0 + 2 * (E * 3.0 + 3.0) * u).epsilon(1e-13));
  }
  CHECK_THROWS_AS(oracle::radial_rhs(0.0, E, eq, 0, CentrifugalMode::exact), Error);
}

TEST_CASE("shooting configuration") {
  oracle::ShootingConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.r_min = 2.0;
  cfg.r_max = 1.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  oracle::ShootingConfig tol;
  tol.e_tol = 0.0;
  CHECK_THROWS_AS(tol.validate(), Error);
}

TEST_CASE("shooting reproduces tabulated sign-valid levels") {
  oracle::ShootingConfig cfg;
  const auto a = oracle::shoot({1.0, 0.0, 3.0, 3.0, 1.0}, {1, 0}, cfg, {0.2, 0.4});
  CHECK(std::abs(a.energy - 0.3021690) < 1e-6);
  CHECK(a.nodes == 1);
  const auto b = oracle::shoot({5.0, 0.1, 1.0, 1.0, 1.0}, {1, 0}, cfg, {3.3, 3.6});
  CHECK(std::abs(b.energy - 3.443410) < 1e-5);
  CHECK_THROWS_AS(oracle::shoot({1.0, 0.0, 3.0, 3.0, 1.0}, {1, 0}, cfg, {0.5, 0.9}), Error);
}

TEST_CASE("centrifugal modes") {
  const ModelParams p{1.0, 0.0, 6.0, 6.0, 1.0};
  oracle::ShootingConfig approx;
  oracle::ShootingConfig exact;
  exact.mode = CentrifugalMode::exact;
  const auto s0a = oracle::shoot(p, {1, 0}, approx, {-0.5, 0.5});
  const auto s0e = oracle::shoot(p, {1, 0}, exact, {-0.5, 0.5});
  CHECK(std::abs(s0a.energy - s0e.energy) < 1e-9);

  const auto s1a = oracle::shoot(p, {2, 1}, approx, {0.5, 0.9});
  const auto s1e = oracle::shoot(p, {2, 1}, exact, {0.5, 0.99});
  MESSAGE("l=1 centrifugal approximation shift: " << s1e.energy - s1a.energy);
  CHECK(s1a.nodes == 2);
  CHECK(s1e.nodes == 2);
}

TEST_CASE("step tolerance refinement") {
  const ModelParams p{5.0, 0.1, 1.0, 2.0, 1.0};
  oracle::ShootingConfig coarse;
  oracle::ShootingConfig fine = coarse;
  fine.step_tol = coarse.step_tol / 32;
  const auto levels = oracle::find_levels(p, 0, coarse, 120);
  REQUIRE(!levels.empty());
  for (const auto& lv : levels) {
    const auto again = oracle::shoot(p, {lv.nodes, 0}, fine, {lv.energy - 1e-3, lv.energy + 1e-3});
    CHECK(std::abs(again.energy - lv.energy) < 10 * coarse.e_tol);
  }
}

TEST_CASE("level scan finds the sign-valid roots only") {
  const ModelParams p{1.0, 0.0, 3.0, 3.0, 1.0};
  const auto levels = oracle::find_levels(p, 0, {}, 120);
  bool valid_found = false, invalid_found = false;
  for (const auto& lv : levels) {
    if (std::abs(lv.energy - 0.3021695) < 1e-6 && lv.nodes == 1) valid_found = true;
    if (std::abs(lv.energy + 0.7637079) < 1e-4) invalid_found = true;
  }
  CHECK(valid_found);
  CHECK_FALSE(invalid_found);
}

TEST_CASE("closed-form wavefunctions solve the radial equation") {
  const ModelParams p{1.0, 0.0, 6.0, 6.0, 1.0};
  const auto pair = hulthen::energy_levels(p, {2, 1});
  REQUIRE(pair);
  const auto b = hulthen::BoundState::make(p, {2, 1}, pair->e_p);
  const auto grid = oracle::residual_grid(b, 500);
  CHECK(grid.size() == 500);
  CHECK(oracle::ode_residual(b, grid) < 1e-8);
  CHECK(oracle::ode_residual(b, grid, hulthen::ExponentConvention::printed) > 1e-4);

  const auto shifted = hulthen::BoundState::trial(p, {2, 1}, pair->e_p + 1e-3);
  CHECK(oracle::ode_residual(shifted, grid) > 1e-4);

  const auto g = hulthen::energy_levels(p, {0, 0});
  REQUIRE(g);
  const auto ground = hulthen::BoundState::make(p, {0, 0}, g->valid_p ? g->e_p : g->e_a);
  CHECK(oracle::ode_residual(ground, oracle::residual_grid(ground)) < 1e-8);

  const double h = 1e-4;
  const double r = 1.7;
  const auto d = oracle::wave_derivatives(b, r);
  const double fd = (hulthen::wavefunction(b, r + h) - hulthen::wavefunction(b, r - h)) / (2 * h);
  CHECK(d.dphi == doctest::Approx(fd).epsilon(1e-7));
  CHECK(d.phi == doctest::Approx(hulthen::wavefunction(b, r)).epsilon(1e-14));
}
