#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kgsolve/hulthen.hpp"

namespace kgsolve::oracle {

enum class CentrifugalMode { approximate, exact };

struct ShootingConfig {
  std::optional<double> r_min;  ///< default 1e-6 r0
  std::optional<double> r_max;  ///< default adapts to the decay rate at each trial energy
  double step_tol = 1e-10;
  double e_tol = 1e-9;
  CentrifugalMode mode = CentrifugalMode::approximate;

  void validate() const;
};

/// W(r; E) with phi'' + W phi = 0 the effective radial equation, including the
/// position-dependent mass, both Hulthen couplings and the centrifugal term
/// in the chosen form.
double radial_rhs(double r, double E, const hulthen::ModelParams& p, int l, CentrifugalMode mode);

/// Exponent gamma of the regular solution phi ~ r^gamma at the origin.
double indicial_exponent(const hulthen::ModelParams& p, int l);

/// Outer cutoff used for a trial energy E when the config leaves it open.
double outer_cutoff(const hulthen::ModelParams& p, int l, double E, const ShootingConfig& cfg);

/// Outward integration from the regular seed at r_min to r_max.
struct RadialSweep {
  double phi_end;
  double dphi_end;
  int nodes;  ///< sign changes of phi on (r_min, r_max]
  double r_max;
  int steps;
};

RadialSweep integrate_radial(const hulthen::ModelParams& p, int l, double E,
                             const ShootingConfig& cfg);

struct ShootResult {
  double energy;
  int nodes;
  int iterations;
};

/// Bisects inside `bracket` for the level whose eigenfunction has qn.n nodes.
/// Throws NoSignChange if the node count does not cross from <= n to > n
/// across the bracket, StiffnessFailure if integration cannot meet step_tol.
ShootResult shoot(const hulthen::ModelParams& p, const hulthen::QuantumNumbers& qn,
                  const ShootingConfig& cfg, std::pair<double, double> bracket);

struct OracleLevel {
  double energy;
  int nodes;
};

/// All levels in (e_lo, e_hi) located by sampling the node count on
/// `samples` energies and bisecting each unit jump. Defaults to (-m0, m0).
std::vector<OracleLevel> find_levels(const hulthen::ModelParams& p, int l,
                                     const ShootingConfig& cfg, int samples = 240,
                                     std::optional<std::pair<double, double>> range = {});

/// Closed-form value and radial derivatives of phi at r.
struct WaveDerivatives {
  double phi;
  double dphi;
  double d2phi;
};

WaveDerivatives wave_derivatives(const hulthen::BoundState& b, double r,
                                 hulthen::ExponentConvention conv =
                                     hulthen::ExponentConvention::derived);

/// max over the grid of |phi'' + W phi| / max(1, |W phi|) with phi'' from the
/// analytic closed form; W in approximate centrifugal mode at b.energy().
double ode_residual(const hulthen::BoundState& b, std::span<const double> grid,
                    hulthen::ExponentConvention conv = hulthen::ExponentConvention::derived);

/// `points` radii evenly spaced strictly inside (0, 50 r0 / max(alpha, 0.1)).
std::vector<double> residual_grid(const hulthen::BoundState& b, int points = 500);

}  // namespace kgsolve::oracle
