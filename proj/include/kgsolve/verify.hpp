#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgsolve/hulthen.hpp"
#include "kgsolve/oracle.hpp"

namespace kgsolve::verify {

/// Thresholds a closed-form state must meet against the numerical oracle.
struct Thresholds {
  double energy = 1e-6;
  double residual = 1e-8;
  double nu_residual = 1e-8;
  double normalization = 1e-8;
  double perturbed_residual = 1e-4;
};

struct StateReport {
  hulthen::ModelParams params;
  hulthen::QuantumNumbers qn;
  char root = 'a';  ///< 'a' or 'p'
  double e_closed = 0.0;
  std::optional<double> e_oracle;
  int oracle_nodes = -1;
  double residual_derived = 0.0;
  double residual_printed = 0.0;
  double residual_perturbed = 0.0;
  double perturbation = 1e-3;
  double nu_residual = 0.0;
  double tau_slope = 0.0;
  double norm_error = 0.0;  ///< |int phi^2 dr - 1| with the quadrature constant
  double norm_quad = 0.0;
  double norm_closed = 0.0;
  std::optional<double> e_exact_mode;  ///< exact-centrifugal oracle level, when requested
  bool pass = false;
  std::string failure;
};

/// Runs every check on the closed-form state at E. `levels` are the oracle
/// levels for (params, l); the one with qn.n nodes nearest E is matched.
StateReport check_state(const hulthen::ModelParams& p, const hulthen::QuantumNumbers& qn,
                        char root, double E, const std::vector<oracle::OracleLevel>& levels,
                        const Thresholds& th, double perturbation = 1e-3,
                        const std::vector<oracle::OracleLevel>* exact_levels = nullptr);

/// Sign-valid, strictly bound tabulated states: (params, qn, root, E).
struct TabulatedState {
  hulthen::ModelParams params;
  hulthen::QuantumNumbers qn;
  char root;
  double energy;
  bool valid;
};

/// Every distinct tabulated root (Tables I and II, "ours" column) with its
/// closed-form energy. Set `valid_only` to keep sign-valid bound states only.
std::vector<TabulatedState> tabulated_states(bool valid_only);

}  // namespace kgsolve::verify
