#include "kgsolve/verify.hpp"

#include <cmath>
#include <sstream>

#include "kgsolve/error.hpp"
#include "kgsolve/refdata.hpp"
#include "kgsolve/special_functions.hpp"

namespace kgsolve::verify {

namespace {

void fail(StateReport& r, const std::string& why) {
  r.pass = false;
  if (!r.failure.empty()) r.failure += "; ";
  r.failure += why;
}

std::optional<oracle::OracleLevel> nearest_with_nodes(
    const std::vector<oracle::OracleLevel>& levels, int nodes, double E) {
  std::optional<oracle::OracleLevel> best;
  for (const auto& level : levels) {
    if (level.nodes != nodes) continue;
    if (!best || std::abs(level.energy - E) < std::abs(best->energy - E)) best = level;
  }
  return best;
}

}  // namespace

StateReport check_state(const hulthen::ModelParams& p, const hulthen::QuantumNumbers& qn,
                        char root, double E, const std::vector<oracle::OracleLevel>& levels,
                        const Thresholds& th, double perturbation,
                        const std::vector<oracle::OracleLevel>* exact_levels) {
  StateReport r;
  r.params = p;
  r.qn = qn;
  r.root = root;
  r.e_closed = E;
  r.perturbation = perturbation;
  r.pass = true;

  const auto match = nearest_with_nodes(levels, qn.n, E);
  if (match) {
    r.e_oracle = match->energy;
    r.oracle_nodes = match->nodes;
    if (std::abs(match->energy - E) > th.energy) {
      std::ostringstream msg;
      msg << "|E_closed - E_oracle| = " << std::abs(match->energy - E);
      fail(r, msg.str());
    }
  } else {
    fail(r, "oracle found no level with n nodes");
  }
  if (exact_levels) {
    if (const auto exact = nearest_with_nodes(*exact_levels, qn.n, E)) {
      r.e_exact_mode = exact->energy;
    }
  }

  const auto nu_problem = hulthen::build_nu_problem(E, p, qn);
  r.nu_residual = std::abs(nu::quantization_residual(nu_problem, qn.n));
  r.tau_slope = nu::tau_slope(nu_problem);
  if (r.nu_residual > th.nu_residual) fail(r, "NU quantization residual too large");
  if (!(r.tau_slope < 0.0)) fail(r, "tau' is not negative");

  const auto state = hulthen::BoundState::make(p, qn, E);
  r.norm_quad = state.norm_quad();
  r.norm_closed = state.norm_closed();
  const auto grid = oracle::residual_grid(state);
  r.residual_derived = oracle::ode_residual(state, grid);
  r.residual_printed = oracle::ode_residual(state, grid, hulthen::ExponentConvention::printed);
  if (r.residual_derived > th.residual) fail(r, "closed-form ODE residual too large");

  const auto perturbed = hulthen::BoundState::trial(p, qn, E + perturbation);
  r.residual_perturbed = oracle::ode_residual(perturbed, grid);

  const double integral = special::integrate_to_infinity(
      [&](double x) {
        if (!(x > 0.0)) return 0.0;
        const double phi = hulthen::wavefunction(state, x);
        return phi * phi;
      },
      p.r0, 1e-12);
  r.norm_error = std::abs(integral - 1.0);
  if (r.norm_error > th.normalization) fail(r, "normalization integral differs from 1");
  return r;
}

std::vector<TabulatedState> tabulated_states(bool valid_only) {
  std::vector<TabulatedState> out;
  for (const auto id : {refdata::TableId::I, refdata::TableId::II}) {
    for (const auto& row : refdata::load_table(id, refdata::Source::ours)) {
      const auto p = row.key.params();
      const auto qn = row.key.qn();
      const auto pair = hulthen::energy_levels(p, qn);
      if (!pair) continue;
      const std::pair<char, double> roots[] = {{'a', pair->e_a}, {'p', pair->e_p}};
      const bool flags[] = {pair->valid_a, pair->valid_p};
      const bool printed[] = {row.e_a.has_value(), row.e_p.has_value()};
      for (int k = 0; k < 2; ++k) {
        if (!printed[k]) continue;
        const double E = roots[k].second;
        const double alpha = hulthen::coefficients(E, p, qn).alpha;
        const bool valid = flags[k] && alpha > 1e-12;
        if (valid_only && !valid) continue;
        out.push_back({p, qn, roots[k].first, E, valid});
      }
    }
  }
  return out;
}

}  // namespace kgsolve::verify
