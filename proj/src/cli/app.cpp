#include "kgsolve/cli.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"
#include "kgsolve/error.hpp"
#include "kgsolve/hulthen.hpp"
#include "kgsolve/oracle.hpp"
#include "kgsolve/refdata.hpp"
#include "kgsolve/verify.hpp"
#include "parallel.hpp"
#include "render.hpp"

namespace kgsolve::cli {
namespace {

using hulthen::EnergyPair;
using hulthen::ModelParams;
using hulthen::QuantumNumbers;
using Json = nlohmann::ordered_json;

struct Settings {
  ModelParams model;
  int n = 1;
  int l = 0;
  int n_min = 0;
  int n_max = 2;
  int l_max = 2;
  bool n_set = false;
  bool l_set = false;
  std::string format = "text";
  bool format_set = false;
  std::string output;
  std::optional<double> table_tol;
  double oracle_tol = 1e-6;

  std::string table_id = "I";
  std::string source = "ours";

  std::string root = "auto";
  int points = 2000;
  double r_max = 25.0;
  std::optional<double> r_min;
  std::string grid = "uniform";

  bool single = false;
  std::string centrifugal = "approximate";
  double perturb = 1e-3;
  int samples = 160;

  std::string param = "V0";
  double from = 0.0;
  double to = 0.0;
  int steps = 50;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string echo(const ModelParams& p) {
  return fmt::format("m0={:g} m1={:g} V0={:g} S0={:g} r0={:g}", p.m0, p.m1, p.V0, p.S0, p.r0);
}

std::string echo(const ModelParams& p, const QuantumNumbers& qn) {
  return fmt::format("{} n={} l={}", echo(p), qn.n, qn.l);
}

Json number_or_null(std::optional<double> v) { return v ? Json(*v) : Json(nullptr); }

std::vector<QuantumNumbers> quantum_grid(const Settings& s) {
  const int n_lo = s.n_set ? s.n : s.n_min;
  const int n_hi = s.n_set ? s.n : s.n_max;
  const int l_lo = s.l_set ? s.l : 0;
  const int l_hi = s.l_set ? s.l : s.l_max;
  if (n_lo > n_hi) throw UsageError("--n-min exceeds --n-max");
  std::vector<QuantumNumbers> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int l = l_lo; l <= l_hi; ++l) out.push_back({n, l});
  }
  return out;
}

struct Level {
  QuantumNumbers qn;
  std::optional<EnergyPair> pair;
  double delta_prime;
  double discriminant;
};

Level solve_level(const ModelParams& p, const QuantumNumbers& qn) {
  try {
    Level lv{qn, hulthen::energy_levels(p, qn), hulthen::delta_prime(p, qn.l), 0.0};
    const auto q = hulthen::quantization_quadratic(p, qn);
    lv.discriminant = lv.pair ? lv.pair->discriminant : q.B * q.B - 4.0 * q.A * q.C;
    return lv;
  } catch (const Error& e) {
    throw Error(e.kind(), fmt::format("{} ({})", e.what(), echo(p, qn)));
  }
}

Json level_json(const Level& lv) {
  Json row;
  row["n"] = lv.qn.n;
  row["l"] = lv.qn.l;
  row["e_a"] = lv.pair ? Json(lv.pair->e_a) : Json(nullptr);
  row["e_p"] = lv.pair ? Json(lv.pair->e_p) : Json(nullptr);
  row["valid_a"] = lv.pair ? Json(lv.pair->valid_a) : Json(nullptr);
  row["valid_p"] = lv.pair ? Json(lv.pair->valid_p) : Json(nullptr);
  row["delta_prime"] = lv.delta_prime;
  row["discriminant"] = lv.discriminant;
  return row;
}

int cmd_spectrum(const Settings& s, std::ostream& out) {
  const auto grid = quantum_grid(s);
  const auto levels = parallel_map<Level>(grid.size(), [&](std::size_t i) {
    return solve_level(s.model, grid[i]);
  });
  RowTable t;
  t.columns = {"n", "l", "e_a", "e_p", "valid_a", "valid_p", "delta_prime", "discriminant"};
  t.comments.push_back("spectrum " + echo(s.model));
  if (std::any_of(grid.begin(), grid.end(), [](const auto& q) { return q.n == 0; })) {
    t.comments.push_back("n=0 rows: not tabulated in the reference tables");
  }
  for (const auto& lv : levels) t.rows.push_back(level_json(lv));
  render(t, parse_format(s.format), out);
  return kOk;
}

int cmd_table(const Settings& s, std::ostream& out) {
  const auto id = refdata::parse_table_id(s.table_id);
  const auto source = refdata::parse_source(s.source);
  const double tol = s.table_tol.value_or(id == refdata::TableId::I ? 1e-6 : 1e-5);
  const auto rows = refdata::load_table(id, source);
  const auto records = parallel_map<refdata::ComparisonRecord>(rows.size(), [&](std::size_t i) {
    const auto& row = rows[i];
    return refdata::compare(row.key, hulthen::energy_levels(row.key.params(), row.key.qn()), row,
                            tol);
  });

  RowTable t;
  t.columns = {"m0",     "m1",     "V0",     "S0",        "n",      "l",
               "ref_e_a", "ref_e_p", "e_a",    "e_p",       "diff_a", "diff_p",
               "status",  "symmetric", "remark"};
  int passed = 0, failed = 0, typos = 0;
  for (const auto& rec : records) {
    const auto& k = rec.row.key;
    Json row;
    row["m0"] = k.m0;
    row["m1"] = k.m1;
    row["V0"] = k.V0;
    row["S0"] = k.S0;
    row["n"] = k.n;
    row["l"] = k.l;
    row["ref_e_a"] = rec.row.e_a ? Json(rec.row.e_a->text()) : Json(nullptr);
    row["ref_e_p"] = rec.row.e_p ? Json(rec.row.e_p->text()) : Json(nullptr);
    row["e_a"] = rec.computed ? Json(rec.computed->e_a) : Json(nullptr);
    row["e_p"] = rec.computed ? Json(rec.computed->e_p) : Json(nullptr);
    row["diff_a"] = number_or_null(rec.diff_a);
    row["diff_p"] = number_or_null(rec.diff_p);
    std::string status;
    if (rec.suspected_typo) {
      ++typos;
      status = rec.pass ? "pass" : "typo";
    } else if (rec.pass) {
      ++passed;
      status = "pass";
    } else {
      ++failed;
      status = "FAIL";
    }
    row["status"] = status;
    row["symmetric"] = number_or_null(rec.symmetric);
    row["remark"] = rec.annotation;
    t.rows.push_back(std::move(row));
  }
  t.comments.push_back(fmt::format("table {} source {} tol {:g}", refdata::to_string(id),
                                   refdata::to_string(source), tol));
  t.comments.push_back(fmt::format("{} rows: {} pass, {} fail, {} typo-flagged", records.size(),
                                   passed, failed, typos));
  render(t, parse_format(s.format), out);
  return failed == 0 ? kOk : kFailure;
}

int cmd_wavefunction(const Settings& s, std::ostream& out, std::ostream& err) {
  if (s.points < 2) throw UsageError("--points must be at least 2");
  if (!(s.r_max > 0.0)) throw UsageError("--r-max must be positive");
  if (s.grid != "uniform" && s.grid != "log") throw UsageError("--grid must be uniform or log");
  if (s.root != "a" && s.root != "p" && s.root != "auto") {
    throw UsageError("--root must be a, p or auto");
  }
  const ModelParams& p = s.model;
  const QuantumNumbers qn{s.n, s.l};
  const auto pair = hulthen::energy_levels(p, qn);
  if (!pair) {
    err << "error: state absent (negative discriminant) for " << echo(p, qn) << '\n';
    return kFailure;
  }
  const auto normalizable = [&](double E) {
    return p.r0 * std::sqrt(std::max(0.0, p.m0 * p.m0 - E * E)) > 1e-12;
  };
  char root = 0;
  if (s.root == "auto") {
    if (pair->valid_a && pair->bound_a && normalizable(pair->e_a)) {
      root = 'a';
    } else if (pair->valid_p && pair->bound_p && normalizable(pair->e_p)) {
      root = 'p';
    } else {
      err << "error: no sign-valid normalizable root for " << echo(p, qn)
          << "; pass --root a or --root p to force one\n";
      return kFailure;
    }
  } else {
    root = s.root[0];
  }
  const double E = root == 'a' ? pair->e_a : pair->e_p;
  const bool valid = root == 'a' ? pair->valid_a : pair->valid_p;
  if (!valid) err << "warning: root " << root << " is sign-invalid\n";

  std::optional<hulthen::BoundState> state;
  try {
    state = hulthen::BoundState::make(p, qn, E);
  } catch (const Error& e) {
    err << "error: " << e.what() << " (" << echo(p, qn) << ")\n";
    return kFailure;
  }

  std::vector<double> rs(static_cast<std::size_t>(s.points));
  if (s.grid == "uniform") {
    for (int i = 0; i < s.points; ++i) rs[i] = s.r_max * (i + 1) / s.points;
  } else {
    const double lo = s.r_min.value_or(1e-4 * p.r0);
    if (!(lo > 0.0 && lo < s.r_max)) throw UsageError("--r-min must lie in (0, r-max)");
    const double step = std::log(s.r_max / lo) / (s.points - 1);
    for (int i = 0; i < s.points; ++i) rs[i] = lo * std::exp(step * i);
  }

  RowTable t;
  t.columns = {"r", "phi", "phi_sq", "mass", "V_v", "V_s"};
  const auto& c = state->coeffs();
  t.comments.push_back("wavefunction " + echo(p, qn) + " root " + root);
  t.comments.push_back(fmt::format("E = {:.10g}", E));
  t.comments.push_back(fmt::format("alpha = {:.10g}", c.alpha));
  t.comments.push_back(fmt::format("delta_prime = {:.10g}", c.delta_prime));
  t.comments.push_back(fmt::format("A_closed = {:.10g}", state->norm_closed()));
  t.comments.push_back(fmt::format("A_quad = {:.10g}", state->norm_quad()));
  t.comments.push_back("phi uses A_quad");
  if (qn.n == 0) t.comments.push_back("n=0 state: not tabulated in the reference tables");
  if (!valid) t.comments.push_back("warning: sign-invalid root");
  for (double r : rs) {
    const double phi = hulthen::wavefunction(*state, r);
    const auto pot = hulthen::potentials_at(r, p);
    Json row;
    row["r"] = r;
    row["phi"] = phi;
    row["phi_sq"] = phi * phi;
    row["mass"] = hulthen::mass_at(r, p);
    row["V_v"] = pot.vector;
    row["V_s"] = pot.scalar;
    t.rows.push_back(std::move(row));
  }
  const auto format = s.format_set ? parse_format(s.format) : Format::csv;
  if (format == Format::json) {
    Json doc;
    doc["n"] = qn.n;
    doc["l"] = qn.l;
    doc["root"] = std::string(1, root);
    doc["energy"] = E;
    doc["valid"] = valid;
    doc["alpha"] = c.alpha;
    doc["delta_prime"] = c.delta_prime;
    doc["a_closed"] = state->norm_closed();
    doc["a_quad"] = state->norm_quad();
    doc["points"] = t.rows;
    out << doc.dump(2) << '\n';
  } else {
    render(t, format, out);
  }
  return kOk;
}

struct GroupKey {
  double m0, m1, V0, S0, r0;
  int l;
  auto tie() const { return std::tie(m0, m1, V0, S0, r0, l); }
  bool operator<(const GroupKey& o) const { return tie() < o.tie(); }
};

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  if (s.centrifugal != "approximate" && s.centrifugal != "exact") {
    throw UsageError("--centrifugal must be approximate or exact");
  }
  if (!(s.perturb > 0.0)) throw UsageError("--perturb must be positive");
  if (s.samples < 8) throw UsageError("--samples must be at least 8");
  const bool exact = s.centrifugal == "exact";

  std::vector<verify::TabulatedState> states;
  std::vector<verify::TabulatedState> invalid;
  if (s.single) {
    const QuantumNumbers qn{s.n, s.l};
    const auto pair = hulthen::energy_levels(s.model, qn);
    if (pair) {
      for (char root : {'a', 'p'}) {
        const double E = root == 'a' ? pair->e_a : pair->e_p;
        const bool ok = (root == 'a' ? pair->valid_a : pair->valid_p) &&
                        s.model.m0 * s.model.m0 - E * E > 0.0 &&
                        s.model.r0 * std::sqrt(s.model.m0 * s.model.m0 - E * E) > 1e-12;
        (ok ? states : invalid).push_back({s.model, qn, root, E, ok});
      }
    }
    if (states.empty()) {
      err << "error: no sign-valid bound root for " << echo(s.model, qn) << '\n';
      return kFailure;
    }
  } else {
    for (const auto& st : verify::tabulated_states(false)) {
      (st.valid ? states : invalid).push_back(st);
    }
  }

  std::map<GroupKey, std::size_t> group_index;
  std::vector<GroupKey> groups;
  auto key_of = [](const ModelParams& p, int l) { return GroupKey{p.m0, p.m1, p.V0, p.S0, p.r0, l}; };
  for (const auto& st : states) {
    const auto k = key_of(st.params, st.qn.l);
    if (group_index.emplace(k, groups.size()).second) groups.push_back(k);
  }
  for (const auto& st : invalid) {
    const auto k = key_of(st.params, st.qn.l);
    if (group_index.emplace(k, groups.size()).second) groups.push_back(k);
  }

  struct GroupLevels {
    std::vector<oracle::OracleLevel> approx;
    std::vector<oracle::OracleLevel> exact;
  };
  const auto spectra = parallel_map<GroupLevels>(groups.size(), [&](std::size_t i) {
    const auto& g = groups[i];
    const ModelParams p{g.m0, g.m1, g.V0, g.S0, g.r0};
    oracle::ShootingConfig cfg;
    GroupLevels out;
    out.approx = oracle::find_levels(p, g.l, cfg, s.samples);
    if (exact) {
      cfg.mode = oracle::CentrifugalMode::exact;
      out.exact = oracle::find_levels(p, g.l, cfg, s.samples);
    }
    return out;
  });

  verify::Thresholds th;
  th.energy = s.oracle_tol;
  const auto reports = parallel_map<verify::StateReport>(states.size(), [&](std::size_t i) {
    const auto& st = states[i];
    const auto& lv = spectra[group_index.at(key_of(st.params, st.qn.l))];
    return verify::check_state(st.params, st.qn, st.root, st.energy, lv.approx, th, s.perturb,
                               exact ? &lv.exact : nullptr);
  });

  RowTable t;
  t.columns = {"m0",         "m1",          "V0",         "S0",           "r0",
               "n",          "l",           "root",       "e_closed",     "e_oracle",
               "diff",       "nodes",       "residual",   "residual_printed",
               "residual_perturbed",        "nu_residual", "tau_slope",   "norm_error",
               "closed_over_quad"};
  if (exact) t.columns.push_back("e_exact_centrifugal");
  t.columns.push_back("status");
  int failures = 0;
  double max_diff = 0.0, max_res = 0.0, min_pert = INFINITY, max_norm = 0.0;
  for (const auto& r : reports) {
    Json row;
    row["m0"] = r.params.m0;
    row["m1"] = r.params.m1;
    row["V0"] = r.params.V0;
    row["S0"] = r.params.S0;
    row["r0"] = r.params.r0;
    row["n"] = r.qn.n;
    row["l"] = r.qn.l;
    row["root"] = std::string(1, r.root);
    row["e_closed"] = r.e_closed;
    row["e_oracle"] = number_or_null(r.e_oracle);
    row["diff"] = r.e_oracle ? Json(std::abs(*r.e_oracle - r.e_closed)) : Json(nullptr);
    row["nodes"] = r.oracle_nodes;
    row["residual"] = r.residual_derived;
    row["residual_printed"] = r.residual_printed;
    row["residual_perturbed"] = r.residual_perturbed;
    row["nu_residual"] = r.nu_residual;
    row["tau_slope"] = r.tau_slope;
    row["norm_error"] = r.norm_error;
    row["closed_over_quad"] = r.norm_quad > 0.0 ? Json(r.norm_closed / r.norm_quad) : Json(nullptr);
    if (exact) {
      row["e_exact_centrifugal"] = number_or_null(r.e_exact_mode);
    }
    row["status"] = r.pass ? std::string("pass") : "FAIL: " + r.failure;
    t.rows.push_back(std::move(row));
    if (!r.pass) ++failures;
    if (r.e_oracle) max_diff = std::max(max_diff, std::abs(*r.e_oracle - r.e_closed));
    max_res = std::max(max_res, r.residual_derived);
    min_pert = std::min(min_pert, r.residual_perturbed);
    max_norm = std::max(max_norm, r.norm_error);
  }

  t.comments.push_back(fmt::format("verify {} states, {} failed (oracle tol {:g})",
                                   reports.size(), failures, s.oracle_tol));
  t.comments.push_back(fmt::format("max |E_closed - E_oracle| = {:.3e}", max_diff));
  t.comments.push_back(fmt::format("max residual = {:.3e}; min residual at E + {:g} = {:.3e}",
                                   max_res, s.perturb, min_pert));
  t.comments.push_back(fmt::format("max |norm - 1| = {:.3e}", max_norm));
  t.comments.push_back("residual_printed uses the (1-s)^(1+delta') P^(2alpha, 1+2delta') exponents");
  for (const auto& st : invalid) {
    const auto& lv = spectra[group_index.at(key_of(st.params, st.qn.l))].approx;
    const bool found = std::any_of(lv.begin(), lv.end(), [&](const auto& o) {
      return std::abs(o.energy - st.energy) <= 1e-6;
    });
    const double gap = st.params.m0 * st.params.m0 - st.energy * st.energy;
    const bool threshold = st.params.r0 * std::sqrt(std::max(0.0, gap)) <= 1e-12;
    t.comments.push_back(fmt::format("{} root {} E={} ({}): {}",
                                     threshold ? "threshold" : "sign-invalid", st.root,
                                     fixed7(st.energy), echo(st.params, st.qn),
                                     found ? "present in the ODE spectrum"
                                           : "absent from the ODE spectrum"));
  }
  render(t, parse_format(s.format), out);
  return failures == 0 ? kOk : kFailure;
}

int cmd_scan(const Settings& s, std::ostream& out) {
  static const std::vector<std::string> params = {"V0", "S0", "VS", "m1", "r0"};
  if (std::find(params.begin(), params.end(), s.param) == params.end()) {
    throw UsageError("--param must be one of V0, S0, VS, m1, r0");
  }
  if (s.steps < 1) throw UsageError("--steps must be at least 1");
  if (!(s.from != s.to) || !std::isfinite(s.from) || !std::isfinite(s.to)) {
    throw UsageError("scan range must have nonzero length");
  }
  const auto grid = quantum_grid(s);
  std::vector<ModelParams> models;
  for (int i = 0; i <= s.steps; ++i) {
    const double x = s.from + (s.to - s.from) * i / s.steps;
    ModelParams p = s.model;
    if (s.param == "V0" || s.param == "VS") p.V0 = x;
    if (s.param == "S0" || s.param == "VS") p.S0 = x;
    if (s.param == "m1") p.m1 = x;
    if (s.param == "r0") p.r0 = x;
    try {
      p.validate();
    } catch (const Error& e) {
      throw UsageError(fmt::format("scan point {} = {:g} is invalid: {}", s.param, x, e.what()));
    }
    models.push_back(p);
  }

  struct Point {
    std::optional<Level> level;
  };
  const std::size_t count = grid.size() * models.size();
  const auto points = parallel_map<Point>(count, [&](std::size_t i) {
    const auto& qn = grid[i / models.size()];
    const auto& p = models[i % models.size()];
    try {
      return Point{solve_level(p, qn)};
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ComplexDeltaPrime) return Point{};
      throw;
    }
  });

  RowTable t;
  t.columns = {"param", "value", "n",       "l",           "e_a",          "e_p",
               "valid_a", "valid_p", "delta_prime", "discriminant", "event"};
  t.comments.push_back(fmt::format("scan {} from {:g} to {:g} in {} steps; {}", s.param, s.from,
                                   s.to, s.steps, echo(s.model)));
  for (std::size_t q = 0; q < grid.size(); ++q) {
    bool prev = false;
    for (std::size_t i = 0; i < models.size(); ++i) {
      const auto& pt = points[q * models.size() + i];
      const double x = s.from + (s.to - s.from) * static_cast<double>(i) / s.steps;
      Json row;
      row["param"] = s.param;
      row["value"] = x;
      const bool present = pt.level && pt.level->pair;
      if (pt.level) {
        const Json level = level_json(*pt.level);
        for (const auto& [k, v] : level.items()) row[k] = v;
      } else {
        row["n"] = grid[q].n;
        row["l"] = grid[q].l;
        for (const char* k : {"e_a", "e_p", "valid_a", "valid_p", "delta_prime", "discriminant"}) {
          row[k] = nullptr;
        }
      }
      std::string event;
      if (i > 0 && present != prev) event = present ? "appear" : "disappear";
      row["event"] = event;
      prev = present;
      t.rows.push_back(std::move(row));
    }
  }
  render(t, s.format_set ? parse_format(s.format) : Format::csv, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Klein-Gordon bound states for Hulthen potentials with position-dependent mass"};
  app.name("kgsolve");
  app.set_config("--config", "", "key=value configuration file; flags override file values");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  app.add_option("--m0", s.model.m0, "asymptotic mass")->capture_default_str();
  app.add_option("--m1", s.model.m1, "mass-deformation strength")->capture_default_str();
  app.add_option("--V0", s.model.V0, "vector coupling")->capture_default_str();
  app.add_option("--S0", s.model.S0, "scalar coupling")->capture_default_str();
  app.add_option("--r0", s.model.r0, "screening radius")->capture_default_str();
  auto* n_opt = app.add_option("--n", s.n, "single radial index")->check(CLI::NonNegativeNumber);
  auto* l_opt = app.add_option("--l", s.l, "single angular momentum")->check(CLI::NonNegativeNumber);
  app.add_option("--n-min", s.n_min, "lowest n in ranges")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--n-max", s.n_max, "highest n in ranges")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--l-max", s.l_max, "highest l in ranges")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  auto* format_opt = app.add_option("--format", s.format, "output format")
                         ->check(CLI::IsMember({"text", "csv", "json"}))
                         ->capture_default_str();
  app.add_option("--output,-o", s.output, "write output to this path");
  app.add_option("--tol", s.table_tol, "table comparison tolerance")->check(CLI::PositiveNumber);
  app.add_option("--oracle-tol", s.oracle_tol, "oracle energy tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "energy pairs for every (n, l) in range");
  auto* table = app.add_subcommand("table", "reproduce a reference table");
  table->add_option("--id", s.table_id, "I or II")->check(CLI::IsMember({"I", "II", "1", "2"}));
  table->add_option("--source", s.source, "ours, ref32 or ref33_34")
      ->check(CLI::IsMember({"ours", "ref32", "ref33_34", "ref33"}));
  auto* wave = app.add_subcommand("wavefunction", "normalized radial wavefunction profile");
  wave->add_option("--root", s.root, "a, p or auto")->capture_default_str();
  wave->add_option("--points", s.points)->capture_default_str();
  wave->add_option("--r-max", s.r_max)->capture_default_str();
  wave->add_option("--r-min", s.r_min, "first point of the log grid");
  wave->add_option("--grid", s.grid, "uniform or log")->capture_default_str();
  auto* ver = app.add_subcommand("verify", "check closed forms against the ODE oracle");
  ver->add_flag("--single", s.single, "verify the configuration given by the model flags");
  ver->add_option("--centrifugal", s.centrifugal, "approximate or exact")->capture_default_str();
  ver->add_option("--perturb", s.perturb, "energy shift for the residual sanity check")
      ->capture_default_str();
  ver->add_option("--samples", s.samples, "oracle energy samples per (model, l)")
      ->capture_default_str();
  auto* scan = app.add_subcommand("scan", "sweep one parameter");
  scan->add_option("--param", s.param, "V0, S0, VS, m1 or r0")->capture_default_str();
  scan->add_option("--from", s.from)->required();
  scan->add_option("--to", s.to)->required();
  scan->add_option("--steps", s.steps)->capture_default_str();
  for (auto* sub : {spectrum, table, wave, ver, scan}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  s.n_set = n_opt->count() > 0;
  s.l_set = l_opt->count() > 0;
  s.format_set = format_opt->count() > 0;

  try {
    s.model.validate();
    if (s.n_set || s.l_set) QuantumNumbers{s.n, s.l}.validate();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (spectrum->parsed()) code = cmd_spectrum(s, buffer);
    if (table->parsed()) code = cmd_table(s, buffer);
    if (wave->parsed()) code = cmd_wavefunction(s, buffer, err);
    if (ver->parsed()) code = cmd_verify(s, buffer, err);
    if (scan->parsed()) code = cmd_scan(s, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << " (" << echo(s.model) << ")\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }

  if (s.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(s.output, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "error: cannot write " << s.output << '\n';
      return kFailure;
    }
  }
  return code;
}

}  // namespace kgsolve::cli
