// Copyright 2026 The qdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdisc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "qdisc/bounds.hpp"
#include "qdisc/circuits.hpp"
#include "qdisc/errors.hpp"
#include "qdisc/figures.hpp"
#include "qdisc/report.hpp"
#include "qdisc/states.hpp"
#include "qdisc/strategies.hpp"
#include "qdisc/verify.hpp"

namespace qdisc {
namespace {

using std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kSweepLoccMaxCopies = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) { return format_number(x); }
std::string num(int x) { return std::to_string(x); }
std::string num(std::int64_t x) { return std::to_string(x); }

std::string join(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + format_exact(xs[i]);
  return s;
}

// ---------------------------------------------------------------------------
// State selection shared by most commands.

struct StateOptions {
  std::string family = "example1";
  double v = 0.5;
  double alpha = pi / 4.0;
  double theta = 0.01;
  double q = 0.5;
  CLI::Option* alpha_deg = nullptr;
  double alpha_deg_value = 45.0;
};

const std::vector<std::string> kFamilies = {"example1", "example2", "example3", "pure"};

void add_state_options(CLI::App* cmd, StateOptions& s) {
  cmd->add_option("--family", s.family, "State family")
      ->check(CLI::IsMember(kFamilies))
      ->capture_default_str();
  cmd->add_option("--v", s.v, "Mixing parameter in [0, 1]")->capture_default_str();
  auto* alpha = cmd->add_option("--alpha", s.alpha, "Half-angle between the states (radians)")
                    ->capture_default_str();
  s.alpha_deg = cmd->add_option("--alpha-deg", s.alpha_deg_value, "Same as --alpha, in degrees");
  s.alpha_deg->excludes(alpha);
  cmd->add_option("--theta", s.theta, "Perturbation along z for example3")->capture_default_str();
  cmd->add_option("--q", s.q, "Prior probability of rho_+")->capture_default_str();
}

void resolve_alpha(StateOptions& s) {
  if (s.alpha_deg && s.alpha_deg->count() > 0) s.alpha = s.alpha_deg_value * pi / 180.0;
}

StatePair make_pair(const std::string& family, double v, double alpha, double theta, double q) {
  if (family == "example1") return build_example1({v}, q);
  if (family == "example2") return build_example2({v, alpha}, q);
  if (family == "example3") return build_example3({0.0, 0.0, theta}, q);
  return build_example2({0.0, alpha}, q);
}

StatePair make_pair(const StateOptions& s) { return make_pair(s.family, s.v, s.alpha, s.theta, s.q); }

void echo_state(ConfigEcho& echo, const StateOptions& s) {
  echo.emplace_back("family", s.family);
  if (s.family == "example1" || s.family == "example2") echo.emplace_back("v", format_exact(s.v));
  if (s.family == "example2" || s.family == "pure") echo.emplace_back("alpha", format_exact(s.alpha));
  if (s.family == "example3") echo.emplace_back("theta", format_exact(s.theta));
  echo.emplace_back("q", format_exact(s.q));
}

ExponentReport report_for(const std::string& family, double v, double alpha, double theta,
                          double q, int m) {
  if (family == "example1") return diagnostics_example1(v, m, q);
  if (family == "pure" && q == 0.5) return diagnostics_pure_example2(alpha, m);
  return diagnostics(make_pair(family, v, alpha, theta, q), m);
}

// ---------------------------------------------------------------------------
// Output plumbing.

struct OutputOptions {
  std::string format = "auto";
  std::string path;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"auto", "table", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", o.path, "Write to this file instead of standard output");
}

std::vector<std::string> header_comments(const std::string& command, const ConfigEcho& echo) {
  std::vector<std::string> c{std::string("# qdisc ") + kToolVersion,
                             "# command = " + command};
  for (const std::string& line : echo_lines(echo)) c.push_back(line);
  return c;
}

void emit(const Table& table, const std::vector<std::string>& comments, const OutputOptions& o,
          std::ostream& out) {
  const bool csv = o.format == "csv" || (o.format == "auto" && !o.path.empty());
  std::ofstream file;
  std::ostream* os = &out;
  if (!o.path.empty()) {
    file.open(o.path);
    if (!file) throw UsageError("cannot open output file " + o.path);
    os = &file;
  }
  if (csv) {
    table.write_csv(*os, comments);
  } else {
    table.write_text(*os, comments);
  }
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsArgs {
  StateOptions state;
  int m = 1;
  OutputOptions output;
};

void cmd_bounds(BoundsArgs& a, std::ostream& out) {
  resolve_alpha(a.state);
  const ExponentReport r = report_for(a.state.family, a.state.v, a.state.alpha, a.state.theta,
                                      a.state.q, a.m);
  ConfigEcho echo;
  echo_state(echo, a.state);
  echo.emplace_back("M", num(a.m));
  Table t({"M", "helstrom", "kappa", "s_star", "R", "epsilon_M", "epsilon_prime_M",
           "one_minus_R"});
  t.add_row({num(r.m), num(r.helstrom), num(r.kappa), num(r.s_star), num(r.r), num(r.epsilon_m),
             num(r.epsilon_prime_m), num(r.one_minus_r)});
  emit(t, header_comments("bounds", echo), a.output, out);
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::string family = "example1";
  std::vector<double> v{0.5};
  std::vector<double> alpha{pi / 4.0};
  std::vector<double> theta{0.01};
  std::vector<double> q{0.5};
  int m_min = 1;
  int m_max = 10;
  std::vector<std::string> outputs{"helstrom", "chernoff", "R"};
  unsigned threads = 0;
  OutputOptions output;
};

const std::vector<std::string> kSweepOutputs = {"helstrom", "chernoff", "R",
                                                "delta", "epsilon", "strategies"};

struct SweepPoint {
  double v, alpha, theta, q;
  int m;
};

bool wants(const SweepArgs& a, const std::string& what) {
  return std::find(a.outputs.begin(), a.outputs.end(), what) != a.outputs.end();
}

std::vector<std::string> sweep_header(const SweepArgs& a) {
  std::vector<std::string> h;
  if (a.family == "example1" || a.family == "example2") h.push_back("v");
  if (a.family == "example2" || a.family == "pure") h.push_back("alpha");
  if (a.family == "example3") h.push_back("theta");
  h.insert(h.end(), {"q", "M"});
  if (wants(a, "helstrom")) h.push_back("helstrom");
  if (wants(a, "chernoff")) h.insert(h.end(), {"kappa", "s_star"});
  if (wants(a, "R")) h.insert(h.end(), {"R", "one_minus_R"});
  if (wants(a, "delta")) h.push_back("delta_M_plus_2");
  if (wants(a, "epsilon")) h.insert(h.end(), {"epsilon_M", "epsilon_prime_M", "R_epsilon"});
  if (wants(a, "strategies")) h.insert(h.end(), {"P_first_local", "P_LOCC"});
  return h;
}

std::vector<std::string> sweep_row(const SweepArgs& a, const SweepPoint& p) {
  std::vector<std::string> row;
  if (a.family == "example1" || a.family == "example2") row.push_back(num(p.v));
  if (a.family == "example2" || a.family == "pure") row.push_back(num(p.alpha));
  if (a.family == "example3") row.push_back(num(p.theta));
  row.insert(row.end(), {num(p.q), num(p.m)});
  const ExponentReport r = report_for(a.family, p.v, p.alpha, p.theta, p.q, p.m);
  if (wants(a, "helstrom")) row.push_back(num(r.helstrom));
  if (wants(a, "chernoff")) row.insert(row.end(), {num(r.kappa), num(r.s_star)});
  if (wants(a, "R")) row.insert(row.end(), {num(r.r), num(r.one_minus_r)});
  if (wants(a, "delta")) {
    const ExponentReport r2 = report_for(a.family, p.v, p.alpha, p.theta, p.q, p.m + 2);
    row.push_back(num(delta(r2, r)));
  }
  if (wants(a, "epsilon")) {
    row.insert(row.end(), {num(r.epsilon_m), num(r.epsilon_prime_m), num(r.r_epsilon)});
  }
  if (wants(a, "strategies")) {
    const StatePair pair = make_pair(a.family, p.v, p.alpha, p.theta, p.q);
    const double first = p.m >= 2 ? optimize_first_local(pair, p.m).result.error_probability : kNaN;
    const double locc =
        p.m <= kSweepLoccMaxCopies ? locc_adaptive(pair, p.m).error_probability : kNaN;
    row.insert(row.end(), {num(first), num(locc)});
  }
  return row;
}

void cmd_sweep(SweepArgs& a, std::ostream& out) {
  if (a.m_min < 1 || a.m_max < a.m_min) throw UsageError("need 1 <= --M-min <= --M-max");
  const bool uses_v = a.family == "example1" || a.family == "example2";
  const bool uses_alpha = a.family == "example2" || a.family == "pure";
  const bool uses_theta = a.family == "example3";
  const std::vector<double> none{kNaN};
  std::vector<SweepPoint> points;
  for (double v : uses_v ? a.v : none) {
    for (double alpha : uses_alpha ? a.alpha : none) {
      for (double theta : uses_theta ? a.theta : none) {
        for (double q : a.q) {
          for (int m = a.m_min; m <= a.m_max; ++m) points.push_back({v, alpha, theta, q, m});
        }
      }
    }
  }

  std::vector<std::vector<std::string>> rows(points.size());
  std::vector<std::exception_ptr> failures(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        rows[i] = sweep_row(a, points[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const unsigned n_threads =
      std::max(1u, a.threads ? a.threads : std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  Table t(sweep_header(a));
  for (auto& r : rows) t.add_row(std::move(r));
  ConfigEcho echo{{"family", a.family}};
  if (uses_v) echo.emplace_back("v", join(a.v));
  if (uses_alpha) echo.emplace_back("alpha", join(a.alpha));
  if (uses_theta) echo.emplace_back("theta", join(a.theta));
  echo.emplace_back("q", join(a.q));
  echo.emplace_back("M", num(a.m_min) + ".." + num(a.m_max));
  std::string outs;
  for (const auto& o : a.outputs) outs += (outs.empty() ? "" : " ") + o;
  echo.emplace_back("outputs", outs);
  emit(t, header_comments("sweep", echo), a.output, out);
}

// ---------------------------------------------------------------------------
// strategy

struct StrategyArgs {
  StateOptions state;
  std::string kind = "locc";
  int m = 2;
  double phi = pi / 4.0;
  std::int64_t n_total = 10000;
  bool branches = false;
  OutputOptions output;
};

const std::vector<std::string> kStrategyKinds = {
    "helstrom", "first-local", "first-local-opt", "helstrom-then-local",
    "helstrom-then-angle", "locc", "appendixF", "majority-vote"};

void cmd_strategy(StrategyArgs& a, std::ostream& out) {
  resolve_alpha(a.state);
  const StatePair pair = make_pair(a.state);
  ConfigEcho echo;
  echo_state(echo, a.state);
  echo.emplace_back("kind", a.kind);
  echo.emplace_back("M", num(a.m));

  if (a.kind == "majority-vote") {
    echo.emplace_back("n_total", num(a.n_total));
    const MajorityVoteReport r = majority_vote(pair, a.m, a.n_total);
    Table t({"M", "n_total", "n_blocks", "helstrom", "exact_error", "exact_exponent",
             "exponent_lower_bound", "chernoff_exponent"});
    t.add_row({num(r.m), num(r.n_total), num(r.n_blocks), num(r.helstrom), num(r.exact_error),
               num(r.exact_exponent), num(r.exponent_lower_bound),
               num(-std::log(chernoff_numeric(pair).kappa))});
    emit(t, header_comments("strategy", echo), a.output, out);
    return;
  }

  StrategyResult res;
  double phi = kNaN;
  if (a.kind == "helstrom") {
    res = evaluate_split_strategy(pair, a.m, a.m, CircuitAnsatz{}, {});
  } else if (a.kind == "first-local") {
    phi = a.phi;
    res = strategy_first_local(pair, a.m, ProjectiveQubitMeasurement{phi});
  } else if (a.kind == "first-local-opt") {
    FirstLocalOptimum best = optimize_first_local(pair, a.m);
    phi = best.phi_star;
    res = std::move(best.result);
  } else if (a.kind == "helstrom-then-local") {
    res = strategy_helstrom_then_local(pair, a.m);
  } else if (a.kind == "helstrom-then-angle") {
    phi = a.phi;
    res = strategy_helstrom_then_angle(pair, a.m, phi);
  } else if (a.kind == "locc") {
    res = locc_adaptive(pair, a.m);
  } else {
    if (a.state.family != "example2" || a.state.q != 0.5 || a.m != 2) {
      throw UsageError("appendixF needs --family example2, --q 0.5 and --M 2");
    }
    phi = pi / 4.0;
    res = locc_appendixF(a.state.v, a.state.alpha);
  }
  if (!std::isnan(phi)) echo.emplace_back("phi", format_exact(phi));

  const double ph = helstrom_general(pair, a.m);
  if (a.branches) {
    Table t({"label", "probability", "posterior", "error"});
    for (const Branch& b : res.branches) {
      t.add_row({b.label.empty() ? "-" : b.label, num(b.probability), num(b.posterior),
                 num(b.error)});
    }
    emit(t, header_comments("strategy", echo), a.output, out);
    return;
  }
  Table t({"kind", "M", "phi", "error", "P_minus_given_plus", "P_plus_given_minus", "P_H",
           "gap"});
  t.add_row({a.kind, num(a.m), num(phi), num(res.error_probability), num(res.p_minus_given_plus),
             num(res.p_plus_given_minus), num(ph), num(res.error_probability - ph)});
  emit(t, header_comments("strategy", echo), a.output, out);
}

// ---------------------------------------------------------------------------
// circuit-opt

struct CircuitArgs {
  StateOptions state;
  int m = 4;
  int n_final = 1;
  int layers = 6;
  OptimizerConfig config;
  std::string trace_path;
  OutputOptions output;
};

void cmd_circuit_opt(CircuitArgs& a, std::ostream& out) {
  resolve_alpha(a.state);
  if (a.n_final < 1 || a.n_final > a.m) throw UsageError("need 1 <= --final <= --M");
  const StatePair pair = make_pair(a.state);
  const CircuitAnsatz ansatz = build_brickwork(std::max(a.m - a.n_final, 1), a.layers);
  const SplitOptimum best = optimize_split_strategy(pair, a.m, a.n_final, ansatz, a.config);
  const double ph = helstrom_general(pair, a.m);

  ConfigEcho echo;
  echo_state(echo, a.state);
  echo.emplace_back("M", num(a.m));
  echo.emplace_back("final", num(a.n_final));
  echo.emplace_back("layers", num(ansatz.n_cnot_layers));
  echo.emplace_back("hops", num(a.config.hops));
  echo.emplace_back("iters", num(a.config.max_iters_per_hop));
  echo.emplace_back("seed", std::to_string(a.config.seed));
  echo.emplace_back("scale", format_exact(a.config.perturbation_scale));
  echo.emplace_back("tol", format_exact(a.config.convergence_tol));
  std::vector<std::string> comments = header_comments("circuit-opt", echo);
  comments.push_back("# best_angles = " + join(best.angles));

  Table t({"M", "n_first", "n_final", "layers", "error", "P_H", "gap"});
  t.add_row({num(a.m), num(a.m - a.n_final), num(a.n_final), num(ansatz.n_cnot_layers),
             num(best.result.error_probability), num(ph), num(best.result.error_probability - ph)});
  emit(t, comments, a.output, out);

  if (!a.trace_path.empty()) {
    std::ofstream file(a.trace_path);
    if (!file) throw UsageError("cannot open trace file " + a.trace_path);
    for (const std::string& c : header_comments("circuit-opt", echo)) file << c << '\n';
    write_trace_csv(file, best.trace);
  }
}

// ---------------------------------------------------------------------------
// figure

struct FigureArgs {
  int figure = 2;
  FigureOptions options;
  std::string path;
};

void cmd_figure(FigureArgs& a, std::ostream& out) {
  const FigureData fd = figure_data(a.figure, a.options);
  ConfigEcho echo{{"figure", num(a.figure)}};
  if (a.figure == 3) echo.emplace_back("n_total", num(a.options.n_total));
  if (a.figure == 7) echo.emplace_back("phi_points", num(a.options.phi_points));
  if (a.figure == 8) {
    echo.emplace_back("max_copies", num(a.options.max_copies));
    echo.emplace_back("layers", num(a.options.cnot_layers));
    echo.emplace_back("hops", num(a.options.optimizer.hops));
    echo.emplace_back("iters", num(a.options.optimizer.max_iters_per_hop));
    echo.emplace_back("seed", std::to_string(a.options.optimizer.seed));
  }
  std::vector<std::string> comments = header_comments("figure", echo);
  for (const std::string& n : fd.notes) comments.push_back("# " + n);
  emit(fd.table, comments, OutputOptions{"csv", a.path}, out);
}

// ---------------------------------------------------------------------------

bool is_usage_error(const Error& e) {
  return dynamic_cast<const DomainError*>(&e) || dynamic_cast<const AngleCountMismatch*>(&e) ||
         dynamic_cast<const DimensionCapExceeded*>(&e) ||
         dynamic_cast<const DepthCapExceeded*>(&e) || dynamic_cast<const NotPSD*>(&e);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-copy quantum state discrimination: bounds, strategies and circuits",
               "qdisc"};
  app.set_version_flag("--version", kToolVersion);
  app.set_config("--config", "", "TOML file mirroring the flags; flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  BoundsArgs bounds;
  auto* c_bounds = app.add_subcommand("bounds", "Helstrom and Chernoff bounds at one point");
  add_state_options(c_bounds, bounds.state);
  c_bounds->add_option("--M", bounds.m, "Number of copies")->check(CLI::PositiveNumber);
  add_output_options(c_bounds, bounds.output);

  SweepArgs sweep;
  auto* c_sweep = app.add_subcommand("sweep", "Bounds over parameter grids");
  c_sweep->add_option("--family", sweep.family)->check(CLI::IsMember(kFamilies))->capture_default_str();
  c_sweep->add_option("--v", sweep.v, "List of v values")->delimiter(',');
  c_sweep->add_option("--alpha", sweep.alpha, "List of alpha values (radians)")->delimiter(',');
  c_sweep->add_option("--theta", sweep.theta, "List of theta values")->delimiter(',');
  c_sweep->add_option("--q", sweep.q, "List of priors")->delimiter(',');
  c_sweep->add_option("--M-min", sweep.m_min)->capture_default_str();
  c_sweep->add_option("--M-max", sweep.m_max)->capture_default_str();
  c_sweep->add_option("--outputs", sweep.outputs, "Quantities to report")
      ->delimiter(',')
      ->check(CLI::IsMember(kSweepOutputs));
  c_sweep->add_option("--threads", sweep.threads, "Worker threads (0: all cores)");
  add_output_options(c_sweep, sweep.output);

  StrategyArgs strategy;
  auto* c_strategy = app.add_subcommand("strategy", "Restricted measurement strategies");
  add_state_options(c_strategy, strategy.state);
  c_strategy->add_option("--kind", strategy.kind)
      ->check(CLI::IsMember(kStrategyKinds))
      ->capture_default_str();
  c_strategy->add_option("--M", strategy.m)->check(CLI::PositiveNumber)->capture_default_str();
  c_strategy->add_option("--phi", strategy.phi, "Single-qubit measurement angle")
      ->capture_default_str();
  c_strategy->add_option("--n-total", strategy.n_total, "Copy budget for majority-vote")
      ->capture_default_str();
  c_strategy->add_flag("--branches", strategy.branches, "List outcome branches");
  add_output_options(c_strategy, strategy.output);

  CircuitArgs circuit;
  circuit.state.family = "example2";
  circuit.state.v = 0.1;
  auto* c_circuit = app.add_subcommand("circuit-opt", "Optimize a two-stage circuit strategy");
  add_state_options(c_circuit, circuit.state);
  c_circuit->add_option("--M", circuit.m)->check(CLI::PositiveNumber)->capture_default_str();
  c_circuit->add_option("--final", circuit.n_final, "Copies in the final Helstrom stage")
      ->capture_default_str();
  c_circuit->add_option("--layers", circuit.layers, "CNOT layers")->capture_default_str();
  c_circuit->add_option("--hops", circuit.config.hops)->check(CLI::PositiveNumber)->capture_default_str();
  c_circuit->add_option("--iters", circuit.config.max_iters_per_hop)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_circuit->add_option("--seed", circuit.config.seed)->required();
  c_circuit->add_option("--scale", circuit.config.perturbation_scale)->capture_default_str();
  c_circuit->add_option("--tol", circuit.config.convergence_tol)->capture_default_str();
  c_circuit->add_option("--trace", circuit.trace_path, "Write the hop trace as CSV");
  add_output_options(c_circuit, circuit.output);

  FigureArgs figure;
  figure.options.optimizer.seed = 42;
  auto* c_figure = app.add_subcommand("figure", "Emit the data behind a figure as CSV");
  c_figure->add_option("figure", figure.figure, "Figure number")
      ->required()
      ->check(CLI::Range(kFirstFigure, kLastFigure));
  c_figure->add_option("--out", figure.path, "Output file (default: standard output)");
  c_figure->add_option("--n-total", figure.options.n_total)->capture_default_str();
  c_figure->add_option("--max-copies", figure.options.max_copies)->capture_default_str();
  c_figure->add_option("--layers", figure.options.cnot_layers)->capture_default_str();
  c_figure->add_option("--hops", figure.options.optimizer.hops)->capture_default_str();
  c_figure->add_option("--iters", figure.options.optimizer.max_iters_per_hop)->capture_default_str();
  c_figure->add_option("--seed", figure.options.optimizer.seed)->capture_default_str();
  c_figure->add_option("--phi-points", figure.options.phi_points)->capture_default_str();

  std::vector<int> only;
  auto* c_verify = app.add_subcommand("verify", "Run the acceptance suite");
  c_verify->add_option("--only", only, "Criterion numbers to run")
      ->delimiter(',')
      ->check(CLI::Range(1, kCriterionCount));

  std::vector<std::string> argv_store{"qdisc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c_bounds) cmd_bounds(bounds, out);
    if (*c_sweep) cmd_sweep(sweep, out);
    if (*c_strategy) cmd_strategy(strategy, out);
    if (*c_circuit) cmd_circuit_opt(circuit, out);
    if (*c_figure) cmd_figure(figure, out);
    if (*c_verify) {
      const auto outcomes = run_acceptance(only);
      print_acceptance(out, outcomes);
      return all_passed(outcomes) ? kExitOk : kExitVerify;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage_error(e) ? kExitUsage : kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace qdisc
