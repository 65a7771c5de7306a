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

#include "qdisc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "qdisc/bounds.hpp"
#include "qdisc/circuits.hpp"
#include "qdisc/cli.hpp"
#include "qdisc/errors.hpp"
#include "qdisc/states.hpp"
#include "qdisc/strategies.hpp"

namespace qdisc {
namespace {

using std::numbers::pi;

struct Check {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Regression constants for the Fig. 7 gaps, frozen from the first full run.
constexpr double kFirstLocalGap3 = 3.741284068591e-3;
constexpr double kFirstLocalGap4 = 2.181050773766e-3;
constexpr double kGapRegressionTol = 1e-8;

// --- 1 ----------------------------------------------------------------------
void criterion1(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 1; i <= 9; ++i) {
    const double v = 0.1 * i;
    for (double q : {0.3, 0.5, 0.7}) {
      const StatePair pair = build_example1({v}, q);
      for (int m = 1; m <= 10; ++m) {
        worst = std::max(worst, std::abs(helstrom_example1(v, m, q) - helstrom_general(pair, m)));
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.detail << "max_err=" << sci(worst) << " runtime=" << sci(secs) << "s ";
  c.require(worst <= 1e-10, "max_err <= 1e-10");
  c.require(secs <= 30.0, "runtime <= 30 s");
}

// --- 2 ----------------------------------------------------------------------
void criterion2(Check& c) {
  double worst = 0.0;
  for (int k = 1; k <= 5; ++k) {
    const double alpha = k * pi / 12.0;
    const StatePair pair = build_example2({0.0, alpha}, 0.5);
    const double overlap_sq = std::cos(alpha) * std::cos(alpha);
    for (int m = 1; m <= 10; ++m) {
      worst = std::max(worst, std::abs(helstrom_pure(overlap_sq, m) - helstrom_general(pair, m)));
    }
  }
  c.detail << "max_err=" << sci(worst) << ' ';
  c.require(worst <= 1e-10, "max_err <= 1e-10");
}

// --- 3 ----------------------------------------------------------------------
void criterion3(Check& c) {
  double k1 = 0.0, s1 = 0.0, k2 = 0.0, s2 = 0.0, stat = 0.0;
  for (int i = 1; i <= 10; ++i) {
    const double v = 0.1 * i;
    const ChernoffResult num = chernoff_numeric(build_example1({v}, 0.5));
    k1 = std::max(k1, std::abs(num.kappa - chernoff_example1(v).kappa));
    s1 = std::max(s1, std::abs(num.s_star - 0.5));
    for (int k = 1; k <= 5; ++k) {
      const double alpha = k * pi / 12.0;
      const ChernoffResult n2 = chernoff_numeric(build_example2({v, alpha}, 0.5));
      k2 = std::max(k2, std::abs(n2.kappa - chernoff_example2(v, alpha).kappa));
      s2 = std::max(s2, std::abs(n2.s_star - 0.5));
    }
  }
  for (int i = 1; i <= 9; ++i) {
    const double a = 0.05 * i;
    const ChernoffObjective g(build_example3({0.0, 0.0, a}));
    stat = std::max(stat, std::abs(g.derivative(chernoff_example3_sstar(a))));
  }
  c.detail << "ex1 kappa=" << sci(k1) << " s*=" << sci(s1) << "; ex2 kappa=" << sci(k2)
           << " s*=" << sci(s2) << "; ex3 residual=" << sci(stat) << ' ';
  c.require(k1 <= 1e-8 && k2 <= 1e-8, "kappa within 1e-8");
  c.require(s1 <= 1e-6 && s2 <= 1e-6, "s* within 1e-6 of 1/2");
  c.require(stat <= 1e-7, "stationarity residual <= 1e-7");
}

// --- 4 ----------------------------------------------------------------------
void criterion4(Check& c) {
  double min_gap = 1.0;
  for (int k = 1; k <= 19; ++k) {
    const double alpha = k * pi / 40.0;
    for (int m = 1; m <= 25; ++m) {
      min_gap = std::min(min_gap, diagnostics_pure_example2(alpha, m).one_minus_r);
    }
  }
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> angle(1e-3, pi / 2.0 - 1e-3);
  std::uniform_int_distribution<int> copies(1, 25);
  double worst_form = 0.0;
  double max_rm = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double alpha = angle(rng);
    const int m = copies(rng);
    const double gamma = std::pow(std::cos(alpha), 2.0 * m);
    const double closed = (1.0 - std::sqrt(1.0 - gamma)) / gamma;
    const double stable = 1.0 / (1.0 + std::sqrt(1.0 - gamma));
    const double rm = std::exp(m * std::log(diagnostics_pure_example2(alpha, m).r));
    worst_form = std::max(worst_form, std::abs(rm - stable) / stable);
    if (gamma > 1e-4) worst_form = std::max(worst_form, std::abs(closed - stable) / stable);
    max_rm = std::max(max_rm, stable);
  }
  c.detail << "min(1-R)=" << sci(min_gap) << " max R^M=" << sci(max_rm)
           << " closed-form rel_err=" << sci(worst_form) << ' ';
  c.require(min_gap > 0.0, "1 - R(M) > 0");
  c.require(max_rm < 1.0, "R(M)^M < 1");
  c.require(worst_form <= 1e-9, "R(M)^M matches (1 - sqrt(1 - gamma)) / gamma");
}

// --- 5 ----------------------------------------------------------------------
void criterion5(Check& c) {
  int count = 0;
  double max_log_r = -std::numeric_limits<double>::infinity();
  auto take = [&](const ExponentReport& r) {
    ++count;
    if (!r.undefined_at_zero) max_log_r = std::max(max_log_r, std::log(r.r));
    const double root = std::exp(r.log_helstrom / r.m);
    if (root > r.kappa + 1e-12) throw BoundViolation("P_H^(1/M) exceeds kappa");
  };
  for (int i = 1; i <= 9; ++i) {
    for (double q : {0.3, 0.5, 0.7}) {
      const StatePair pair = build_example1({0.1 * i}, q);
      for (int m = 1; m <= 10; ++m) take(diagnostics(pair, m));
      for (int m = 11; m <= 30; ++m) take(diagnostics_example1(0.1 * i, m, q));
    }
  }
  for (int k = 1; k <= 5; ++k) {
    for (int m = 1; m <= 25; ++m) take(diagnostics_pure_example2(k * pi / 12.0, m));
    for (double v : {0.05, 0.25, 0.6}) {
      const StatePair pair = build_example2({v, k * pi / 12.0}, 0.5);
      for (int m = 1; m <= 8; ++m) take(diagnostics(pair, m));
    }
  }
  for (int i = 1; i <= 9; ++i) {
    const StatePair pair = build_example3({0.0, 0.0, 0.05 * i});
    for (int m = 1; m <= 8; ++m) take(diagnostics(pair, m));
  }
  c.detail << "instances=" << count << " max log R=" << sci(max_log_r) << ' ';
  c.require(max_log_r <= 1e-12, "R(M) <= 1");
}

// --- 6 ----------------------------------------------------------------------
void criterion6(Check& c) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double v = i / 19.0;
      const double alpha = j * (pi / 2.0) / 19.0;
      const StatePair pair = build_example2({v, alpha}, 0.5);
      worst = std::max(worst,
                       std::abs(locc_appendixF(v, alpha).error_probability - helstrom_general(pair, 2)));
    }
  }
  double worst_opt = 0.0;
  for (double v : {0.1, 0.3, 0.6, 0.9}) {
    for (int k = 1; k <= 5; ++k) {
      const StatePair pair = build_example2({v, k * pi / 12.0}, 0.5);
      worst_opt = std::max(worst_opt, std::abs(optimize_first_local(pair, 2).result.error_probability -
                                               helstrom_general(pair, 2)));
    }
  }
  c.detail << "grid max_err=" << sci(worst) << " first-local max_err=" << sci(worst_opt) << ' ';
  c.require(worst <= 1e-10, "LOCC equals P_H(2) within 1e-10");
  c.require(worst_opt <= 1e-8, "optimized first-local attains P_H(2) within 1e-8");
}

// --- 7 ----------------------------------------------------------------------
void criterion7(Check& c) {
  const StatePair pair = build_example2({0.1, pi / 4.0}, 0.5);
  const double gap3 = optimize_first_local(pair, 3).result.error_probability - helstrom_general(pair, 3);
  const double gap4 = optimize_first_local(pair, 4).result.error_probability - helstrom_general(pair, 4);
  c.detail << "gap3=" << sci(gap3) << " gap4=" << sci(gap4) << ' ';
  c.require(gap3 >= 1e-5 && gap4 >= 1e-5, "gaps >= 1e-5");
  c.require(std::abs(gap3 - kFirstLocalGap3) <= kGapRegressionTol &&
                std::abs(gap4 - kFirstLocalGap4) <= kGapRegressionTol,
            "gaps match frozen regression values");
}

// --- 8 ----------------------------------------------------------------------
void criterion8(Check& c) {
  const StatePair pair = build_example2({0.1, pi / 4.0}, 0.5);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i <= 720; ++i) {
    const double e = strategy_helstrom_then_angle(pair, 4, pi * i / 720.0).error_probability;
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  c.detail << "spread=" << sci(hi - lo) << ' ';
  c.require(hi - lo <= 1e-12, "final-angle spread <= 1e-12");
}

// --- 9 ----------------------------------------------------------------------
void criterion9(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const StatePair pair = build_example2({0.1, pi / 4.0}, 0.5);
  const OptimizerConfig config{};
  double value[4] = {};
  for (int n_final = 3; n_final >= 1; --n_final) {
    const CircuitAnsatz ansatz = build_brickwork(4 - n_final, 6);
    value[n_final] = optimize_split_strategy(pair, 4, n_final, ansatz, config).result.error_probability;
  }
  const double ph = helstrom_general(pair, 4);
  const StatePair pure = build_example2({0.0, pi / 4.0}, 0.5);
  const double locc_gap = std::abs(locc_adaptive(pure, 4).error_probability - helstrom_general(pure, 4));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  constexpr double slack = 2e-5;
  c.detail << "P_H=" << sci(ph) << " P13=" << sci(value[3]) << " P22=" << sci(value[2])
           << " P31=" << sci(value[1]) << " pure LOCC gap=" << sci(locc_gap)
           << " runtime=" << sci(secs) << "s ";
  c.require(value[3] >= ph + 1e-4 - slack, "P_H + 1e-4 <= P13");
  c.require(value[3] <= value[2] + slack, "P13 <= P22");
  c.require(value[2] <= value[1] + slack, "P22 <= P31");
  c.require(locc_gap <= 1e-5, "pure LOCC equals P_H(4) within 1e-5");
  c.require(secs <= 600.0, "runtime <= 10 min");
}

// --- 10 ---------------------------------------------------------------------
void criterion10(Check& c) {
  const StatePair pair = build_example1({0.8}, 0.5);
  const double chernoff = -std::log(chernoff_example1(0.8).kappa);
  double rel = 0.0;
  for (int m = 1; m <= 3; ++m) {
    const MajorityVoteReport r = majority_vote(pair, m, 10000);
    c.detail << "M=" << m << " exact=" << sci(r.exact_exponent) << " bound="
             << sci(r.exponent_lower_bound) << "; ";
    c.require(r.exact_exponent >= r.exponent_lower_bound, "exact exponent >= bound");
    if (m == 1) rel = std::abs(r.exact_exponent - chernoff) / chernoff;
  }
  c.detail << "M=1 rel_dev=" << sci(rel) << ' ';
  c.require(rel <= 0.05, "M=1 exponent within 5% of -log kappa");
}

// --- 11 ---------------------------------------------------------------------
DensityMatrix random_qubit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double z = 2.0 * u(rng) - 1.0;
  const double phi = 2.0 * pi * u(rng);
  const double r = std::cbrt(u(rng));
  const double s = std::sqrt(1.0 - z * z);
  const ComplexMatrix rho = 0.5 * (identity(2) + r * (s * std::cos(phi) * pauli_x() +
                                                      s * std::sin(phi) * pauli_y() + z * pauli_z()));
  return DensityMatrix(rho);
}

void criterion11(Check& c) {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> prior(0.1, 0.9);
  int accepted = 0, rejected = 0, total = 0;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const StatePair pair{random_qubit(rng), random_qubit(rng), prior(rng)};
    for (int m = 1; m <= 3; ++m) {
      ++total;
      const TwoOutcomePovm povm = helstrom_povm(pair, m);
      const OptimalityReport good = check_optimality(povm, pair, m);
      worst = std::max({worst, good.commutator_residual, good.positivity_residual});
      accepted += good.optimal;
      rejected += !check_optimality({povm.guess_second, povm.guess_first}, pair, m).optimal;
    }
  }
  c.detail << "accepted=" << accepted << "/" << total << " rejected_inverted=" << rejected << "/"
           << total << " max_residual=" << sci(worst) << ' ';
  c.require(accepted == total, "Helstrom projectors accepted");
  c.require(rejected == total, "inverted POVMs rejected");
}

// --- 12 ---------------------------------------------------------------------
void criterion12(Check& c) {
  const double thetas[3] = {1e-4, 2e-4, 4e-4};
  double gap[3][7] = {};
  for (int t = 0; t < 3; ++t) {
    for (int m = 1; m <= 6; ++m) {
      gap[t][m] = metrology_approx_gap({thetas[t], thetas[t], thetas[t]}, m);
    }
  }
  double fitted = 0.0;
  for (int m = 1; m <= 6; ++m) fitted = std::max(fitted, gap[2][m] / (thetas[2] * thetas[2]));
  const double constant = 1.1 * fitted;
  double worst_ratio = std::numeric_limits<double>::infinity();
  bool within = true;
  for (int m = 1; m <= 6; ++m) {
    for (int t = 0; t < 3; ++t) within = within && gap[t][m] <= constant * thetas[t] * thetas[t];
    if (m >= 2) {
      worst_ratio = std::min({worst_ratio, gap[1][m] / gap[0][m], gap[2][m] / gap[1][m]});
    }
  }
  c.detail << "C=" << sci(constant) << " min_halving_ratio=" << sci(worst_ratio)
           << " M=1 gap=" << sci(gap[2][1]) << ' ';
  c.require(within, "gap <= C theta^2");
  c.require(worst_ratio >= 3.5, "halving theta reduces the gap by >= 3.5x");
}

// --- 13 ---------------------------------------------------------------------
std::string run_capture(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str() + err.str();
}

void criterion13(Check& c) {
  const std::vector<std::string> opt = {"circuit-opt", "--M", "4", "--final", "1", "--layers",
                                        "6", "--hops", "4", "--iters", "200", "--seed", "42",
                                        "--format", "csv"};
  int code1 = 0, code2 = 0;
  const std::string first = run_capture(opt, code1);
  const std::string second = run_capture(opt, code2);
  c.require(code1 == 0 && code2 == 0, "circuit-opt exits 0");
  c.require(first == second, "circuit-opt output identical across runs");

  std::vector<std::string> sweep = {"sweep", "--family", "example2", "--v", "0.05,0.25,0.6",
                                    "--alpha", "0.6283185307179586,0.7853981633974483",
                                    "--M-min", "1", "--M-max", "6", "--outputs",
                                    "helstrom,chernoff,R,epsilon", "--format", "csv",
                                    "--threads"};
  sweep.push_back("1");
  int code3 = 0, code4 = 0;
  const std::string serial = run_capture(sweep, code3);
  sweep.back() = "4";
  const std::string parallel = run_capture(sweep, code4);
  c.require(code3 == 0 && code4 == 0, "sweep exits 0");
  c.require(serial == parallel, "sweep output independent of thread count");
  c.detail << "circuit-opt bytes=" << first.size() << " sweep bytes=" << serial.size() << ' ';
}

struct Criterion {
  int id;
  const char* title;
  void (*run)(Check&);
};

const Criterion kCriteria[kCriterionCount] = {
    {1, "analytic vs numeric Helstrom (Example 1)", criterion1},
    {2, "pure-state Helstrom closed form", criterion2},
    {3, "Chernoff closed forms and stationarity", criterion3},
    {4, "pure-state ratio stays below one", criterion4},
    {5, "P_H^(1/M) <= kappa and R <= 1 everywhere", criterion5},
    {6, "two-copy LOCC saturates P_H(2)", criterion6},
    {7, "first-local gaps at M = 3, 4", criterion7},
    {8, "final-angle flatness of P4_H(3),1", criterion8},
    {9, "circuit strategy ordering at M = 4", criterion9},
    {10, "majority-vote exponents", criterion10},
    {11, "POVM optimality conditions", criterion11},
    {12, "metrology approximation is second order", criterion12},
    {13, "determinism of circuit-opt and sweep", criterion13},
};

}  // namespace

std::vector<CriterionOutcome> run_acceptance(const std::vector<int>& only) {
  std::vector<CriterionOutcome> outcomes;
  for (const Criterion& crit : kCriteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), crit.id) == only.end()) continue;
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      crit.run(check);
    } catch (const std::exception& e) {
      check.passed = false;
      check.detail << "[exception: " << e.what() << "] ";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string detail = check.detail.str();
    if (!detail.empty() && detail.back() == ' ') detail.pop_back();
    outcomes.push_back({crit.id, crit.title, check.passed, detail, secs});
  }
  return outcomes;
}

void print_acceptance(std::ostream& os, const std::vector<CriterionOutcome>& outcomes) {
  int passed = 0;
  for (const CriterionOutcome& o : outcomes) {
    char head[96];
    std::snprintf(head, sizeof head, "%s %2d  %-44s %8.2fs  ", o.passed ? "PASS" : "FAIL", o.id,
                  o.title.c_str(), o.seconds);
    os << head << o.detail << '\n';
    passed += o.passed;
  }
  os << passed << "/" << outcomes.size() << " criteria passed\n";
}

bool all_passed(const std::vector<CriterionOutcome>& outcomes) {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const CriterionOutcome& o) { return o.passed; });
}

}  // namespace qdisc
