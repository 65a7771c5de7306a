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

#include "qdisc/figures.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qdisc/bounds.hpp"
#include "qdisc/errors.hpp"
#include "qdisc/states.hpp"
#include "qdisc/strategies.hpp"

namespace qdisc {
namespace {

using std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double x) { return format_number(x); }
std::string num(std::int64_t x) { return std::to_string(x); }
std::string num(int x) { return std::to_string(x); }

const std::vector<double> kExample1V = {0.2, 0.5, 0.8};
constexpr int kExample1MaxM = 30;

FigureData figure2() {
  FigureData fd{{"Example 1 at q = 0.5",
                 "one_minus_R: 1 - R(M)",
                 "delta_M_plus_2: R(M + 2) - R(M)"},
                Table({"v", "M", "one_minus_R", "delta_M_plus_2"})};
  for (double v : kExample1V) {
    for (int m = 1; m <= kExample1MaxM; ++m) {
      const ExponentReport at_m = diagnostics_example1(v, m);
      const ExponentReport at_m2 = diagnostics_example1(v, m + 2);
      fd.table.add_row({num(v), num(m), num(at_m.one_minus_r), num(delta(at_m2, at_m))});
    }
  }
  return fd;
}

FigureData figure3(const FigureOptions& o) {
  FigureData fd{{"Example 1 at v = 0.8, q = 0.5, repeated M-copy Helstrom with majority vote",
                 "panel a: block size M at the full copy budget",
                 "panel b: single-copy blocks at growing copy budgets",
                 "chernoff_exponent: -log kappa"},
                Table({"panel", "M", "n_total", "exact_exponent", "exponent_lower_bound",
                       "chernoff_exponent"})};
  const double v = 0.8;
  const StatePair pair = build_example1({v}, 0.5);
  const double chernoff = -std::log(chernoff_example1(v).kappa);
  for (int m = 1; m <= 10; ++m) {
    const MajorityVoteReport r = majority_vote(pair, m, o.n_total);
    fd.table.add_row({"a", num(m), num(r.n_total), num(r.exact_exponent),
                      num(r.exponent_lower_bound), num(chernoff)});
  }
  for (std::int64_t n = 10; n <= o.n_total; n *= 10) {
    const MajorityVoteReport r = majority_vote(pair, 1, n);
    fd.table.add_row({"b", "1", num(r.n_total), num(r.exact_exponent),
                      num(r.exponent_lower_bound), num(chernoff)});
  }
  return fd;
}

FigureData figure4() {
  FigureData fd{{"pure states cos(alpha)|0> +- sin(alpha)|1> at q = 0.5",
                 "one_minus_R: 1 - R(M)"},
                Table({"alpha", "M", "one_minus_R"})};
  for (int k = 1; k <= 5; ++k) {
    const double alpha = k * pi / 12.0;
    for (int m = 1; m <= 25; ++m) {
      fd.table.add_row({num(alpha), num(m), num(diagnostics_pure_example2(alpha, m).one_minus_r)});
    }
  }
  return fd;
}

FigureData figure5() {
  FigureData fd{{"Example 2 at alpha = pi/5, q = 0.5, exact Helstrom bound",
                 "one_minus_R: 1 - R(M)"},
                Table({"v", "alpha", "M", "one_minus_R"})};
  const double alpha = pi / 5.0;
  for (double v : {0.05, 0.25, 0.6}) {
    const StatePair pair = build_example2({v, alpha}, 0.5);
    for (int m = 1; m <= 10; ++m) {
      fd.table.add_row({num(v), num(alpha), num(m), num(diagnostics(pair, m).one_minus_r)});
    }
  }
  return fd;
}

FigureData figure6() {
  FigureData fd{{"I/2 versus I/2 + theta sigma_z at q = 0.5",
                 "panel a: gap = |approx - exact| over theta",
                 "panel b: one_minus_R_approx = 1 - R(M) with the first-order approximation",
                 "exact values are nan beyond M = 10"},
                Table({"panel", "theta", "M", "helstrom_exact", "helstrom_approx", "gap",
                       "one_minus_R_approx"})};
  auto row = [&fd](const char* panel, double theta, int m) {
    const StatePair pair = build_example3({0.0, 0.0, theta});
    const double approx = helstrom_metrology_approx(theta, m);
    const double exact = m <= 10 ? helstrom_general(pair, m) : kNaN;
    const ChernoffResult c = chernoff_numeric(pair);
    const double log_prior = c.s_star * std::log(0.5) + (1.0 - c.s_star) * std::log(0.5);
    const double log_r = -std::log(c.kappa) + (std::log(approx) - log_prior) / m;
    fd.table.add_row({panel, num(theta), num(m), num(exact), num(approx),
                      num(std::abs(approx - exact)), num(-std::expm1(log_r))});
  };
  for (int e = 0; e <= 12; ++e) {
    const double theta = 1e-4 * std::pow(10.0, e / 4.0);
    for (int m = 1; m <= 6; ++m) row("a", theta, m);
  }
  for (int m = 1; m <= 20; ++m) row("b", 0.01, m);
  return fd;
}

FigureData figure7(const FigureOptions& o) {
  FigureData fd{{"Example 2 at v = 0.1, alpha = pi/4, q = 0.5",
                 "P_first_local: single-copy measurement at phi, then collective Helstrom",
                 "P_helstrom_then_local: (M-1)-copy Helstrom, then single-copy measurement at phi",
                 "P_LOCC and P_H do not depend on phi"},
                Table({"M", "phi", "P_first_local", "P_helstrom_then_local", "P_LOCC", "P_H"})};
  const StatePair pair = build_example2({0.1, pi / 4.0}, 0.5);
  for (int m = 2; m <= 4; ++m) {
    const double locc = locc_adaptive(pair, m).error_probability;
    const double ph = helstrom_general(pair, m);
    for (int i = 0; i < o.phi_points; ++i) {
      const double phi = pi * i / (o.phi_points - 1);
      const ProjectiveQubitMeasurement meas{phi};
      fd.table.add_row({num(m), num(phi),
                        num(strategy_first_local(pair, m, meas).error_probability),
                        num(strategy_helstrom_then_angle(pair, m, phi).error_probability),
                        num(locc), num(ph)});
    }
  }
  return fd;
}

FigureData figure8(const FigureOptions& o) {
  FigureData fd{{"Example 2 at v = 0.1, alpha = pi/4, q = 0.5",
                 "P_split: circuit on n_first copies, then Helstrom on n_final copies"},
                Table({"M", "n_first", "n_final", "P_split", "P_LOCC", "P_H"})};
  const StatePair pair = build_example2({0.1, pi / 4.0}, 0.5);
  for (int m = 2; m <= o.max_copies; ++m) {
    const double locc = locc_adaptive(pair, m).error_probability;
    const double ph = helstrom_general(pair, m);
    for (int n_final = m; n_final >= 1; --n_final) {
      const int n_first = m - n_final;
      const CircuitAnsatz ansatz = build_brickwork(std::max(n_first, 1), o.cnot_layers);
      const SplitOptimum best = optimize_split_strategy(pair, m, n_final, ansatz, o.optimizer);
      fd.table.add_row({num(m), num(n_first), num(n_final), num(best.result.error_probability),
                        num(locc), num(ph)});
    }
  }
  return fd;
}

FigureData figure9() {
  FigureData fd{{"Example 1 at q = 0.5",
                 "R_epsilon: eps'_M / eps_inf",
                 "delta_epsilon_M_plus_2: (eps'_(M+2) - eps'_M) / eps_inf"},
                Table({"v", "M", "R_epsilon", "delta_epsilon_M_plus_2"})};
  for (double v : kExample1V) {
    for (int m = 1; m <= kExample1MaxM; ++m) {
      const ExponentReport at_m = diagnostics_example1(v, m);
      const ExponentReport at_m2 = diagnostics_example1(v, m + 2);
      fd.table.add_row({num(v), num(m), num(at_m.r_epsilon), num(delta_epsilon(at_m2, at_m))});
    }
  }
  return fd;
}

}  // namespace

FigureData figure_data(int figure, const FigureOptions& options) {
  switch (figure) {
    case 2: return figure2();
    case 3: return figure3(options);
    case 4: return figure4();
    case 5: return figure5();
    case 6: return figure6();
    case 7: return figure7(options);
    case 8: return figure8(options);
    case 9: return figure9();
    default:
      throw DomainError("unsupported figure " + std::to_string(figure) + "; choose 2 to 9");
  }
}

}  // namespace qdisc
