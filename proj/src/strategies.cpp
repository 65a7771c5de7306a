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

#include "qdisc/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "qdisc/bounds.hpp"
#include "qdisc/errors.hpp"
#include "qdisc/minimize.hpp"

namespace qdisc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tr[A B] for square matrices.
double trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.cwiseProduct(b.transpose()).sum().real();
}

double dot(const BlochVector& x, const BlochVector& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

void require_copies(int m, int at_least) {
  if (m < at_least) {
    std::ostringstream msg;
    msg << "strategy needs at least " << at_least << " copies, got " << m;
    throw DomainError(msg.str());
  }
}

void require_qubits(const StatePair& pair) {
  if (pair.rho_plus.dim() != 2) throw DomainError("strategy needs single-qubit states");
}

double x_log_x_over_y(double x, double y) { return x == 0.0 ? 0.0 : x * std::log(x / y); }

// Adaptive LOCC on qubits, carried in unnormalized weights a = q Pr[path|+],
// b = (1 - q) Pr[path|-]; the optimal error of the remaining copies is
// homogeneous of degree one in (a, b).
class LoccSolver {
 public:
  LoccSolver(const StatePair& pair, const LoccConfig& config)
      : plus_(bloch_vector(pair.rho_plus)),
        minus_(bloch_vector(pair.rho_minus)),
        q_(pair.prior_q),
        config_(config) {}

  double solve(int k, double a, double b, bool root) const {
    if (k == 1) return leaf_error(a, b);
    if (a <= 0.0 || b <= 0.0) return 0.0;
    return best_angle(k, a, b, root).value;
  }

  void record(int k, double p_plus, double p_minus, const std::string& label, bool root,
              StrategyResult& out) const {
    const double a = q_ * p_plus;
    const double b = (1.0 - q_) * p_minus;
    if (k == 1 || a <= 0.0 || b <= 0.0) {
      record_leaf(k, p_plus, p_minus, label, out);
      return;
    }
    const double phi = best_angle(k, a, b, root).x;
    const BlochVector n = ProjectiveQubitMeasurement{phi}.direction();
    const double tp = 0.5 * (1.0 + dot(plus_, n));
    const double tm = 0.5 * (1.0 + dot(minus_, n));
    record(k - 1, p_plus * tp, p_minus * tm, label + "0", false, out);
    record(k - 1, p_plus * (1.0 - tp), p_minus * (1.0 - tm), label + "1", false, out);
  }

 private:
  Minimum1D best_angle(int k, double a, double b, bool root) const {
    ScanOptions opts;
    opts.scan_points = root ? config_.root_scan_points : config_.inner_scan_points;
    opts.x_tol = config_.phi_tol;
    opts.periodic = true;
    opts.refine_candidates = root ? 2 : 1;
    return scan_and_refine(
        [&](double phi) {
          const BlochVector n = ProjectiveQubitMeasurement{phi}.direction();
          const double tp = 0.5 * (1.0 + dot(plus_, n));
          const double tm = 0.5 * (1.0 + dot(minus_, n));
          return solve(k - 1, a * tp, b * tm, false) +
                 solve(k - 1, a * (1.0 - tp), b * (1.0 - tm), false);
        },
        0.0, std::numbers::pi, opts);
  }

  // 1/2 (a + b - ||a rho_+ - b rho_-||) for qubits.
  double leaf_error(double a, double b) const {
    const double w = norm_w(a, b);
    return 0.5 * (a + b - std::max(std::abs(a - b), w));
  }

  double norm_w(double a, double b) const {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double c = a * plus_[i] - b * minus_[i];
      s += c * c;
    }
    return std::sqrt(s);
  }

  // Remaining copies are ignored once the posterior is certain (k > 1 only then).
  void record_leaf(int k, double p_plus, double p_minus, const std::string& label,
                   StrategyResult& out) const {
    const double a = q_ * p_plus;
    const double b = (1.0 - q_) * p_minus;
    const double prob = a + b;
    if (prob < kZeroBranchTol) {
      out.branches.push_back({label, prob, q_, 0.0});
      return;
    }
    double miss_plus = 0.0;   // Pr[guess - | +] in this branch
    double miss_minus = 0.0;  // Pr[guess + | -]
    BlochVector w{};
    for (int i = 0; i < 3; ++i) w[i] = a * plus_[i] - b * minus_[i];
    const double wn = std::sqrt(dot(w, w));
    if (k > 1 || wn <= std::abs(a - b)) {
      if (a >= b) {
        miss_minus = 1.0;
      } else {
        miss_plus = 1.0;
      }
    } else {
      BlochVector dir{w[0] / wn, w[1] / wn, w[2] / wn};
      miss_plus = 0.5 * (1.0 - dot(plus_, dir));
      miss_minus = 0.5 * (1.0 + dot(minus_, dir));
    }
    const double err = a * miss_plus + b * miss_minus;
    out.branches.push_back({label, prob, a / prob, err / prob});
    out.p_minus_given_plus += p_plus * miss_plus;
    out.p_plus_given_minus += p_minus * miss_minus;
    out.error_probability += err;
  }

  BlochVector plus_;
  BlochVector minus_;
  double q_;
  LoccConfig config_;
};

}  // namespace

ComplexMatrix ProjectiveQubitMeasurement::projector(int outcome) const {
  Eigen::Vector2cd psi;
  if (outcome == 0) {
    psi << std::cos(phi), std::sin(phi);
  } else if (outcome == 1) {
    psi << -std::sin(phi), std::cos(phi);
  } else {
    throw DomainError("qubit measurement outcome must be 0 or 1");
  }
  return psi * psi.adjoint();
}

BlochVector ProjectiveQubitMeasurement::direction() const {
  return {std::sin(2.0 * phi), 0.0, std::cos(2.0 * phi)};
}

void append_helstrom_branch(StrategyResult& out, std::string label, double q, double p_plus,
                            double p_minus, const ComplexMatrix& a, const ComplexMatrix& b) {
  const double prob = q * p_plus + (1.0 - q) * p_minus;
  if (prob < kZeroBranchTol) {
    out.branches.push_back({std::move(label), prob, q, 0.0});
    return;
  }
  const double posterior = std::clamp(q * p_plus / prob, 0.0, 1.0);
  const HelstromMeasurement hm = helstrom_measurement(a, b, posterior);
  out.branches.push_back({std::move(label), prob, posterior, hm.error});
  out.p_minus_given_plus += p_plus * hm.p_minus_given_plus;
  out.p_plus_given_minus += p_minus * hm.p_plus_given_minus;
  out.error_probability += prob * hm.error;
}

double posterior_update(const StatePair& pair, const ProjectiveQubitMeasurement& meas,
                        int outcome) {
  require_qubits(pair);
  const ComplexMatrix proj = meas.projector(outcome);
  const double q = pair.prior_q;
  const double joint_plus = q * trace_product(pair.rho_plus.matrix(), proj);
  const double denom = joint_plus + (1.0 - q) * trace_product(pair.rho_minus.matrix(), proj);
  if (denom < kZeroBranchTol) {
    throw ZeroProbabilityBranch("measurement outcome has zero probability");
  }
  return std::clamp(joint_plus / denom, 0.0, 1.0);
}

StrategyResult strategy_first_local(const StatePair& pair, int m,
                                    const ProjectiveQubitMeasurement& meas,
                                    std::size_t dim_cap) {
  require_qubits(pair);
  require_copies(m, 2);
  const ComplexMatrix a = tensor_power(pair.rho_plus, m - 1, dim_cap).matrix();
  const ComplexMatrix b = tensor_power(pair.rho_minus, m - 1, dim_cap).matrix();
  StrategyResult out;
  for (int outcome = 0; outcome < 2; ++outcome) {
    const ComplexMatrix proj = meas.projector(outcome);
    append_helstrom_branch(out, "D" + std::to_string(outcome), pair.prior_q,
                           trace_product(pair.rho_plus.matrix(), proj),
                           trace_product(pair.rho_minus.matrix(), proj), a, b);
  }
  return out;
}

FirstLocalOptimum optimize_first_local(const StatePair& pair, int m, std::size_t dim_cap) {
  require_qubits(pair);
  require_copies(m, 2);
  const ComplexMatrix a = tensor_power(pair.rho_plus, m - 1, dim_cap).matrix();
  const ComplexMatrix b = tensor_power(pair.rho_minus, m - 1, dim_cap).matrix();
  const double q = pair.prior_q;
  auto objective = [&](double phi) {
    const ProjectiveQubitMeasurement meas{phi};
    double total = 0.0;
    for (int outcome = 0; outcome < 2; ++outcome) {
      const ComplexMatrix proj = meas.projector(outcome);
      const double pp = trace_product(pair.rho_plus.matrix(), proj);
      const double pm = trace_product(pair.rho_minus.matrix(), proj);
      const double prob = q * pp + (1.0 - q) * pm;
      if (prob < kZeroBranchTol) continue;
      total += prob * helstrom_error(a, b, std::clamp(q * pp / prob, 0.0, 1.0));
    }
    return total;
  };
  ScanOptions opts;
  opts.periodic = true;
  const Minimum1D best = scan_and_refine(objective, 0.0, std::numbers::pi, opts);
  return {best.x, strategy_first_local(pair, m, ProjectiveQubitMeasurement{best.x}, dim_cap)};
}

namespace {

struct HelstromFirstStage {
  ComplexMatrix guess[2];  // outcome 0: guess rho_+, outcome 1: guess rho_-
  double p_plus[2];
  double p_minus[2];
};

HelstromFirstStage helstrom_first_stage(const StatePair& pair, int copies, std::size_t dim_cap) {
  const ComplexMatrix a = tensor_power(pair.rho_plus, copies, dim_cap).matrix();
  const ComplexMatrix b = tensor_power(pair.rho_minus, copies, dim_cap).matrix();
  const HelstromMeasurement hm = helstrom_measurement(a, b, pair.prior_q);
  HelstromFirstStage st;
  st.guess[0] = hm.guess_plus;
  st.guess[1] = identity(a.rows()) - hm.guess_plus;
  for (int d = 0; d < 2; ++d) {
    st.p_plus[d] = std::clamp(trace_product(a, st.guess[d]), 0.0, 1.0);
    st.p_minus[d] = std::clamp(trace_product(b, st.guess[d]), 0.0, 1.0);
  }
  return st;
}

constexpr const char* kHelstromLabels[2] = {"H+", "H-"};

}  // namespace

StrategyResult strategy_helstrom_then_local(const StatePair& pair, int m, std::size_t dim_cap) {
  require_qubits(pair);
  require_copies(m, 2);
  const HelstromFirstStage st = helstrom_first_stage(pair, m - 1, dim_cap);
  StrategyResult out;
  for (int d = 0; d < 2; ++d) {
    append_helstrom_branch(out, kHelstromLabels[d], pair.prior_q, st.p_plus[d], st.p_minus[d],
                           pair.rho_plus.matrix(), pair.rho_minus.matrix());
  }
  return out;
}

StrategyResult strategy_helstrom_then_angle(const StatePair& pair, int m, double phi,
                                            std::size_t dim_cap) {
  require_qubits(pair);
  require_copies(m, 2);
  const HelstromFirstStage st = helstrom_first_stage(pair, m - 1, dim_cap);
  const ProjectiveQubitMeasurement meas{phi};
  const double q = pair.prior_q;
  StrategyResult out;
  for (int d = 0; d < 2; ++d) {
    for (int k = 0; k < 2; ++k) {
      const ComplexMatrix proj = meas.projector(k);
      const double pp = st.p_plus[d] * trace_product(pair.rho_plus.matrix(), proj);
      const double pm = st.p_minus[d] * trace_product(pair.rho_minus.matrix(), proj);
      const double prob = q * pp + (1.0 - q) * pm;
      std::string label = std::string(kHelstromLabels[d]) + "D" + std::to_string(k);
      if (prob < kZeroBranchTol) {
        out.branches.push_back({std::move(label), prob, q, 0.0});
        continue;
      }
      const double posterior = q * pp / prob;
      const bool guess_plus = q * pp >= (1.0 - q) * pm;
      const double err = guess_plus ? (1.0 - q) * pm : q * pp;
      out.branches.push_back({std::move(label), prob, posterior, err / prob});
      (guess_plus ? out.p_plus_given_minus : out.p_minus_given_plus) += guess_plus ? pm : pp;
      out.error_probability += err;
    }
  }
  return out;
}

StrategyResult locc_adaptive(const StatePair& pair, int m, const LoccConfig& config) {
  require_qubits(pair);
  require_copies(m, 1);
  if (m > config.max_copies) {
    std::ostringstream msg;
    msg << "LOCC tree depth " << m << " exceeds cap " << config.max_copies;
    throw DepthCapExceeded(msg.str());
  }
  StrategyResult out;
  if (m == 1) {
    const HelstromMeasurement hm =
        helstrom_measurement(pair.rho_plus.matrix(), pair.rho_minus.matrix(), pair.prior_q);
    out.error_probability = helstrom_general(pair, 1);
    out.p_minus_given_plus = hm.p_minus_given_plus;
    out.p_plus_given_minus = hm.p_plus_given_minus;
    out.branches.push_back({"", 1.0, pair.prior_q, out.error_probability});
    return out;
  }
  const LoccSolver solver(pair, config);
  solver.record(m, 1.0, 1.0, "", true, out);
  return out;
}

StrategyResult locc_appendixF(double v, double alpha) {
  const StatePair pair = build_example2({v, alpha}, 0.5);
  const ProjectiveQubitMeasurement meas{std::numbers::pi / 4.0};
  StrategyResult out;
  for (int outcome = 0; outcome < 2; ++outcome) {
    const ComplexMatrix proj = meas.projector(outcome);
    append_helstrom_branch(out, "D" + std::to_string(outcome), 0.5,
                           trace_product(pair.rho_plus.matrix(), proj),
                           trace_product(pair.rho_minus.matrix(), proj), pair.rho_plus.matrix(),
                           pair.rho_minus.matrix());
  }
  return out;
}

MaxLikelihoodResult max_likelihood_diagonal(const DiagonalStatePair& pair, int m,
                                            std::size_t entry_cap) {
  require_copies(m, 1);
  const std::size_t n = pair.lambdas_1.size();
  std::size_t entries = 1;
  for (int k = 0; k < m; ++k) {
    if (entries > entry_cap / n) {
      throw DimensionCapExceeded("product distribution exceeds the entry cap");
    }
    entries *= n;
  }
  const double q = pair.prior_q;
  MaxLikelihoodResult out;
  out.assignment.resize(entries);
  std::vector<std::size_t> digits(static_cast<std::size_t>(m), 0);
  for (std::size_t idx = 0; idx < entries; ++idx) {
    double p1 = q;
    double p2 = 1.0 - q;
    for (std::size_t d : digits) {
      p1 *= pair.lambdas_1[d];
      p2 *= pair.lambdas_2[d];
    }
    const bool first = p1 >= p2;
    out.assignment[idx] = first ? 1 : 2;
    out.error += first ? p2 : p1;
    for (std::size_t pos = digits.size(); pos-- > 0;) {  // odometer, last copy fastest
      if (++digits[pos] < n) break;
      digits[pos] = 0;
    }
  }
  return out;
}

TwoOutcomePovm helstrom_povm(const StatePair& pair, int m, std::size_t dim_cap) {
  const ComplexMatrix a = tensor_power(pair.rho_plus, m, dim_cap).matrix();
  const ComplexMatrix b = tensor_power(pair.rho_minus, m, dim_cap).matrix();
  const HelstromMeasurement hm = helstrom_measurement(a, b, pair.prior_q);
  return {hm.guess_plus, identity(a.rows()) - hm.guess_plus};
}

OptimalityReport check_optimality(const TwoOutcomePovm& povm, const StatePair& pair, int m,
                                  std::size_t dim_cap) {
  const ComplexMatrix a = tensor_power(pair.rho_plus, m, dim_cap).matrix();
  const ComplexMatrix b = tensor_power(pair.rho_minus, m, dim_cap).matrix();
  const auto dim = a.rows();
  const ComplexMatrix& p1 = povm.guess_first;
  const ComplexMatrix& p2 = povm.guess_second;
  if (p1.rows() != dim || p1.cols() != dim || p2.rows() != dim || p2.cols() != dim) {
    throw InvalidPOVM("POVM dimension does not match the m-copy states");
  }
  if ((p1 + p2 - identity(dim)).cwiseAbs().maxCoeff() > 1e-10) {
    throw InvalidPOVM("POVM elements do not sum to the identity");
  }
  for (const ComplexMatrix* p : {&p1, &p2}) {
    if (hermiticity_defect(*p) > 1e-10 || hermitian_eigenvalues(hermitian_part(*p))[0] < -1e-10) {
      throw InvalidPOVM("POVM element is not positive semidefinite");
    }
  }
  const double q = pair.prior_q;
  OptimalityReport rep;
  rep.commutator_residual = (p1 * (q * a - (1.0 - q) * b) * p2).cwiseAbs().maxCoeff();
  const ComplexMatrix y = hermitian_part(q * a * p1 + (1.0 - q) * b * p2);
  const double min_first = hermitian_eigenvalues(hermitian_part(y - q * a))[0];
  const double min_second = hermitian_eigenvalues(hermitian_part(y - (1.0 - q) * b))[0];
  rep.positivity_residual = std::max({0.0, -min_first, -min_second});
  rep.optimal = rep.commutator_residual <= kOptimalityTol &&
                rep.positivity_residual <= kOptimalityTol;
  return rep;
}

double relative_entropy_bernoulli(double a, double p) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("relative entropy needs a in [0, 1]");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("relative entropy needs p in (0, 1)");
  return x_log_x_over_y(a, p) + x_log_x_over_y(1.0 - a, 1.0 - p);
}

double majority_vote_exponent_bound(double helstrom, int m) {
  require_copies(m, 1);
  if (!(helstrom > 0.0 && helstrom < 1.0)) {
    throw DomainError("exponent bound needs 0 < P_H < 1");
  }
  return (std::log(1.0 / (2.0 * helstrom)) + std::log(1.0 / (2.0 * (1.0 - helstrom)))) /
         (2.0 * m);
}

MajorityVoteReport majority_vote(const StatePair& pair, int m, std::int64_t n_total,
                                 std::size_t dim_cap) {
  require_copies(m, 1);
  MajorityVoteReport rep;
  rep.m = m;
  rep.n_requested = n_total;
  rep.n_blocks = n_total / m;
  rep.n_total = rep.n_blocks * m;
  if (rep.n_blocks < 1) throw DomainError("majority vote needs at least one block");
  rep.helstrom = helstrom_general(pair, m, dim_cap);
  if (!(rep.helstrom < 0.5)) throw DomainError("majority vote needs P_H(M) < 1/2");
  rep.p_block = 1.0 - rep.helstrom;

  const std::int64_t n = rep.n_blocks;
  const double log_p = std::log(rep.p_block);
  const double log_q = std::log(rep.helstrom);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(n / 2 + 1));
  auto log_pmf = [&](std::int64_t k) {
    const double fail = (n - k) == 0 ? 0.0 : static_cast<double>(n - k) * log_q;
    return log_binomial(static_cast<int>(n), static_cast<int>(k)) +
           static_cast<double>(k) * log_p + fail;
  };
  for (std::int64_t k = 0; 2 * k < n; ++k) terms.push_back(log_pmf(k));
  if (n % 2 == 0) terms.push_back(std::log(rep.tie_weight) + log_pmf(n / 2));
  const double log_err = log_sum_exp(terms);
  rep.exact_error = std::exp(log_err);
  rep.exact_exponent = log_err == -kInf ? kInf : -log_err / static_cast<double>(rep.n_total);
  rep.exponent_lower_bound =
      rep.helstrom > 0.0 ? majority_vote_exponent_bound(rep.helstrom, m) : kInf;
  return rep;
}

}  // namespace qdisc
