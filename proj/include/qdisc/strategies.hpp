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

// Restricted measurement strategies for binary discrimination on m copies:
// a local measurement followed by a collective one (and the reverse), adaptive
// LOCC over single-copy projective measurements, maximum likelihood for
// commuting pairs, repeated Helstrom measurements with a majority vote, and a
// certificate for Helstrom optimality of a two-outcome POVM.

#ifndef QDISC_STRATEGIES_HPP
#define QDISC_STRATEGIES_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qdisc/matops.hpp"
#include "qdisc/states.hpp"

namespace qdisc {

/// Projectors onto cos(phi)|0> + sin(phi)|1> (outcome 0) and its complement (outcome 1).
struct ProjectiveQubitMeasurement {
  double phi = 0.0;

  ComplexMatrix projector(int outcome) const;
  /// Bloch direction of the outcome-0 projector: (sin 2phi, 0, cos 2phi).
  BlochVector direction() const;
};

struct Branch {
  std::string label;
  double probability = 0.0;
  double posterior = 0.0;  // Pr[rho_+ | outcome]
  double error = 0.0;      // error of the remaining stages given this outcome
};

struct StrategyResult {
  double error_probability = 0.0;
  std::vector<Branch> branches;
  double p_minus_given_plus = 0.0;
  double p_plus_given_minus = 0.0;
};

/// Branches with probability below this are dropped from posterior updates.
inline constexpr double kZeroBranchTol = 1e-15;

/// Appends the branch reached with likelihoods Pr[path | rho_+] = p_plus and
/// Pr[path | rho_-] = p_minus, followed by the Helstrom measurement on (a, b) at
/// the posterior. Accumulates the error and the conditional errors of out.
void append_helstrom_branch(StrategyResult& out, std::string label, double q, double p_plus,
                            double p_minus, const ComplexMatrix& a, const ComplexMatrix& b);

/// Bayesian update q Tr[rho_+ Pi] / (q Tr[rho_+ Pi] + (1 - q) Tr[rho_- Pi]) for
/// a single-copy outcome. Throws ZeroProbabilityBranch, DomainError.
double posterior_update(const StatePair& pair, const ProjectiveQubitMeasurement& meas,
                        int outcome);

/// Measure the first copy with meas, then the Helstrom measurement on the other
/// m - 1 copies at the updated prior.
StrategyResult strategy_first_local(const StatePair& pair, int m,
                                    const ProjectiveQubitMeasurement& meas,
                                    std::size_t dim_cap = kDefaultDimensionCap);

struct FirstLocalOptimum {
  double phi_star = 0.0;
  StrategyResult result;
};

/// Global minimum of strategy_first_local over phi in [0, pi).
FirstLocalOptimum optimize_first_local(const StatePair& pair, int m,
                                       std::size_t dim_cap = kDefaultDimensionCap);

/// Helstrom measurement on the first m - 1 copies, then the single-copy
/// Helstrom measurement at each posterior.
StrategyResult strategy_helstrom_then_local(const StatePair& pair, int m,
                                            std::size_t dim_cap = kDefaultDimensionCap);

/// As strategy_helstrom_then_local, but the last copy is measured at a fixed
/// angle phi in both branches and the guess is the maximum a posteriori one.
StrategyResult strategy_helstrom_then_angle(const StatePair& pair, int m, double phi,
                                            std::size_t dim_cap = kDefaultDimensionCap);

struct LoccConfig {
  int max_copies = 10;
  int root_scan_points = 721;
  int inner_scan_points = 61;
  double phi_tol = 1e-6;
};

/// Adaptive LOCC: every copy is measured with a projective qubit measurement
/// whose angle is optimized independently at every node of the outcome tree;
/// the last copy uses the single-copy Helstrom measurement. Qubit pairs only.
/// Throws DepthCapExceeded when m > config.max_copies.
StrategyResult locc_adaptive(const StatePair& pair, int m, const LoccConfig& config = {});

/// Two-copy LOCC scheme for Example 2 at q = 1/2: measure the first copy at
/// phi = pi/4, then the Helstrom measurement at the posterior.
StrategyResult locc_appendixF(double v, double alpha);

struct MaxLikelihoodResult {
  double error = 0.0;
  /// 1 (guess the first state) or 2 per product basis entry, first copy most significant.
  std::vector<int> assignment;
};

/// Maximum a posteriori decision on the m-fold product distribution of two
/// commuting states. Ties go to state 1.
MaxLikelihoodResult max_likelihood_diagonal(const DiagonalStatePair& pair, int m,
                                            std::size_t entry_cap = std::size_t{1} << 20);

struct TwoOutcomePovm {
  ComplexMatrix guess_first;   // Pi_1: guess rho_+
  ComplexMatrix guess_second;  // Pi_2: guess rho_-
};

struct OptimalityReport {
  bool optimal = false;
  double commutator_residual = 0.0;  // max |Pi_1 (q rho_1 - (1 - q) rho_2) Pi_2|
  double positivity_residual = 0.0;  // max(0, -min eig(Y - p_j rho_j)) over j
};

inline constexpr double kOptimalityTol = 1e-9;

/// Checks the necessary and sufficient conditions for {Pi_1, Pi_2} to attain the
/// Helstrom bound on m copies. Throws InvalidPOVM.
OptimalityReport check_optimality(const TwoOutcomePovm& povm, const StatePair& pair, int m,
                                  std::size_t dim_cap = kDefaultDimensionCap);

/// The Helstrom eigenprojectors for m copies as a two-outcome POVM.
TwoOutcomePovm helstrom_povm(const StatePair& pair, int m,
                             std::size_t dim_cap = kDefaultDimensionCap);

struct MajorityVoteReport {
  int m = 1;
  std::int64_t n_requested = 0;
  std::int64_t n_total = 0;  // copies actually used: n_blocks * m
  std::int64_t n_blocks = 0;
  double helstrom = 0.0;
  double p_block = 0.0;  // 1 - P_H(M)
  double exact_error = 0.0;
  double exponent_lower_bound = 0.0;
  double exact_exponent = 0.0;
  /// Weight of a tied vote counted as an error (a fair coin decides ties).
  double tie_weight = 0.5;
};

/// Lower bound on the error exponent of the repeated m-copy Helstrom measurement:
/// (log(1/(2 P)) + log(1/(2 (1 - P)))) / (2 m).
double majority_vote_exponent_bound(double helstrom, int m);

/// Repeat the m-copy Helstrom measurement floor(n_total / m) times and decide by
/// majority, each block succeeding independently with probability 1 - P_H(m).
/// Throws DomainError when P_H(m) >= 1/2.
MajorityVoteReport majority_vote(const StatePair& pair, int m, std::int64_t n_total,
                                 std::size_t dim_cap = kDefaultDimensionCap);

/// a log(a/p) + (1 - a) log((1 - a)/(1 - p)) with 0 log 0 := 0.
double relative_entropy_bernoulli(double a, double p);

}  // namespace qdisc

#endif  // QDISC_STRATEGIES_HPP
