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

// Helstrom and quantum Chernoff bounds plus the diagnostics that compare them.
//
// All logarithms are natural. Quantities that underflow for large copy counts
// (the Helstrom error, R(M)) are carried in log space.

#ifndef QDISC_BOUNDS_HPP
#define QDISC_BOUNDS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qdisc/matops.hpp"
#include "qdisc/states.hpp"

namespace qdisc {

/// Optimal two-outcome measurement for (q A, (1 - q) B) and its error split.
struct HelstromMeasurement {
  double error = 0.0;
  double p_minus_given_plus = 0.0;  // guess rho_- although rho_+ was sent
  double p_plus_given_minus = 0.0;
  /// Projector onto the nonnegative eigenspace of q A - (1 - q) B ("guess rho_+").
  /// The zero eigenspace is assigned here.
  ComplexMatrix guess_plus;
};

/// Helstrom measurement for arbitrary (possibly multi-copy) operators a, b.
HelstromMeasurement helstrom_measurement(const ComplexMatrix& a, const ComplexMatrix& b, double q);

/// 1/2 (1 - || q a - (1 - q) b ||), clamped to [0, min(q, 1 - q)].
double helstrom_error(const ComplexMatrix& a, const ComplexMatrix& b, double q);

/// Helstrom bound for m copies. Throws DimensionCapExceeded.
double helstrom_general(const StatePair& pair, int m, std::size_t dim_cap = kDefaultDimensionCap);

/// Closed-form Helstrom bound for Example 1, any prior, evaluated in log space.
double helstrom_example1(double v, int m, double q = 0.5);
double log_helstrom_example1(double v, int m, double q = 0.5);

/// Real-valued split point: the Example 1 summand is positive for i below it.
double example1_sign_threshold(double v, int m, double q);

/// Pure-state Helstrom bound at q = 1/2: (1 - sqrt(1 - overlap_sq^m)) / 2.
double helstrom_pure(double overlap_sq, int m);
double log_helstrom_pure(double overlap_sq, int m);

/// sum_{k=0}^{floor(m/2)} C(m, k) (m - 2k).
double metrology_binomial_sum(int m);

/// First-order-in-a Helstrom bound for I/2 versus I/2 + theta . sigma, a = |theta|.
double helstrom_metrology_approx(double a, int m);

/// |helstrom_metrology_approx - helstrom_general| for the exact Example 3 pair.
double metrology_approx_gap(const Example3Params& p, int m,
                            std::size_t dim_cap = kDefaultDimensionCap);

/// Two-copy Helstrom bound for Example 2 at q = 1/2 in closed form.
double helstrom_two_copy_example2(double v, double alpha);

struct ChernoffResult {
  double kappa = 1.0;
  double s_star = 0.5;
};

/// g(s) = Tr[rho_+^s rho_-^(1-s)] from the two spectral decompositions.
///
/// Eigenvalues at or below kSupportTol are treated as exact zeros, so g is
/// continuous on [0, 1] and the 0^0 := 0 convention holds at the endpoints.
class ChernoffObjective {
 public:
  static constexpr double kSupportTol = 1e-13;

  explicit ChernoffObjective(const StatePair& pair);

  double value(double s) const;
  double derivative(double s) const;

 private:
  std::vector<double> log_plus_;   // log lambda_i
  std::vector<double> log_minus_;  // log mu_j
  std::vector<double> weight_;     // |<a_i|b_j>|^2, row-major over (i, j)
};

/// Minimizes g on [0, 1]. g is convex, so the root of g' is bracketed by bisection;
/// endpoint minima are detected from the sign of g' there.
ChernoffResult chernoff_numeric(const StatePair& pair);

/// kappa = sqrt(v (2 - v)), s* = 1/2.
ChernoffResult chernoff_example1(double v);

/// kappa = sqrt(v (2 - v)) - cos^2(alpha) (sqrt(v (2 - v)) - 1), s* = 1/2.
ChernoffResult chernoff_example2(double v, double alpha);

/// Stationary exponent of Tr[rho_1^s rho_2^(1-s)] for rho_1 = I/2 and
/// rho_2 with eigenvalues (1 +- 2a)/2, from the complex-log closed form.
double chernoff_example3_sstar(double a);

struct ExponentReport {
  int m = 1;
  double helstrom = 0.0;
  double log_helstrom = 0.0;
  double kappa = 1.0;
  double s_star = 0.5;
  double log_prior_factor = 0.0;  // log(q^s* (1 - q)^(1 - s*))
  double epsilon_m = 0.0;
  double epsilon_prime_m = 0.0;
  double epsilon_inf = 0.0;
  double r = 1.0;
  double one_minus_r = 0.0;
  double r_epsilon = 1.0;
  bool undefined_at_zero = false;  // P_H(M) = 0; exponents carry +infinity
};

/// Assembles the report from log P_H(M). Throws BoundViolation when R(M) > 1
/// or P_H(M)^(1/M) > kappa beyond 1e-12.
ExponentReport diagnostics_from(double log_helstrom, double q, const ChernoffResult& chernoff,
                                int m);

/// Exact path: helstrom_general and chernoff_numeric.
ExponentReport diagnostics(const StatePair& pair, int m,
                           std::size_t dim_cap = kDefaultDimensionCap);

/// Analytic paths, usable far beyond the dimension cap.
ExponentReport diagnostics_example1(double v, int m, double q = 0.5);
ExponentReport diagnostics_pure_example2(double alpha, int m);

/// R(m) - R(n), computed from 1 - R to keep precision.
double delta(const ExponentReport& at_m, const ExponentReport& at_n);
double delta(const StatePair& pair, int m, int n, std::size_t dim_cap = kDefaultDimensionCap);

/// (eps'_m - eps'_n) / eps_inf.
double delta_epsilon(const ExponentReport& at_m, const ExponentReport& at_n);
double delta_epsilon(const StatePair& pair, int m, int n,
                     std::size_t dim_cap = kDefaultDimensionCap);

/// log C(n, k) for 0 <= k <= n.
double log_binomial(int n, int k);

/// log(sum exp(x_i)); -infinity for an empty or all -infinity input.
double log_sum_exp(std::span<const double> xs);

}  // namespace qdisc

#endif  // QDISC_BOUNDS_HPP
