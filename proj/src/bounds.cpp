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

#include "qdisc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qdisc/errors.hpp"

namespace qdisc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kBoundSlack = 1e-12;

void require_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << what << " must lie in [0, 1], got " << x;
    throw DomainError(msg.str());
  }
}

void require_copies(int m) {
  if (m < 1) throw DomainError("copy count must be at least 1");
}

// k * log(x) with 0 * log(0) := 0.
double scaled_log(int k, double log_x) { return k == 0 ? 0.0 : k * log_x; }

}  // namespace

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double log_sum_exp(std::span<const double> xs) {
  double peak = -kInf;
  for (double x : xs) peak = std::max(peak, x);
  if (peak == -kInf) return -kInf;
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - peak);
  return peak + std::log(acc);
}

HelstromMeasurement helstrom_measurement(const ComplexMatrix& a, const ComplexMatrix& b, double q) {
  require_unit(q, "prior q");
  const ComplexMatrix gamma = q * a - (1.0 - q) * b;
  const HermitianEigenSystem es = hermitian_eig(gamma);
  HelstromMeasurement out;
  for (Eigen::Index k = 0; k < es.eigenvalues.size(); ++k) {
    const auto vec = es.eigenvectors.col(k);
    if (es.eigenvalues[k] >= 0.0) {
      out.p_plus_given_minus += (vec.adjoint() * b * vec)(0, 0).real();
    } else {
      out.p_minus_given_plus += (vec.adjoint() * a * vec)(0, 0).real();
    }
  }
  out.guess_plus = spectral_projector(es, [](double x) { return x >= 0.0; });
  out.error = q * out.p_minus_given_plus + (1.0 - q) * out.p_plus_given_minus;
  return out;
}

double helstrom_error(const ComplexMatrix& a, const ComplexMatrix& b, double q) {
  require_unit(q, "prior q");
  const double norm = trace_norm(q * a - (1.0 - q) * b);
  return std::clamp(0.5 * (1.0 - norm), 0.0, std::min(q, 1.0 - q));
}

double helstrom_general(const StatePair& pair, int m, std::size_t dim_cap) {
  const DensityMatrix plus = tensor_power(pair.rho_plus, m, dim_cap);
  const DensityMatrix minus = tensor_power(pair.rho_minus, m, dim_cap);
  return helstrom_error(plus.matrix(), minus.matrix(), pair.prior_q);
}

// With a_i = C(m,i) q x^i y^(m-i) and b_i = C(m,i) (1-q) y^i x^(m-i), where
// x = v/2 and y = (2-v)/2, sum a_i = q and sum b_i = 1 - q, so
// 1/2 (1 - sum |a_i - b_i|) = sum min(a_i, b_i). Every term is nonnegative.
double log_helstrom_example1(double v, int m, double q) {
  require_unit(v, "mixedness v");
  require_unit(q, "prior q");
  require_copies(m);
  const double log_x = std::log(v / 2.0);
  const double log_y = std::log((2.0 - v) / 2.0);
  const double log_q = std::log(q);
  const double log_1mq = std::log1p(-q);
  std::vector<double> terms(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    const double c = log_binomial(m, i);
    const double log_a = c + log_q + scaled_log(i, log_x) + scaled_log(m - i, log_y);
    const double log_b = c + log_1mq + scaled_log(i, log_y) + scaled_log(m - i, log_x);
    terms[static_cast<std::size_t>(i)] = std::min(log_a, log_b);
  }
  return log_sum_exp(terms);
}

double helstrom_example1(double v, int m, double q) {
  return std::exp(log_helstrom_example1(v, m, q));
}

double example1_sign_threshold(double v, int m, double q) {
  if (!(v > 0.0 && v < 1.0)) throw DomainError("sign threshold needs 0 < v < 1");
  if (!(q > 0.0 && q < 1.0)) throw DomainError("sign threshold needs 0 < q < 1");
  require_copies(m);
  const double ratio = std::log((2.0 - v) / v);
  return (std::log(q / (1.0 - q)) + m * ratio) / (2.0 * ratio);
}

// 1 - sqrt(1 - g) = g / (1 + sqrt(1 - g)) avoids cancellation as g -> 0.
double log_helstrom_pure(double overlap_sq, int m) {
  require_unit(overlap_sq, "squared overlap");
  require_copies(m);
  if (overlap_sq == 0.0) return -kInf;
  const double log_gamma = m * std::log(overlap_sq);
  const double gamma = std::exp(log_gamma);
  return std::log(0.5) + log_gamma - std::log1p(std::sqrt(1.0 - gamma));
}

double helstrom_pure(double overlap_sq, int m) {
  return std::exp(log_helstrom_pure(overlap_sq, m));
}

double metrology_binomial_sum(int m) {
  require_copies(m);
  double total = 0.0;
  for (int k = 0; 2 * k <= m; ++k) {
    total += std::exp(log_binomial(m, k)) * (m - 2 * k);
  }
  return std::round(total);
}

double helstrom_metrology_approx(double a, int m) {
  if (!(a >= 0.0)) throw DomainError("metrology approximation needs a >= 0");
  require_copies(m);
  const double norm = a * metrology_binomial_sum(m) / std::ldexp(1.0, m - 2);
  return 0.5 * (1.0 - 0.5 * norm);
}

double metrology_approx_gap(const Example3Params& p, int m, std::size_t dim_cap) {
  const double exact = helstrom_general(build_example3(p), m, dim_cap);
  return std::abs(helstrom_metrology_approx(p.norm(), m) - exact);
}

double helstrom_two_copy_example2(double v, double alpha) {
  require_unit(v, "mixedness v");
  const double r = 1.0 - v;
  const double inner = 3.0 - (2.0 - v) * v + r * r * std::cos(2.0 * alpha);
  return 0.25 * (2.0 - std::numbers::sqrt2 * r * std::sqrt(inner) * std::sin(alpha));
}

ChernoffObjective::ChernoffObjective(const StatePair& pair) {
  const HermitianEigenSystem plus = hermitian_eig(pair.rho_plus.matrix());
  const HermitianEigenSystem minus = hermitian_eig(pair.rho_minus.matrix());
  const ComplexMatrix overlap = plus.eigenvectors.adjoint() * minus.eigenvectors;
  for (Eigen::Index i = 0; i < plus.eigenvalues.size(); ++i) {
    if (plus.eigenvalues[i] <= kSupportTol) continue;
    for (Eigen::Index j = 0; j < minus.eigenvalues.size(); ++j) {
      if (minus.eigenvalues[j] <= kSupportTol) continue;
      log_plus_.push_back(std::log(plus.eigenvalues[i]));
      log_minus_.push_back(std::log(minus.eigenvalues[j]));
      weight_.push_back(std::norm(overlap(i, j)));
    }
  }
}

double ChernoffObjective::value(double s) const {
  double total = 0.0;
  for (std::size_t k = 0; k < weight_.size(); ++k) {
    total += weight_[k] * std::exp(s * log_plus_[k] + (1.0 - s) * log_minus_[k]);
  }
  return total;
}

double ChernoffObjective::derivative(double s) const {
  double total = 0.0;
  for (std::size_t k = 0; k < weight_.size(); ++k) {
    total += weight_[k] * (log_plus_[k] - log_minus_[k]) *
             std::exp(s * log_plus_[k] + (1.0 - s) * log_minus_[k]);
  }
  return total;
}

ChernoffResult chernoff_numeric(const StatePair& pair) {
  const ChernoffObjective g(pair);
  constexpr double kFlat = 1e-13;
  const double d0 = g.derivative(0.0);
  const double d1 = g.derivative(1.0);
  double s = 0.5;
  if (std::abs(d0) <= kFlat && std::abs(d1) <= kFlat) {
    s = 0.5;
  } else if (d0 >= 0.0) {
    s = 0.0;
  } else if (d1 <= 0.0) {
    s = 1.0;
  } else {
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double d = g.derivative(mid);
      if (d == 0.0) {
        lo = hi = mid;
        break;
      }
      (d < 0.0 ? lo : hi) = mid;
    }
    s = 0.5 * (lo + hi);
  }
  return {std::clamp(g.value(s), 0.0, 1.0), s};
}

ChernoffResult chernoff_example1(double v) {
  require_unit(v, "mixedness v");
  return {std::sqrt(v * (2.0 - v)), 0.5};
}

ChernoffResult chernoff_example2(double v, double alpha) {
  require_unit(v, "mixedness v");
  const double root = std::sqrt(v * (2.0 - v));
  const double c = std::cos(alpha);
  return {root - c * c * (root - 1.0), 0.5};
}

double chernoff_example3_sstar(double a) {
  if (!(a > 0.0 && a < 0.5)) throw DomainError("example 3 s* needs 0 < a < 1/2");
  // The complex-log closed form with the i pi terms cancelled, l_+ l_- = 1 - 4a^2:
  // s* = 1 + log(-log l_- / log l_+) / (log l_- - log l_+).
  const double log_plus = std::log1p(2.0 * a);
  const double log_ratio = std::log1p(-std::log1p(-4.0 * a * a) / log_plus);
  return 1.0 - log_ratio / (2.0 * std::atanh(2.0 * a));
}

ExponentReport diagnostics_from(double log_helstrom, double q, const ChernoffResult& chernoff,
                                int m) {
  require_copies(m);
  if (!(q > 0.0 && q < 1.0)) throw DomainError("diagnostics need 0 < q < 1");
  ExponentReport rep;
  rep.m = m;
  rep.log_helstrom = log_helstrom;
  rep.helstrom = std::exp(log_helstrom);
  rep.kappa = chernoff.kappa;
  rep.s_star = chernoff.s_star;
  rep.log_prior_factor =
      chernoff.s_star * std::log(q) + (1.0 - chernoff.s_star) * std::log1p(-q);
  rep.epsilon_inf = chernoff.kappa > 0.0 ? -std::log(chernoff.kappa) : kInf;

  if (log_helstrom == -kInf) {
    rep.undefined_at_zero = true;
    rep.epsilon_m = kInf;
    rep.epsilon_prime_m = kInf;
    if (chernoff.kappa > 0.0) {
      rep.r = 0.0;
      rep.one_minus_r = 1.0;
      rep.r_epsilon = kInf;
    } else {
      rep.r = kNaN;
      rep.one_minus_r = kNaN;
      rep.r_epsilon = kNaN;
    }
    return rep;
  }

  rep.epsilon_m = -log_helstrom / m;
  rep.epsilon_prime_m = -(log_helstrom - rep.log_prior_factor) / m;
  const double log_r = rep.epsilon_inf - rep.epsilon_prime_m;
  rep.r = std::exp(log_r);
  rep.one_minus_r = -std::expm1(log_r);
  rep.r_epsilon = rep.epsilon_inf > 0.0 ? rep.epsilon_prime_m / rep.epsilon_inf : kNaN;

  if (log_r > kBoundSlack || rep.epsilon_m < rep.epsilon_inf - kBoundSlack) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "bound violated at M=" << m << ": log R = " << log_r << ", eps_M = " << rep.epsilon_m
        << ", eps_inf = " << rep.epsilon_inf;
    throw BoundViolation(msg.str());
  }
  return rep;
}

ExponentReport diagnostics(const StatePair& pair, int m, std::size_t dim_cap) {
  const double ph = helstrom_general(pair, m, dim_cap);
  const double log_ph = ph > 0.0 ? std::log(ph) : -kInf;
  return diagnostics_from(log_ph, pair.prior_q, chernoff_numeric(pair), m);
}

ExponentReport diagnostics_example1(double v, int m, double q) {
  return diagnostics_from(log_helstrom_example1(v, m, q), q, chernoff_example1(v), m);
}

ExponentReport diagnostics_pure_example2(double alpha, int m) {
  const double c = std::cos(alpha);
  return diagnostics_from(log_helstrom_pure(c * c, m), 0.5, chernoff_example2(0.0, alpha), m);
}

double delta(const ExponentReport& at_m, const ExponentReport& at_n) {
  return at_n.one_minus_r - at_m.one_minus_r;
}

double delta(const StatePair& pair, int m, int n, std::size_t dim_cap) {
  if (m == n) return 0.0;
  return delta(diagnostics(pair, m, dim_cap), diagnostics(pair, n, dim_cap));
}

double delta_epsilon(const ExponentReport& at_m, const ExponentReport& at_n) {
  if (at_m.m == at_n.m) return 0.0;
  return (at_m.epsilon_prime_m - at_n.epsilon_prime_m) / at_m.epsilon_inf;
}

double delta_epsilon(const StatePair& pair, int m, int n, std::size_t dim_cap) {
  if (m == n) return 0.0;
  return delta_epsilon(diagnostics(pair, m, dim_cap), diagnostics(pair, n, dim_cap));
}

}  // namespace qdisc
