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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qdisc/bounds.hpp"
#include "qdisc/errors.hpp"
#include "qdisc/states.hpp"
#include "test_util.hpp"

namespace qdisc {
namespace {

using std::numbers::pi;

// Entrywise maximum-likelihood error for Example 1 by enumerating all 2^m outcomes.
double example1_enumeration(double v, int m, double q) {
  double err = 0.0;
  for (unsigned idx = 0; idx < (1u << m); ++idx) {
    double p_plus = q, p_minus = 1.0 - q;
    for (int k = 0; k < m; ++k) {
      const bool one = (idx >> k) & 1u;
      p_plus *= one ? v / 2 : (2 - v) / 2;
      p_minus *= one ? (2 - v) / 2 : v / 2;
    }
    err += std::min(p_plus, p_minus);
  }
  return err;
}

// g(s) = Tr[a^s b^(1-s)] by explicit matrix powers.
double chernoff_trace(const StatePair& p, double s) {
  return (frac_power(p.rho_plus.matrix(), s) * frac_power(p.rho_minus.matrix(), 1.0 - s))
      .trace()
      .real();
}

TEST(HelstromGeneral, Examples) {
  EXPECT_NEAR(helstrom_general(build_example1({1.0}), 1), 0.5, 1e-15);
  EXPECT_NEAR(helstrom_general(build_example2({0.0, pi / 2}), 1), 0.0, 1e-15);
  EXPECT_NEAR(helstrom_general(build_example1({0.5}), 2), 0.25, 1e-15);
}

TEST(HelstromGeneral, MatchesSvdOracleProperty) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const StatePair p{testing::random_qubit(rng), testing::random_qubit(rng), u(rng)};
    const int m = 1 + trial % 4;
    const double oracle = testing::helstrom_oracle(
        testing::tensor_oracle(p.rho_plus.matrix(), m),
        testing::tensor_oracle(p.rho_minus.matrix(), m), p.prior_q);
    const double value = helstrom_general(p, m);
    EXPECT_NEAR(value, oracle, 1e-12);
    EXPECT_GE(value, 0.0);
    EXPECT_LE(value, std::min(p.prior_q, 1 - p.prior_q));
    EXPECT_NEAR(helstrom_general(p.swapped(), m), value, 1e-12);
  }
}

TEST(HelstromGeneral, DimensionCap) {
  EXPECT_THROW(helstrom_general(build_example1({0.5}), 5, 16), DimensionCapExceeded);
}

TEST(HelstromMeasurement, ConditionalErrorsCombineToError) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = testing::random_density(rng, 4).matrix();
    const ComplexMatrix b = testing::random_density(rng, 4).matrix();
    const double q = 0.2 + 0.03 * trial;
    const HelstromMeasurement hm = helstrom_measurement(a, b, q);
    EXPECT_NEAR(q * hm.p_minus_given_plus + (1 - q) * hm.p_plus_given_minus, hm.error, 1e-12);
    EXPECT_NEAR(hm.error, testing::helstrom_oracle(a, b, q), 1e-12);
    EXPECT_LT((hm.guess_plus * hm.guess_plus - hm.guess_plus).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(HelstromExample1, Examples) {
  EXPECT_NEAR(helstrom_example1(0.5, 2, 0.5), 0.25, 1e-15);
  for (double v : {0.0, 0.2, 0.7, 1.0}) {
    EXPECT_NEAR(helstrom_example1(v, 1, 0.5), v / 2, 1e-15);
    EXPECT_EQ(helstrom_example1(v, 3, 0.0), 0.0);
  }
  EXPECT_THROW(helstrom_example1(1.5, 2, 0.5), DomainError);
  EXPECT_THROW(helstrom_example1(0.5, 2, 1.5), DomainError);
}

TEST(HelstromExample1, MatchesEnumerationProperty) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const double v = u(rng), q = u(rng);
    const int m = 1 + trial % 12;
    EXPECT_NEAR(helstrom_example1(v, m, q), example1_enumeration(v, m, q), 1e-12)
        << "v=" << v << " q=" << q << " m=" << m;
  }
}

TEST(HelstromExample1, StaysFiniteForLargeM) {
  const double lp = log_helstrom_example1(0.8, 5000, 0.5);
  EXPECT_TRUE(std::isfinite(lp));
  EXPECT_LT(lp, 0.0);
  EXPECT_LE(lp / 5000, std::log(chernoff_example1(0.8).kappa) + 1e-12);
}

TEST(SignThreshold, Examples) {
  for (int m : {1, 4, 7}) EXPECT_NEAR(example1_sign_threshold(0.3, m, 0.5), m / 2.0, 1e-14);
  EXPECT_NEAR(example1_sign_threshold(0.5, 4, 0.8), 2 + std::log(4.0) / (2 * std::log(3.0)), 1e-14);
  EXPECT_THROW(example1_sign_threshold(0.0, 4, 0.5), DomainError);
  EXPECT_THROW(example1_sign_threshold(0.5, 4, 1.0), DomainError);
}

TEST(SignThreshold, SummandSignScanProperty) {
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int trial = 0; trial < 40; ++trial) {
    const double v = u(rng), q = u(rng);
    const int m = 1 + trial % 10;
    const double t = example1_sign_threshold(v, m, q);
    for (int i = 0; i <= m; ++i) {
      const double summand = q * std::pow(2 - v, m - i) * std::pow(v, i) -
                             (1 - q) * std::pow(v, m - i) * std::pow(2 - v, i);
      if (std::abs(i - t) < 1e-9) continue;
      EXPECT_EQ(summand > 0, i < t) << "i=" << i << " t=" << t;
    }
  }
}

TEST(HelstromPure, Examples) {
  EXPECT_EQ(helstrom_pure(0.0, 3), 0.0);
  EXPECT_EQ(helstrom_pure(1.0, 3), 0.5);
  EXPECT_NEAR(helstrom_pure(0.5, 1), (1 - std::sqrt(0.5)) / 2, 1e-15);
  EXPECT_NEAR(helstrom_pure(0.5, 1), 0.146447, 1e-6);
  EXPECT_NEAR(helstrom_general(build_example2({0.0, pi / 4}), 1), helstrom_pure(0.5, 1), 1e-14);
  EXPECT_THROW(helstrom_pure(1.1, 1), DomainError);
}

TEST(Metrology, Examples) {
  EXPECT_EQ(helstrom_metrology_approx(0.0, 4), 0.5);
  EXPECT_NEAR(helstrom_metrology_approx(0.01, 1), 0.5 * (1 - 0.01), 1e-15);
  EXPECT_LE(metrology_approx_gap({1e-3, 1e-3, 1e-3}, 4), 1e-4);
  EXPECT_THROW(helstrom_metrology_approx(-0.1, 2), DomainError);
}

TEST(Metrology, BinomialSumOracle) {
  for (int m = 1; m <= 12; ++m) {
    double s = 0.0;
    for (int k = 0; 2 * k <= m; ++k) s += std::tgamma(m + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(m - k + 1.0)) * (m - 2 * k);
    EXPECT_NEAR(metrology_binomial_sum(m), s, 1e-9 * s);
  }
}

TEST(Metrology, FirstOrderSlopeMatchesExactProperty) {
  // d P_H / d a at a = 0 from the exact bound, by a small-a secant.
  for (int m = 1; m <= 6; ++m) {
    const double a = 1e-6;
    const double exact = helstrom_general(build_example3({0.0, 0.0, a}), m);
    const double approx = helstrom_metrology_approx(a, m);
    EXPECT_NEAR((0.5 - exact) / a, (0.5 - approx) / a, 1e-4) << "m=" << m;
  }
}

TEST(TwoCopyExample2, ClosedFormMatchesNumeric) {
  for (double v : {0.0, 0.1, 0.5, 0.9}) {
    for (double alpha : {0.2, pi / 4, 1.3}) {
      EXPECT_NEAR(helstrom_two_copy_example2(v, alpha),
                  helstrom_general(build_example2({v, alpha}), 2), 1e-12);
    }
  }
}

TEST(Chernoff, IdenticalStates) {
  const ChernoffResult r = chernoff_numeric(build_example1({1.0}));
  EXPECT_NEAR(r.kappa, 1.0, 1e-14);
}

TEST(Chernoff, Example1ClosedForm) {
  EXPECT_EQ(chernoff_example1(0.0).kappa, 0.0);
  EXPECT_EQ(chernoff_example1(1.0).kappa, 1.0);
  EXPECT_NEAR(chernoff_example1(0.5).kappa, 0.8660254, 1e-7);
  for (double v : {0.1, 0.5, 0.9}) {
    const ChernoffResult n = chernoff_numeric(build_example1({v}));
    EXPECT_NEAR(n.kappa, std::sqrt(v * (2 - v)), 1e-8);
    EXPECT_NEAR(n.s_star, 0.5, 1e-6);
  }
}

TEST(Chernoff, Example2ClosedForm) {
  EXPECT_NEAR(chernoff_example2(0.3, 0.0).kappa, 1.0, 1e-15);
  EXPECT_NEAR(chernoff_example2(0.0, 0.7).kappa, std::cos(0.7) * std::cos(0.7), 1e-15);
  EXPECT_NEAR(chernoff_numeric(build_example2({0.25, pi / 5})).kappa,
              chernoff_example2(0.25, pi / 5).kappa, 1e-8);
  EXPECT_NEAR(chernoff_numeric(build_example2({0.0, 0.7})).kappa, std::cos(0.7) * std::cos(0.7),
              1e-8);
}

TEST(Chernoff, KappaIsMinimumOverSampledSProperty) {
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const StatePair p{testing::random_qubit(rng), testing::random_qubit(rng), 0.5};
    const ChernoffResult r = chernoff_numeric(p);
    EXPECT_NEAR(r.kappa, chernoff_trace(p, r.s_star), 1e-10);
    for (int k = 0; k <= 20; ++k) EXPECT_LE(r.kappa, chernoff_trace(p, k / 20.0) + 1e-10);
    EXPECT_LE(r.kappa, std::min(chernoff_trace(p, 0.0), chernoff_trace(p, 1.0)) + 1e-12);
  }
}

TEST(Chernoff, EndpointMinimum) {
  // rho_+ pure inside the support of a full-rank rho_-: g(s) is minimized at s = 1.
  const DensityMatrix pure(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}});
  const DensityMatrix mixed(ComplexMatrix{{0.9, 0.0}, {0.0, 0.1}});
  const ChernoffResult r = chernoff_numeric(StatePair(pure, mixed, 0.5));
  EXPECT_NEAR(r.kappa, std::min(chernoff_trace(StatePair(pure, mixed, 0.5), 1.0),
                                chernoff_trace(StatePair(pure, mixed, 0.5), 0.0)),
              1e-12);
}

TEST(ChernoffExample3, Examples) {
  EXPECT_NEAR(chernoff_example3_sstar(1e-6), 0.5, 1e-5);
  for (double a : {0.1, 0.2, 0.4}) {
    const StatePair p = build_example3({0.0, 0.0, a});
    const double s = chernoff_example3_sstar(a);
    const double h = 1e-5;
    const double fd = (chernoff_trace(p, s + h) - chernoff_trace(p, s - h)) / (2 * h);
    EXPECT_LE(std::abs(fd), 1e-7) << "a=" << a;
  }
  EXPECT_NEAR(chernoff_example3_sstar(0.3), chernoff_numeric(build_example3({0, 0, 0.3})).s_star,
              1e-6);
  EXPECT_THROW(chernoff_example3_sstar(0.0), DomainError);
  EXPECT_THROW(chernoff_example3_sstar(0.5), DomainError);
}

TEST(Diagnostics, Example1RatioBelowOne) {
  for (double v : {0.1, 0.5, 0.9}) {
    for (int m = 1; m <= 30; ++m) {
      const ExponentReport r = diagnostics_example1(v, m);
      EXPECT_LT(r.r, 1.0);
      EXPECT_GE(r.epsilon_m, r.epsilon_inf - 1e-12);
    }
  }
}

TEST(Diagnostics, PriorFactorAtHalf) {
  const ExponentReport r = diagnostics(build_example1({0.4}), 3);
  EXPECT_NEAR(std::exp(r.log_prior_factor / 3), std::pow(0.5, 1.0 / 3), 1e-15);
  EXPECT_NEAR(r.r, std::pow(r.helstrom, 1.0 / 3) / (std::pow(0.5, 1.0 / 3) * r.kappa), 1e-12);
  EXPECT_NEAR(r.r_epsilon, r.epsilon_prime_m / r.epsilon_inf, 1e-15);
}

TEST(Diagnostics, AnalyticMatchesExactPath) {
  for (int m = 1; m <= 8; ++m) {
    const ExponentReport a = diagnostics_example1(0.6, m, 0.3);
    const ExponentReport e = diagnostics(build_example1({0.6}, 0.3), m);
    EXPECT_NEAR(a.one_minus_r, e.one_minus_r, 1e-9);
    const ExponentReport pa = diagnostics_pure_example2(0.6, m);
    const ExponentReport pe = diagnostics(build_example2({0.0, 0.6}), m);
    EXPECT_NEAR(pa.one_minus_r, pe.one_minus_r, 1e-8);
  }
}

TEST(Diagnostics, Example1OneMinusRDecreasesWithinParity) {
  double prev[2] = {1.0, 1.0};
  for (int m = 2; m <= 30; ++m) {
    const double x = diagnostics_example1(0.8, m).one_minus_r;
    EXPECT_LT(x, prev[m % 2]) << "m=" << m;
    prev[m % 2] = x;
  }
}

TEST(Diagnostics, ZeroHelstromUsesInfiniteSentinel) {
  const ExponentReport r = diagnostics_example1(0.0, 3);
  EXPECT_TRUE(r.undefined_at_zero);
  EXPECT_TRUE(std::isinf(r.epsilon_m));
}

TEST(Diagnostics, ViolationIsReported) {
  EXPECT_THROW(diagnostics_from(std::log(0.49), 0.5, {0.5, 0.5}, 1), BoundViolation);
  EXPECT_THROW(diagnostics_from(std::log(0.1), 1.0, {0.5, 0.5}, 1), DomainError);
}

TEST(Delta, Examples) {
  const StatePair p = build_example1({0.8});
  EXPECT_EQ(delta(p, 3, 3), 0.0);
  EXPECT_EQ(delta_epsilon(p, 3, 3), 0.0);
  double prev = 1.0;
  for (int m = 2; m <= 20; ++m) {
    const double d = delta(diagnostics_example1(0.8, m + 2), diagnostics_example1(0.8, m));
    EXPECT_GT(d, 0.0) << "m=" << m;
    if (m % 2 == 0) {
      EXPECT_LT(d, prev) << "m=" << m;
      prev = d;
    }
  }
  for (int m = 1; m <= 20; ++m) {
    EXPECT_GT(delta(diagnostics_pure_example2(pi / 4, m + 1), diagnostics_pure_example2(pi / 4, m)),
              0.0);
  }
}

TEST(LogHelpers, BinomialAndSumExp) {
  EXPECT_NEAR(log_binomial(10, 3), std::log(120.0), 1e-12);
  EXPECT_EQ(log_binomial(7, 0), 0.0);
  const std::vector<double> xs = {std::log(1.0), std::log(2.0), std::log(3.0)};
  EXPECT_NEAR(log_sum_exp(xs), std::log(6.0), 1e-15);
  EXPECT_EQ(log_sum_exp(std::vector<double>{}), -std::numeric_limits<double>::infinity());
  const std::vector<double> big = {1000.0, 1000.0};
  EXPECT_NEAR(log_sum_exp(big), 1000.0 + std::log(2.0), 1e-12);
}

}  // namespace
}  // namespace qdisc
