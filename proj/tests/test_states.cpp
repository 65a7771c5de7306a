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

#include "qdisc/errors.hpp"
#include "qdisc/states.hpp"
#include "test_util.hpp"

namespace qdisc {
namespace {

using std::numbers::pi;

double max_abs(const ComplexMatrix& a) { return a.cwiseAbs().maxCoeff(); }

void expect_valid_density(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  EXPECT_LE(hermiticity_defect(m), 1e-12);
  EXPECT_NEAR(m.trace().real(), 1.0, 1e-12);
  EXPECT_GE(hermitian_eigenvalues(m)[0], -1e-12);
}

TEST(DensityMatrix, Validation) {
  EXPECT_NO_THROW(DensityMatrix(0.5 * identity(2)));
  EXPECT_THROW(DensityMatrix(identity(2)), DomainError);
  EXPECT_THROW(DensityMatrix(identity(3) / 3.0), DomainError);
  EXPECT_THROW(DensityMatrix(pauli_z() + 0.5 * identity(2)), NotPSD);
  ComplexMatrix skew = 0.5 * identity(2);
  skew(0, 1) = 0.1;
  EXPECT_THROW((DensityMatrix(skew)), NotHermitian);
  EXPECT_EQ(DensityMatrix(identity(4) / 4.0).n_qubits(), 2);
}

TEST(StatePair, RejectsMismatchedDimensionOrPrior) {
  const DensityMatrix one(0.5 * identity(2));
  const DensityMatrix two(0.25 * identity(4));
  EXPECT_THROW(StatePair(one, two, 0.5), DomainError);
  EXPECT_THROW(StatePair(one, one, 1.5), DomainError);
  EXPECT_NO_THROW(StatePair(one, one, 0.0));
}

TEST(Example1, Limits) {
  const StatePair pure = build_example1({0.0});
  EXPECT_DOUBLE_EQ(pure.rho_plus.matrix()(0, 0).real(), 1.0);
  EXPECT_DOUBLE_EQ(pure.rho_minus.matrix()(1, 1).real(), 1.0);
  const StatePair mixed = build_example1({1.0});
  EXPECT_LT(max_abs(mixed.rho_plus.matrix() - 0.5 * identity(2)), 1e-15);
  EXPECT_LT(max_abs(mixed.rho_minus.matrix() - 0.5 * identity(2)), 1e-15);
}

TEST(Example1, HalfMixed) {
  const StatePair p = build_example1({0.5});
  EXPECT_DOUBLE_EQ(p.rho_plus.matrix()(0, 0).real(), 0.75);
  EXPECT_DOUBLE_EQ(p.rho_plus.matrix()(1, 1).real(), 0.25);
  EXPECT_THROW(build_example1({1.2}), DomainError);
  EXPECT_THROW(build_example1({-0.1}), DomainError);
}

TEST(Example2, ZeroAngleGivesIdenticalStates) {
  for (double v : {0.0, 0.3, 1.0}) {
    const StatePair p = build_example2({v, 0.0});
    EXPECT_EQ(max_abs(p.rho_plus.matrix() - p.rho_minus.matrix()), 0.0);
  }
}

TEST(Example2, OrthogonalPureStates) {
  const StatePair p = build_example2({0.0, pi / 2.0});
  EXPECT_LT(std::abs((p.rho_plus.matrix() * p.rho_minus.matrix()).trace()), 1e-15);
}

TEST(Example2, PureOverlapIsCosSquared) {
  for (double alpha : {0.1, 0.5, 1.0, 1.4}) {
    const StatePair p = build_example2({0.0, alpha});
    const double overlap = (p.rho_plus.matrix() * p.rho_minus.matrix()).trace().real();
    EXPECT_NEAR(overlap, std::cos(alpha) * std::cos(alpha), 1e-14);
  }
}

TEST(Example2, MatchesPauliExpansion) {
  const double v = 0.3, alpha = 0.7;
  const StatePair p = build_example2({v, alpha});
  const ComplexMatrix expected_plus =
      0.5 * (identity(2) + (1 - v) * (std::cos(alpha) * pauli_z() + std::sin(alpha) * pauli_x()));
  const ComplexMatrix expected_minus =
      0.5 * (identity(2) + (1 - v) * (std::cos(alpha) * pauli_z() - std::sin(alpha) * pauli_x()));
  EXPECT_LT(max_abs(p.rho_plus.matrix() - expected_plus), 1e-15);
  EXPECT_LT(max_abs(p.rho_minus.matrix() - expected_minus), 1e-15);
}

TEST(Example1, SpectrumMatchesExample2) {
  for (double v : {0.1, 0.5, 0.9}) {
    const RealVector e1 = hermitian_eigenvalues(build_example1({v}).rho_plus.matrix());
    const RealVector e2 = hermitian_eigenvalues(build_example2({v, 0.8}).rho_plus.matrix());
    EXPECT_NEAR(e1[0], v / 2, 1e-14);
    EXPECT_NEAR(e1[1], (2 - v) / 2, 1e-14);
    EXPECT_NEAR(e2[0], e1[0], 1e-14);
    EXPECT_NEAR(e2[1], e1[1], 1e-14);
  }
}

TEST(Example3, Examples) {
  const StatePair zero = build_example3({0.0, 0.0, 0.0});
  EXPECT_EQ(max_abs(zero.rho_plus.matrix() - zero.rho_minus.matrix()), 0.0);
  const RealVector e = hermitian_eigenvalues(build_example3({0.0, 0.0, 0.2}).rho_minus.matrix());
  EXPECT_NEAR(e[0], 0.3, 1e-15);
  EXPECT_NEAR(e[1], 0.7, 1e-15);
  EXPECT_NEAR((Example3Params{0.01, 0.01, 0.01}).norm(), 0.01 * std::sqrt(3.0), 1e-17);
  EXPECT_THROW(build_example3({0.4, 0.4, 0.0}), NotPSD);
}

TEST(TensorPower, Examples) {
  const DensityMatrix rho(0.5 * identity(2));
  EXPECT_LT(max_abs(tensor_power(rho, 1).matrix() - rho.matrix()), 0.0 + 1e-300);
  EXPECT_LT(max_abs(tensor_power(rho, 3).matrix() - identity(8) / 8.0), 1e-16);
  const StatePair p = build_example1({0.5});
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 0.5625, 0.1875, 0.1875, 0.0625;
  EXPECT_LT(max_abs(tensor_power(p.rho_plus, 2).matrix() - expected), 1e-16);
}

TEST(TensorPower, DimensionCap) {
  const DensityMatrix rho(0.5 * identity(2));
  EXPECT_THROW(tensor_power(rho, 5, 16), DimensionCapExceeded);
  EXPECT_NO_THROW(tensor_power(rho, 4, 16));
  EXPECT_THROW(tensor_power(rho, 0), DomainError);
}

TEST(TensorPower, MatchesOracleAndStaysADensityProperty) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const DensityMatrix rho = testing::random_qubit(rng);
    const int m = 1 + trial % 5;
    const DensityMatrix t = tensor_power(rho, m);
    EXPECT_LT(max_abs(t.matrix() - testing::tensor_oracle(rho.matrix(), m)), 1e-14);
    EXPECT_NEAR(t.matrix().trace().real(), 1.0, 1e-10);
    EXPECT_GE(hermitian_eigenvalues(t.matrix())[0], -1e-10);
    EXPECT_EQ(t.n_qubits(), m);
  }
}

TEST(Constructors, OutputsAreValidDensitiesProperty) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double v = u(rng);
    const double alpha = u(rng) * pi / 2;
    for (const StatePair& p : {build_example1({v}), build_example2({v, alpha}),
                               build_example3({0.2 * u(rng), 0.2 * u(rng), 0.2 * u(rng)})}) {
      expect_valid_density(p.rho_plus);
      expect_valid_density(p.rho_minus);
    }
  }
}

TEST(BlochVector, RoundTrip) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = testing::random_qubit(rng);
    const BlochVector r = bloch_vector(rho);
    const ComplexMatrix rebuilt =
        0.5 * (identity(2) + r[0] * pauli_x() + r[1] * pauli_y() + r[2] * pauli_z());
    EXPECT_LT(max_abs(rebuilt - rho.matrix()), 1e-15);
  }
}

TEST(DiagonalStatePair, Validation) {
  EXPECT_NO_THROW(DiagonalStatePair({0.5, 0.5}, {0.2, 0.8}, 0.5));
  EXPECT_THROW(DiagonalStatePair({0.5, 0.6}, {0.2, 0.8}, 0.5), DomainError);
  EXPECT_THROW(DiagonalStatePair({1.0}, {0.2, 0.8}, 0.5), DomainError);
  EXPECT_THROW(DiagonalStatePair({1.2, -0.2}, {0.2, 0.8}, 0.5), DomainError);
  const DiagonalStatePair s = example1_spectra(0.4, 0.3);
  EXPECT_DOUBLE_EQ(s.lambdas_1[0], 0.8);
  EXPECT_DOUBLE_EQ(s.lambdas_2[0], 0.2);
  EXPECT_DOUBLE_EQ(s.prior_q, 0.3);
}

}  // namespace
}  // namespace qdisc
