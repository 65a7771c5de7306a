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

#ifndef QDISC_TESTS_TEST_UTIL_HPP
#define QDISC_TESTS_TEST_UTIL_HPP

#include <cmath>
#include <numbers>
#include <random>

#include "qdisc/matops.hpp"
#include "qdisc/states.hpp"

namespace qdisc::testing {

inline ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), g(rng));
  }
  return a;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, Eigen::Index dim) {
  const ComplexMatrix a = random_matrix(rng, dim);
  return 0.5 * (a + a.adjoint());
}

/// Unit-trace PSD matrix of any dimension.
inline ComplexMatrix random_psd(std::mt19937_64& rng, Eigen::Index dim) {
  const ComplexMatrix a = random_matrix(rng, dim);
  ComplexMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

/// dim must be a power of two.
inline DensityMatrix random_density(std::mt19937_64& rng, Eigen::Index dim) {
  return DensityMatrix(random_psd(rng, dim));
}

/// Uniform in the Bloch ball.
inline DensityMatrix random_qubit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double z = 2.0 * u(rng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * u(rng);
  const double r = std::cbrt(u(rng));
  const double s = std::sqrt(1.0 - z * z);
  return DensityMatrix(0.5 * (identity(2) + r * (s * std::cos(phi) * pauli_x() +
                                                 s * std::sin(phi) * pauli_y() + z * pauli_z())));
}

/// Entrywise Kronecker product by index arithmetic.
inline ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    }
  }
  return out;
}

/// Trace norm via singular values, independent of the Hermitian eigensolver.
inline double trace_norm_oracle(const ComplexMatrix& a) {
  return Eigen::JacobiSVD<ComplexMatrix>(a).singularValues().sum();
}

/// Helstrom error by direct trace-norm evaluation.
inline double helstrom_oracle(const ComplexMatrix& a, const ComplexMatrix& b, double q) {
  return 0.5 * (1.0 - trace_norm_oracle(q * a - (1.0 - q) * b));
}

inline ComplexMatrix tensor_oracle(const ComplexMatrix& rho, int m) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int k = 0; k < m; ++k) out = kron_oracle(out, rho);
  return out;
}

}  // namespace qdisc::testing

#endif  // QDISC_TESTS_TEST_UTIL_HPP
