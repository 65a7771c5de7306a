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

// Qubit state families and the binary discrimination problem container.

#ifndef QDISC_STATES_HPP
#define QDISC_STATES_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "qdisc/matops.hpp"

namespace qdisc {

/// Largest matrix dimension the exact (non-analytic) paths will build: 2^12.
inline constexpr std::size_t kDefaultDimensionCap = std::size_t{1} << 12;

inline constexpr double kStateTol = 1e-12;

/// Hermitian, unit-trace, positive semidefinite matrix of dimension 2^n.
class DensityMatrix {
 public:
  /// Validates every invariant. Throws NotHermitian, NotPSD or DomainError.
  explicit DensityMatrix(ComplexMatrix m);

  /// Skips the eigenvalue check; for products of already-valid states.
  static DensityMatrix trusted(ComplexMatrix m, int n_qubits);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  int n_qubits() const { return n_qubits_; }

 private:
  DensityMatrix() = default;
  ComplexMatrix m_;
  int n_qubits_ = 0;
};

struct StatePair {
  DensityMatrix rho_plus;
  DensityMatrix rho_minus;
  double prior_q;

  /// Throws DomainError on a dimension mismatch or q outside [0, 1].
  StatePair(DensityMatrix plus, DensityMatrix minus, double q);

  /// The same states with a different prior.
  StatePair with_prior(double q) const { return StatePair(rho_plus, rho_minus, q); }
  /// Swaps the hypotheses: (rho_-, rho_+, 1 - q).
  StatePair swapped() const { return StatePair(rho_minus, rho_plus, 1.0 - prior_q); }
  /// Prior-weighted average q rho_+ + (1 - q) rho_-.
  ComplexMatrix average() const;
};

struct Example1Params {
  double v;
};

struct Example2Params {
  double v;
  double alpha;  // radians
};

struct Example3Params {
  double theta_x;
  double theta_y;
  double theta_z;

  double norm() const;
};

struct DiagonalStatePair {
  std::vector<double> lambdas_1;
  std::vector<double> lambdas_2;
  double prior_q;

  /// Throws DomainError unless both vectors are probability vectors of equal length.
  DiagonalStatePair(std::vector<double> l1, std::vector<double> l2, double q);
};

/// rho_+ = diag((2 - v)/2, v/2), rho_- = diag(v/2, (2 - v)/2).
StatePair build_example1(Example1Params p, double q = 0.5);

/// rho_+- = (I + (1 - v)(cos(alpha) Z +- sin(alpha) X)) / 2.
StatePair build_example2(Example2Params p, double q = 0.5);

/// rho_+ = I/2, rho_- = I/2 + theta . sigma. Throws NotPSD when |theta| > 1/2.
StatePair build_example3(Example3Params p, double q = 0.5);

/// Spectra of the Example 1 pair in the computational basis.
DiagonalStatePair example1_spectra(double v, double q = 0.5);

/// m-fold Kronecker power. Throws DimensionCapExceeded or DomainError (m < 1).
DensityMatrix tensor_power(const DensityMatrix& rho, int m,
                           std::size_t dim_cap = kDefaultDimensionCap);

/// Throws DimensionCapExceeded when 2^(n_qubits * m) exceeds dim_cap.
void check_dimension(int n_qubits, int m, std::size_t dim_cap = kDefaultDimensionCap);

using BlochVector = std::array<double, 3>;

/// (x, y, z) with rho = (I + x X + y Y + z Z) / 2. Throws DomainError for non-qubits.
BlochVector bloch_vector(const DensityMatrix& rho);

}  // namespace qdisc

#endif  // QDISC_STATES_HPP
