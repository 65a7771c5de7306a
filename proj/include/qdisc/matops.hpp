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

// Dense complex matrix kernel.

#ifndef QDISC_MATOPS_HPP
#define QDISC_MATOPS_HPP

#include <complex>

#include <Eigen/Dense>

namespace qdisc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Entrywise tolerance for the Hermitian check.
inline constexpr double kHermitianTol = 1e-12;
/// Eigenvalues in [-kEigenClampTol, 0) are treated as round-off and clamped to zero.
inline constexpr double kEigenClampTol = 1e-12;

struct HermitianEigenSystem {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors;  // orthonormal columns, same order
};

/// max_ij |A_ij - conj(A_ji)|; infinity for non-square input.
double hermiticity_defect(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

/// Standard Kronecker product; the left factor indexes the most significant block.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigendecomposition of a Hermitian matrix. Throws NotHermitian.
HermitianEigenSystem hermitian_eig(const ComplexMatrix& a);

/// Ascending eigenvalues only; cheaper than hermitian_eig. Throws NotHermitian.
RealVector hermitian_eigenvalues(const ComplexMatrix& a);

/// Sum of absolute eigenvalues of a Hermitian matrix. Throws NotHermitian.
double trace_norm(const ComplexMatrix& a);

/// V diag(lambda^s) V^dagger for Hermitian PSD input and s in [0, 1].
///
/// Eigenvalues in [-1e-12, 0) are clamped to zero and a zero eigenvalue maps
/// to zero for every s, including s = 0, so frac_power(a, 0) is the projector
/// onto the support of a. Throws NegativeEigenvalue, NotHermitian, DomainError.
ComplexMatrix frac_power(const ComplexMatrix& a, double s);

/// Hermitian part (A + A^dagger) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix& a);

/// Projector onto the span of the eigenvectors whose eigenvalue satisfies pred.
template <typename Pred>
ComplexMatrix spectral_projector(const HermitianEigenSystem& es, Pred pred) {
  const auto n = es.eigenvectors.rows();
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < es.eigenvalues.size(); ++k) {
    if (pred(es.eigenvalues[k])) {
      p.noalias() += es.eigenvectors.col(k) * es.eigenvectors.col(k).adjoint();
    }
  }
  return p;
}

/// Pauli matrices and the identity, 2x2.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix identity(Eigen::Index dim);

}  // namespace qdisc

#endif  // QDISC_MATOPS_HPP
