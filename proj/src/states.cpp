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

#include "qdisc/states.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "qdisc/errors.hpp"

namespace qdisc {
namespace {

int log2_exact(Eigen::Index dim) {
  int n = 0;
  Eigen::Index d = 1;
  while (d < dim) {
    d *= 2;
    ++n;
  }
  if (d != dim) {
    throw DomainError("density matrix dimension must be a power of two");
  }
  return n;
}

void check_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << what << " must lie in [0, 1], got " << x;
    throw DomainError(msg.str());
  }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw DomainError("density matrix must be square and non-empty");
  }
  n_qubits_ = log2_exact(m_.rows());
  if (!is_hermitian(m_, kStateTol)) {
    throw NotHermitian("density matrix is not Hermitian");
  }
  const Complex tr = m_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kStateTol) {
    std::ostringstream msg;
    msg << "density matrix trace " << tr.real() << " differs from 1";
    throw DomainError(msg.str());
  }
  const double min_eig = hermitian_eigenvalues(m_)[0];
  if (min_eig < -kStateTol) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << min_eig;
    throw NotPSD(msg.str());
  }
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix m, int n_qubits) {
  DensityMatrix out;
  out.m_ = std::move(m);
  out.n_qubits_ = n_qubits;
  return out;
}

StatePair::StatePair(DensityMatrix plus, DensityMatrix minus, double q)
    : rho_plus(std::move(plus)), rho_minus(std::move(minus)), prior_q(q) {
  if (rho_plus.dim() != rho_minus.dim()) {
    throw DomainError("state pair dimensions differ");
  }
  check_unit_interval(q, "prior q");
}

ComplexMatrix StatePair::average() const {
  return prior_q * rho_plus.matrix() + (1.0 - prior_q) * rho_minus.matrix();
}

double Example3Params::norm() const {
  return std::sqrt(theta_x * theta_x + theta_y * theta_y + theta_z * theta_z);
}

DiagonalStatePair::DiagonalStatePair(std::vector<double> l1, std::vector<double> l2, double q)
    : lambdas_1(std::move(l1)), lambdas_2(std::move(l2)), prior_q(q) {
  if (lambdas_1.empty() || lambdas_1.size() != lambdas_2.size()) {
    throw DomainError("diagonal spectra must be non-empty and of equal length");
  }
  for (const auto* lam : {&lambdas_1, &lambdas_2}) {
    for (double x : *lam) {
      if (!(x >= 0.0)) throw DomainError("diagonal spectrum has a negative entry");
    }
    const double total = std::accumulate(lam->begin(), lam->end(), 0.0);
    if (std::abs(total - 1.0) > kStateTol) {
      throw DomainError("diagonal spectrum does not sum to 1");
    }
  }
  check_unit_interval(q, "prior q");
}

StatePair build_example1(Example1Params p, double q) {
  check_unit_interval(p.v, "mixedness v");
  ComplexMatrix plus = ComplexMatrix::Zero(2, 2);
  ComplexMatrix minus = ComplexMatrix::Zero(2, 2);
  plus(0, 0) = (2.0 - p.v) / 2.0;
  plus(1, 1) = p.v / 2.0;
  minus(0, 0) = p.v / 2.0;
  minus(1, 1) = (2.0 - p.v) / 2.0;
  return StatePair(DensityMatrix(plus), DensityMatrix(minus), q);
}

StatePair build_example2(Example2Params p, double q) {
  check_unit_interval(p.v, "mixedness v");
  const double r = 1.0 - p.v;
  const ComplexMatrix base = identity(2) + r * std::cos(p.alpha) * pauli_z();
  const ComplexMatrix tilt = r * std::sin(p.alpha) * pauli_x();
  return StatePair(DensityMatrix(0.5 * (base + tilt)), DensityMatrix(0.5 * (base - tilt)), q);
}

StatePair build_example3(Example3Params p, double q) {
  const double a = p.norm();
  if (!std::isfinite(a) || a > 0.5 + kStateTol) {
    std::ostringstream msg;
    msg << "example 3 needs |theta| <= 1/2, got " << a;
    throw NotPSD(msg.str());
  }
  const ComplexMatrix half = 0.5 * identity(2);
  const ComplexMatrix shifted =
      half + p.theta_x * pauli_x() + p.theta_y * pauli_y() + p.theta_z * pauli_z();
  return StatePair(DensityMatrix(half), DensityMatrix(shifted), q);
}

DiagonalStatePair example1_spectra(double v, double q) {
  check_unit_interval(v, "mixedness v");
  return DiagonalStatePair({(2.0 - v) / 2.0, v / 2.0}, {v / 2.0, (2.0 - v) / 2.0}, q);
}

void check_dimension(int n_qubits, int m, std::size_t dim_cap) {
  if (m < 1) throw DomainError("copy count must be at least 1");
  const long long bits = static_cast<long long>(n_qubits) * m;
  if (bits >= 62 || (std::size_t{1} << bits) > dim_cap) {
    std::ostringstream msg;
    msg << "dimension 2^" << bits << " exceeds cap " << dim_cap;
    throw DimensionCapExceeded(msg.str());
  }
}

DensityMatrix tensor_power(const DensityMatrix& rho, int m, std::size_t dim_cap) {
  check_dimension(rho.n_qubits(), m, dim_cap);
  ComplexMatrix out = rho.matrix();
  for (int k = 1; k < m; ++k) {
    out = kron(out, rho.matrix());
  }
  return DensityMatrix::trusted(std::move(out), rho.n_qubits() * m);
}

BlochVector bloch_vector(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DomainError("Bloch vector needs a qubit state");
  const ComplexMatrix& m = rho.matrix();
  return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

}  // namespace qdisc
