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

#include "qdisc/matops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

#include "qdisc/errors.hpp"

namespace qdisc {
namespace {

void require_hermitian(const ComplexMatrix& a, const char* who) {
  const double defect = hermiticity_defect(a);
  if (!(defect <= kHermitianTol)) {
    std::ostringstream msg;
    msg << who << ": matrix is not Hermitian (defect " << defect << ")";
    throw NotHermitian(msg.str());
  }
}

// Exactly diagonal with a real diagonal. Tensor powers of commuting states
// land here and skip the O(d^3) solver.
bool is_exactly_diagonal(const ComplexMatrix& a) {
  const auto n = a.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i != j && a(i, j) != Complex(0.0, 0.0)) return false;
    }
    if (a(j, j).imag() != 0.0) return false;
  }
  return true;
}

bool is_exactly_real(const ComplexMatrix& a) {
  return (a.imag().array() == 0.0).all();
}

}  // namespace

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    return std::numeric_limits<double>::infinity();
  }
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  return hermiticity_defect(a) <= tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  return (a + a.adjoint()) * 0.5;
}

HermitianEigenSystem hermitian_eig(const ComplexMatrix& a) {
  require_hermitian(a, "hermitian_eig");
  const auto n = a.rows();
  HermitianEigenSystem out;
  if (is_exactly_diagonal(a)) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
      return a(x, x).real() < a(y, y).real();
    });
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto src = order[static_cast<std::size_t>(k)];
      out.eigenvalues[k] = a(src, src).real();
      out.eigenvectors(src, k) = 1.0;
    }
    return out;
  }
  if (is_exactly_real(a)) {
    const Eigen::MatrixXd sym = 0.5 * (a.real() + a.real().transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors().cast<Complex>();
    return out;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(a));
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& a) {
  require_hermitian(a, "hermitian_eigenvalues");
  if (is_exactly_diagonal(a)) {
    RealVector d = a.diagonal().real();
    std::sort(d.data(), d.data() + d.size());
    return d;
  }
  if (is_exactly_real(a)) {
    const Eigen::MatrixXd sym = 0.5 * (a.real() + a.real().transpose());
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sym, Eigen::EigenvaluesOnly)
        .eigenvalues();
  }
  return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(hermitian_part(a), Eigen::EigenvaluesOnly)
      .eigenvalues();
}

double trace_norm(const ComplexMatrix& a) {
  return hermitian_eigenvalues(a).cwiseAbs().sum();
}

ComplexMatrix frac_power(const ComplexMatrix& a, double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw DomainError("frac_power: exponent must lie in [0, 1]");
  }
  HermitianEigenSystem es = hermitian_eig(a);
  RealVector powered(es.eigenvalues.size());
  for (Eigen::Index k = 0; k < es.eigenvalues.size(); ++k) {
    double lambda = es.eigenvalues[k];
    if (lambda < -kEigenClampTol) {
      std::ostringstream msg;
      msg << "frac_power: eigenvalue " << lambda << " below clamp threshold";
      throw NegativeEigenvalue(msg.str());
    }
    if (lambda <= 0.0) {
      powered[k] = 0.0;
    } else {
      powered[k] = std::pow(lambda, s);
    }
  }
  return es.eigenvectors * powered.cast<Complex>().asDiagonal() * es.eigenvectors.adjoint();
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << Complex(0.0, 0.0), Complex(0.0, -1.0), Complex(0.0, 1.0), Complex(0.0, 0.0);
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix identity(Eigen::Index dim) { return ComplexMatrix::Identity(dim, dim); }

}  // namespace qdisc
