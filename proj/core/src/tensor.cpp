// Copyright 2026 The ewit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "ewit/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ewit {

const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

namespace {

CMat make_pauli(Complex a, Complex b, Complex c, Complex d) {
  CMat m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

const CMat& pauli_x() {
  static const CMat m = make_pauli(0, 1, 1, 0);
  return m;
}

const CMat& pauli_y() {
  static const CMat m = make_pauli(0, Complex(0, -1), Complex(0, 1), 0);
  return m;
}

const CMat& pauli_z() {
  static const CMat m = make_pauli(1, 0, 0, -1);
  return m;
}

const CMat& identity2() {
  static const CMat m = CMat::Identity(2, 2);
  return m;
}

CMat kron(const CMat& a, const CMat& b) {
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  if (rows > kMaxDim || cols > kMaxDim) {
    throw std::invalid_argument("kron: result exceeds the 2^10 dimension cap");
  }
  CMat out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVec kron(const CVec& a, const CVec& b) {
  const Eigen::Index dim = a.size() * b.size();
  if (dim > kMaxDim) {
    throw std::invalid_argument("kron: result exceeds the 2^10 dimension cap");
  }
  CVec out(dim);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

std::vector<double> singular_values(const CMat& m) {
  if (!m.allFinite()) {
    throw std::invalid_argument("singular_values: non-finite entries");
  }
  if (m.rows() * m.cols() > kMaxDim) {
    throw std::invalid_argument("singular_values: rows*cols exceeds 1024");
  }
  // Only the values are needed, so diagonalize the smaller Gram matrix and
  // take square roots of its (clamped) eigenvalues.
  const bool rows_smaller = m.rows() <= m.cols();
  const CMat gram = rows_smaller ? CMat(m * m.adjoint()) : CMat(m.adjoint() * m);
  Eigen::SelfAdjointEigenSolver<CMat> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("singular_values: eigensolver failed");
  }
  const auto& eigs = solver.eigenvalues();  // ascending
  std::vector<double> sv(static_cast<std::size_t>(eigs.size()));
  for (Eigen::Index k = 0; k < eigs.size(); ++k) {
    sv[static_cast<std::size_t>(eigs.size() - 1 - k)] = std::sqrt(std::max(0.0, eigs(k)));
  }
  return sv;
}

double hermitian_deviation(const CMat& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_deviation: matrix not square");
  }
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMat& m, double tol) {
  return m.rows() == m.cols() && hermitian_deviation(m) <= tol;
}

EigResult hermitian_eig(const CMat& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_eig: matrix not square");
  }
  if (m.rows() > kMaxDim) {
    throw std::invalid_argument("hermitian_eig: dimension exceeds 2^10");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument("hermitian_eig: non-finite entries");
  }
  if (hermitian_deviation(m) > tol.hermitian_input) {
    throw std::invalid_argument("hermitian_eig: input not Hermitian");
  }
  const CMat sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver failed");
  }
  EigResult result;
  const Eigen::Index n = sym.rows();
  result.values.resize(static_cast<std::size_t>(n));
  result.vectors.resize(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = n - 1 - k;  // flip to descending
    result.values[static_cast<std::size_t>(k)] = solver.eigenvalues()(src);
    result.vectors[static_cast<std::size_t>(k)] = solver.eigenvectors().col(src);
  }
  return result;
}

DensityCheck check_density(const CMat& rho, const Tolerances& tol) {
  DensityCheck check;
  if (rho.rows() != rho.cols()) {
    check.diagnostic = "not square";
    return check;
  }
  check.hermitian_deviation = hermitian_deviation(rho);
  check.trace_deviation = std::abs(rho.trace() - Complex(1.0));
  const CMat sym = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> solver(sym, Eigen::EigenvaluesOnly);
  check.min_eigenvalue =
      solver.info() == Eigen::Success ? solver.eigenvalues().minCoeff() : -1.0;

  std::ostringstream what;
  if (check.hermitian_deviation > tol.hermitian) {
    what << "hermiticity violated (max |rho - rho^dag| = " << check.hermitian_deviation << "); ";
  }
  if (check.trace_deviation > tol.density_trace) {
    what << "trace violated (|tr - 1| = " << check.trace_deviation << "); ";
  }
  if (check.min_eigenvalue < -tol.positivity) {
    what << "positivity violated (min eigenvalue = " << check.min_eigenvalue << "); ";
  }
  check.diagnostic = what.str();
  check.ok = check.diagnostic.empty();
  return check;
}

}  // namespace ewit
