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
#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ewit/tolerances.hpp"

namespace ewit {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Dense substrate for n <= 10 qubits. Dimensions are capped at 2^10 and all
// algorithms are allowed to be O(dim^3).
inline constexpr Eigen::Index kMaxDim = 1024;

const CMat& pauli_x();
const CMat& pauli_y();
const CMat& pauli_z();
const CMat& identity2();

/// Kronecker product, (a x b)[(i*rows_b+k),(j*cols_b+l)] = a(i,j)*b(k,l).
CMat kron(const CMat& a, const CMat& b);
CVec kron(const CVec& a, const CVec& b);

/// Singular values in descending order; count = min(rows, cols).
/// Computed from the eigenvalues of the smaller Gram matrix.
std::vector<double> singular_values(const CMat& m);

struct EigResult {
  std::vector<double> values;  // descending
  std::vector<CVec> vectors;   // orthonormal, vectors[k] pairs with values[k]
};

/// Eigendecomposition of a Hermitian matrix (input Hermitian within
/// tol.hermitian_input; rejected otherwise).
EigResult hermitian_eig(const CMat& m, const Tolerances& tol = default_tolerances());

/// max |M - M^dag| over entries.
double hermitian_deviation(const CMat& m);

bool is_hermitian(const CMat& m, double tol);

struct DensityCheck {
  bool ok = false;
  double hermitian_deviation = 0.0;
  double trace_deviation = 0.0;
  double min_eigenvalue = 0.0;
  std::string diagnostic;  // empty when ok
};

/// Validates a density matrix: Hermitian, unit trace, positive semidefinite
/// within tolerances.
DensityCheck check_density(const CMat& rho, const Tolerances& tol = default_tolerances());

}  // namespace ewit
