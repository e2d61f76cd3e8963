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

namespace ewit {

/// Numerical tolerances used across the toolkit, collected in one place so
/// tests and callers agree on what "equal" means.
struct Tolerances {
  double normalization = 1e-12;   // |sum |amp|^2 - 1| for state vectors
  double hermitian = 1e-12;       // max |M - M^dag| for "Hermitian" matrices
  double hermitian_input = 1e-10; // acceptance threshold for eig/grouping inputs
  double density_trace = 1e-12;   // |tr(rho) - 1|
  double positivity = 1e-10;      // min eigenvalue >= -positivity
  double gram = 1e-10;            // singular value^2 vs Gram eigenvalues
  double eig = 1e-8;              // eigenpair residuals and orthonormality
  double decomposition = 1e-10;   // expand(decomposition) vs dense witness
  double grouping = 1e-9;         // greedy Pauli grouping expand check
  double imag_residue = 1e-10;    // tolerated imaginary part of traces
  double pauli_drop = 1e-12;      // Pauli coefficients treated as zero
  double axis_norm = 1e-12;       // Bloch axis unit-norm deviation
  double axis_match = 1e-9;       // axis equality when matching settings
  double probability_sum = 1e-10; // sum of outcome probabilities vs 1
};

const Tolerances& default_tolerances();

}  // namespace ewit
