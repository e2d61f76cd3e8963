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

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ewit/tensor.hpp"

namespace ewit {

// Basis convention, used everywhere in the toolkit: index bit m of a
// computational basis state, counted most-significant first, is qubit m.
// Bit value 0 is |0> (H polarization, sigma_z eigenvalue +1), bit value 1
// is |1> (V polarization, eigenvalue -1).

/// Pure n-qubit state with a normalized amplitude vector of dim 2^n.
struct QubitState {
  int n = 0;
  CVec vec;
  std::string label;
};

/// Number of qubits for a state-vector dimension; rejects non-powers of two.
int qubit_count_for_dim(Eigen::Index dim);

/// Validates dimension and normalization (within tol.normalization).
QubitState make_state(CVec vec, std::string label,
                      const Tolerances& tol = default_tolerances());

/// |W_n> with amplitude 1/sqrt(n) on every weight-1 basis state. Requires n >= 2.
QubitState make_w(int n);

/// Four-qubit superposition of a GHZ pair and the symmetrized two-singlet
/// terms: (|0011> + |1100> - (|0110>+|1001>+|0101>+|1010>)/2) / sqrt(3).
QubitState make_psi4();

/// (|000>+|111>)/sqrt(2) written in the barred basis |0b> = (|0>+i|1>)/sqrt(2),
/// |1b> = -(|0>-i|1>)/sqrt(2). Expands to (i/2)(|001>+|010>+|100>-|111>) in the
/// computational basis.
QubitState make_ghz_bar();

/// Haar-random pure state on n qubits (normalized complex Gaussian vector).
QubitState sample_haar(int n, std::uint64_t seed);

/// Product state across a uniformly chosen bipartition, Haar-random on each
/// side, amplitudes mapped back to natural qubit order. Requires n >= 3.
QubitState sample_biseparable(int n, std::uint64_t seed);

/// rho = p |psi><psi| + (1-p) I/2^n.
struct NoisyState {
  CMat rho;
  double p = 1.0;
  QubitState base;
};

NoisyState mix_white_noise(const QubitState& psi, double p);

CMat pure_density(const QubitState& psi);

// Text format: one line "n=<k>", then 2^k lines "re im" in index order,
// printed with 17 significant digits so a round trip is bit-faithful.
void save_state(const QubitState& state, std::ostream& out);
void save_state(const QubitState& state, const std::string& path);
QubitState load_state(std::istream& in, std::string label,
                      const Tolerances& tol = default_tolerances());
QubitState load_state(const std::string& path,
                      const Tolerances& tol = default_tolerances());

}  // namespace ewit
