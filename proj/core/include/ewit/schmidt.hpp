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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ewit/states.hpp"
#include "ewit/tensor.hpp"

namespace ewit {

/// A split of {0..n-1} into two nonempty groups. Canonical form keeps qubit 0
/// in side_a, so each unordered split appears exactly once.
struct Bipartition {
  int n = 0;
  std::vector<int> side_a;  // sorted, contains 0
  std::vector<int> side_b;  // sorted complement
};

std::string partition_to_string(const Bipartition& part);

/// All 2^(n-1) - 1 canonical bipartitions, ordered with side_a ascending
/// lexicographically. Requires 2 <= n <= 10.
std::vector<Bipartition> enumerate_bipartitions(int n);

/// Amplitudes reshaped along the bipartition: rows indexed by the side_a basis
/// (side_a[0] is the most significant row bit), columns by side_b.
CMat coefficient_matrix(const QubitState& psi, const Bipartition& part);

/// Schmidt coefficients of one bipartition, descending; max_sq = largest^2.
struct SchmidtReport {
  Bipartition partition;
  std::vector<double> coefficients;
  double max_sq = 0.0;
};

SchmidtReport schmidt_report(const QubitState& psi, const Bipartition& part);

/// Maximal squared overlap between psi and any biseparable state: the largest
/// squared Schmidt coefficient over all bipartitions. It is enough to scan
/// pure states that are product across one cut; convexity extends the bound
/// to mixtures. Ties go to the lexicographically smallest side_a.
struct AlphaResult {
  double value = 0.0;
  Bipartition argmax;
  std::vector<SchmidtReport> reports;  // one per bipartition, enumeration order
};

AlphaResult alpha(const QubitState& psi);

nlohmann::ordered_json alpha_report_json(const QubitState& psi, const AlphaResult& result);

}  // namespace ewit
