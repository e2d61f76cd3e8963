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
#include "ewit/schmidt.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ewit {

std::string partition_to_string(const Bipartition& part) {
  auto side = [](const std::vector<int>& qs) {
    std::string s = "{";
    for (std::size_t i = 0; i < qs.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(qs[i]);
    }
    return s + "}";
  };
  return side(part.side_a) + "|" + side(part.side_b);
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
  if (n < 2 || n > 10) {
    throw std::invalid_argument("enumerate_bipartitions: n must be in [2, 10]");
  }
  std::vector<Bipartition> parts;
  parts.reserve((std::size_t{1} << (n - 1)) - 1);
  // mask bit (n-1-q) selects qubit q for side_a; qubit 0 always selected.
  const unsigned top_bit = 1u << (n - 1);
  for (unsigned rest = 0; rest + 1 < top_bit; ++rest) {
    const unsigned mask = top_bit | rest;
    Bipartition part;
    part.n = n;
    for (int q = 0; q < n; ++q) {
      if (mask & (1u << (n - 1 - q))) {
        part.side_a.push_back(q);
      } else {
        part.side_b.push_back(q);
      }
    }
    parts.push_back(std::move(part));
  }
  std::sort(parts.begin(), parts.end(),
            [](const Bipartition& a, const Bipartition& b) { return a.side_a < b.side_a; });
  return parts;
}

namespace {

void validate_partition(const QubitState& psi, const Bipartition& part) {
  if (part.n != psi.n) {
    throw std::invalid_argument("coefficient_matrix: partition and state qubit counts differ");
  }
  std::vector<bool> seen(static_cast<std::size_t>(part.n), false);
  auto mark = [&](const std::vector<int>& side) {
    for (int q : side) {
      if (q < 0 || q >= part.n || seen[static_cast<std::size_t>(q)]) {
        throw std::invalid_argument("coefficient_matrix: malformed bipartition");
      }
      seen[static_cast<std::size_t>(q)] = true;
    }
  };
  mark(part.side_a);
  mark(part.side_b);
  if (part.side_a.empty() || part.side_b.empty() ||
      part.side_a.size() + part.side_b.size() != static_cast<std::size_t>(part.n)) {
    throw std::invalid_argument("coefficient_matrix: sides must be nonempty and cover all qubits");
  }
}

}  // namespace

CMat coefficient_matrix(const QubitState& psi, const Bipartition& part) {
  validate_partition(psi, part);
  const int n = psi.n;
  const Eigen::Index rows = Eigen::Index{1} << part.side_a.size();
  const Eigen::Index cols = Eigen::Index{1} << part.side_b.size();
  CMat c(rows, cols);
  for (Eigen::Index i = 0; i < psi.vec.size(); ++i) {
    Eigen::Index r = 0, k = 0;
    for (int q : part.side_a) r = (r << 1) | ((i >> (n - 1 - q)) & 1);
    for (int q : part.side_b) k = (k << 1) | ((i >> (n - 1 - q)) & 1);
    c(r, k) = psi.vec(i);
  }
  return c;
}

SchmidtReport schmidt_report(const QubitState& psi, const Bipartition& part) {
  SchmidtReport report;
  report.partition = part;
  report.coefficients = singular_values(coefficient_matrix(psi, part));
  report.max_sq = report.coefficients.empty()
                      ? 0.0
                      : report.coefficients.front() * report.coefficients.front();
  return report;
}

AlphaResult alpha(const QubitState& psi) {
  AlphaResult result;
  const auto parts = enumerate_bipartitions(psi.n);
  result.reports.reserve(parts.size());
  for (const auto& part : parts) {
    result.reports.push_back(schmidt_report(psi, part));
  }
  // Sequential max over the enumeration order; side_a lists are ascending, so
  // keeping the first strict maximum breaks exact ties toward the
  // lexicographically smallest side_a.
  const SchmidtReport* best = &result.reports.front();
  for (const auto& report : result.reports) {
    if (report.max_sq > best->max_sq) best = &report;
  }
  result.value = best->max_sq;
  result.argmax = best->partition;
  return result;
}

nlohmann::ordered_json alpha_report_json(const QubitState& psi, const AlphaResult& result) {
  nlohmann::ordered_json doc;
  doc["state"] = psi.label;
  doc["n"] = psi.n;
  doc["alpha"] = result.value;
  doc["argmax"] = {{"side_a", result.argmax.side_a}, {"side_b", result.argmax.side_b}};
  auto& parts = doc["partitions"] = nlohmann::ordered_json::array();
  for (const auto& report : result.reports) {
    parts.push_back({{"side_a", report.partition.side_a},
                     {"side_b", report.partition.side_b},
                     {"schmidt_coefficients", report.coefficients},
                     {"max_sq", report.max_sq}});
  }
  return doc;
}

}  // namespace ewit
