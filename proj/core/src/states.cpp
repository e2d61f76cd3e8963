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
#include "ewit/states.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ewit/rng.hpp"

namespace ewit {

int qubit_count_for_dim(Eigen::Index dim) {
  if (dim < 2 || dim > kMaxDim || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("state dimension must be a power of two in [2, 1024]");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

QubitState make_state(CVec vec, std::string label, const Tolerances& tol) {
  const int n = qubit_count_for_dim(vec.size());
  const double norm_dev = std::abs(vec.squaredNorm() - 1.0);
  if (norm_dev > tol.normalization) {
    std::ostringstream what;
    what << "state '" << label << "' not normalized (|norm^2 - 1| = " << norm_dev << ")";
    throw std::invalid_argument(what.str());
  }
  return QubitState{n, std::move(vec), std::move(label)};
}

QubitState make_w(int n) {
  if (n < 2) {
    throw std::invalid_argument("make_w: need at least 2 qubits");
  }
  if (n > 10) {
    throw std::invalid_argument("make_w: at most 10 qubits supported");
  }
  CVec vec = CVec::Zero(Eigen::Index{1} << n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int m = 0; m < n; ++m) {
    vec(Eigen::Index{1} << m) = amp;
  }
  return QubitState{n, std::move(vec), "W" + std::to_string(n)};
}

QubitState make_psi4() {
  CVec vec = CVec::Zero(16);
  const double a = 1.0 / std::sqrt(3.0);
  vec(0b0011) = a;
  vec(0b1100) = a;
  for (int idx : {0b0110, 0b1001, 0b0101, 0b1010}) {
    vec(idx) = -0.5 * a;
  }
  return QubitState{4, std::move(vec), "Psi4"};
}

QubitState make_ghz_bar() {
  CVec zero_bar(2), one_bar(2);
  zero_bar << 1.0, Complex(0, 1);
  zero_bar /= std::sqrt(2.0);
  one_bar << -1.0, Complex(0, 1);
  one_bar /= std::sqrt(2.0);
  const CVec vec =
      (kron(kron(zero_bar, zero_bar), zero_bar) + kron(kron(one_bar, one_bar), one_bar)) /
      std::sqrt(2.0);
  return QubitState{3, vec, "GHZbar"};
}

QubitState sample_haar(int n, std::uint64_t seed) {
  if (n < 1 || n > 10) {
    throw std::invalid_argument("sample_haar: n must be in [1, 10]");
  }
  Rng rng(seed);
  const Eigen::Index dim = Eigen::Index{1} << n;
  CVec vec(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    vec(i) = Complex(rng.normal(), rng.normal());
  }
  vec /= vec.norm();
  return QubitState{n, std::move(vec), "haar(n=" + std::to_string(n) + ")"};
}

namespace {

std::vector<int> mask_to_qubits(int n, unsigned mask) {
  std::vector<int> qubits;
  for (int q = 0; q < n; ++q) {
    if (mask & (1u << (n - 1 - q))) qubits.push_back(q);
  }
  return qubits;
}

std::string qubits_to_string(const std::vector<int>& qs) {
  std::string s = "{";
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(qs[i]);
  }
  return s + "}";
}

}  // namespace

QubitState sample_biseparable(int n, std::uint64_t seed) {
  if (n < 3) {
    throw std::invalid_argument("sample_biseparable: need at least 3 qubits");
  }
  if (n > 10) {
    throw std::invalid_argument("sample_biseparable: at most 10 qubits supported");
  }
  Rng rng(seed);
  // Canonical bipartitions keep qubit 0 on side A; there are 2^(n-1)-1.
  const unsigned top_bit = 1u << (n - 1);
  const unsigned count = top_bit - 1;  // choices for the rest of side A
  const unsigned rest = static_cast<unsigned>(rng.below(count));  // excludes all-ones
  const unsigned mask_a = top_bit | rest;
  const std::vector<int> side_a = mask_to_qubits(n, mask_a);
  const std::vector<int> side_b = mask_to_qubits(n, ~mask_a & (2u * top_bit - 1));

  auto haar_part = [&rng](int qubits) {
    const Eigen::Index dim = Eigen::Index{1} << qubits;
    CVec v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      v(i) = Complex(rng.normal(), rng.normal());
    }
    v /= v.norm();
    return v;
  };
  const CVec va = haar_part(static_cast<int>(side_a.size()));
  const CVec vb = haar_part(static_cast<int>(side_b.size()));

  // Scatter the product amplitudes back into natural qubit order.
  const Eigen::Index dim = Eigen::Index{1} << n;
  CVec vec(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    Eigen::Index ia = 0, ib = 0;
    for (int q : side_a) ia = (ia << 1) | ((i >> (n - 1 - q)) & 1);
    for (int q : side_b) ib = (ib << 1) | ((i >> (n - 1 - q)) & 1);
    vec(i) = va(ia) * vb(ib);
  }
  std::ostringstream label;
  label << "biseparable(n=" << n << ",seed=" << seed << ",cut=" << qubits_to_string(side_a)
        << "|" << qubits_to_string(side_b) << ")";
  return QubitState{n, std::move(vec), label.str()};
}

NoisyState mix_white_noise(const QubitState& psi, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("mix_white_noise: p must lie in [0, 1]");
  }
  const Eigen::Index dim = psi.vec.size();
  CMat rho = p * (psi.vec * psi.vec.adjoint());
  rho += CMat::Identity(dim, dim) * ((1.0 - p) / static_cast<double>(dim));
  return NoisyState{std::move(rho), p, psi};
}

CMat pure_density(const QubitState& psi) { return psi.vec * psi.vec.adjoint(); }

void save_state(const QubitState& state, std::ostream& out) {
  out << "n=" << state.n << "\n";
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < state.vec.size(); ++i) {
    out << state.vec(i).real() << " " << state.vec(i).imag() << "\n";
  }
}

void save_state(const QubitState& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("save_state: cannot open '" + path + "'");
  }
  save_state(state, out);
}

QubitState load_state(std::istream& in, std::string label, const Tolerances& tol) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("n=", 0) != 0) {
    throw std::runtime_error("state file: expected first line 'n=<k>'");
  }
  int n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoi(header.substr(2), &pos);
    if (pos + 2 != header.size()) throw std::invalid_argument("trailing junk");
  } catch (const std::exception&) {
    throw std::runtime_error("state file: malformed header '" + header + "'");
  }
  if (n < 1 || n > 10) {
    throw std::runtime_error("state file: qubit count out of range [1, 10]");
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  CVec vec(dim);
  std::string line;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (!std::getline(in, line)) {
      throw std::runtime_error("state file: expected " + std::to_string(dim) +
                               " amplitude lines, got " + std::to_string(i));
    }
    std::istringstream row(line);
    double re = 0.0, im = 0.0;
    if (!(row >> re >> im)) {
      throw std::runtime_error("state file: malformed amplitude line " + std::to_string(i + 2) +
                               ": '" + line + "'");
    }
    vec(i) = Complex(re, im);
  }
  return make_state(std::move(vec), std::move(label), tol);
}

QubitState load_state(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_state: cannot open '" + path + "'");
  }
  return load_state(in, path, tol);
}

}  // namespace ewit
