// Copyright 2026 The qneuron Authors
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

#include "qneuron/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qneuron/linalg.hpp"
#include "rng.hpp"

namespace qneuron {

namespace {

void check_qubit_list(int num_qubits, std::span<const int> qubits,
                      const char* what) {
  if (qubits.empty()) {
    throw std::invalid_argument(std::string(what) + " list must be non-empty");
  }
  for (int q : qubits) {
    if (q < 0 || q >= num_qubits) {
      throw std::invalid_argument(std::string(what) + " qubit " +
                                  std::to_string(q) + " out of range");
    }
  }
  std::vector<int> sorted(qubits.begin(), qubits.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument(std::string(what) + " list repeats a qubit");
  }
}

void check_unitary(std::span<const cdouble> matrix, std::size_t dim) {
  if (matrix.size() != dim * dim) {
    throw std::invalid_argument("matrix size does not match target count");
  }
  if (!linalg::is_unitary(matrix, dim, kStateTolerance)) {
    throw std::invalid_argument("matrix is not unitary within tolerance");
  }
}

}  // namespace

std::string bitstring(std::size_t value, int width) {
  std::string bits(static_cast<std::size_t>(width), '0');
  for (int b = 0; b < width; ++b) {
    if ((value >> (width - 1 - b)) & 1) bits[static_cast<std::size_t>(b)] = '1';
  }
  return bits;
}

StateVector::StateVector(int num_qubits, Execution execution)
    : num_qubits_(num_qubits), exec_(execution) {
  if (num_qubits < kMinQubits || num_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, 24], got " +
                                std::to_string(num_qubits));
  }
  amps_.assign(std::size_t{1} << num_qubits, cdouble{0.0, 0.0});
  amps_[0] = 1.0;
}

void StateVector::set_basis_state(std::string_view bits) {
  if (static_cast<int>(bits.size()) != num_qubits_) {
    throw std::invalid_argument("basis state needs exactly one bit per qubit");
  }
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("basis state may only contain '0' and '1'");
    }
    index = (index << 1) | static_cast<std::size_t>(c == '1');
  }
  std::fill(amps_.begin(), amps_.end(), cdouble{0.0, 0.0});
  amps_[index] = 1.0;
}

void StateVector::set_amplitudes(std::span<const cdouble> values) {
  if (values.size() != amps_.size()) {
    throw std::invalid_argument("amplitude vector has wrong length");
  }
  double norm = std::sqrt(kernels::norm_squared(values, exec_));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("amplitude vector must have positive norm");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    amps_[i] = values[i] / norm;
  }
}

void StateVector::check_operands(std::span<const int> targets,
                                 std::span<const int> controls) const {
  check_qubit_list(num_qubits_, targets, "target");
  if (!controls.empty()) check_qubit_list(num_qubits_, controls, "control");
  for (int c : controls) {
    if (std::find(targets.begin(), targets.end(), c) != targets.end()) {
      throw std::invalid_argument("control qubit repeats a target qubit");
    }
  }
}

void StateVector::apply_unitary(std::span<const cdouble> matrix,
                                std::span<const int> targets,
                                std::span<const int> controls) {
  check_operands(targets, controls);
  check_unitary(matrix, std::size_t{1} << targets.size());
  kernels::apply_controlled_unitary(amps_, num_qubits_, matrix, targets,
                                    controls, exec_);
}

void StateVector::apply_diagonal(std::span<const cdouble> diag,
                                 std::span<const int> targets,
                                 std::span<const int> controls) {
  check_operands(targets, controls);
  if (diag.size() != std::size_t{1} << targets.size()) {
    throw std::invalid_argument("diagonal size does not match target count");
  }
  for (const cdouble& d : diag) {
    if (std::abs(std::abs(d) - 1.0) > kStateTolerance) {
      throw std::invalid_argument("diagonal entries must have unit modulus");
    }
  }
  kernels::apply_controlled_diagonal(amps_, num_qubits_, diag, targets,
                                     controls, exec_);
}

std::vector<double> StateVector::probabilities(
    std::span<const int> qubits) const {
  check_qubit_list(num_qubits_, qubits, "measurement");
  return kernels::marginal_probabilities(amps_, num_qubits_, qubits, exec_);
}

MeasurementHistogram StateVector::sample(std::span<const int> qubits,
                                         std::uint64_t shots,
                                         std::uint64_t seed) const {
  if (shots == 0) {
    throw std::invalid_argument("sampling needs at least one shot");
  }
  std::vector<double> probs = probabilities(qubits);
  std::vector<double> cumulative(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cumulative[i] = acc;
  }
  std::mt19937_64 rng(seed);
  MeasurementHistogram hist;
  hist.shots = shots;
  int width = static_cast<int>(qubits.size());
  for (std::uint64_t s = 0; s < shots; ++s) {
    double u = detail::random_unit(rng) * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    std::size_t idx = std::min(
        static_cast<std::size_t>(it - cumulative.begin()), probs.size() - 1);
    ++hist.counts[bitstring(idx, width)];
  }
  return hist;
}

std::size_t StateVector::sample_index(std::mt19937_64& rng) const {
  double u = detail::random_unit(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    acc += std::norm(amps_[i]);
    if (u < acc) return i;
  }
  return amps_.size() - 1;
}

double StateVector::norm_squared() const {
  return kernels::norm_squared(amps_, exec_);
}

}  // namespace qneuron
