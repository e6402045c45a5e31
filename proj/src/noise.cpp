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

#include "qneuron/noise.hpp"

#include <omp.h>

#include <stdexcept>

#include "rng.hpp"

namespace qneuron {

namespace {

const std::vector<cdouble> kPauliX{0.0, 1.0, 1.0, 0.0};
const std::vector<cdouble> kPauliY{0.0, cdouble{0.0, -1.0}, cdouble{0.0, 1.0},
                                   0.0};
const std::vector<cdouble> kPauliZ{1.0, -1.0};

void maybe_corrupt(StateVector& state, int qubit, double p,
                   std::mt19937_64& rng) {
  if (p <= 0.0 || detail::random_unit(rng) >= p) return;
  int pauli = static_cast<int>(detail::random_unit(rng) * 3.0);
  const int target[1] = {qubit};
  switch (pauli) {
    case 0: state.apply_unitary(kPauliX, target); break;
    case 1: state.apply_unitary(kPauliY, target); break;
    default: state.apply_diagonal(kPauliZ, {target, 1}); break;
  }
}

std::string run_trajectory(const Circuit& circuit, const NoiseModel& model,
                           std::mt19937_64& rng) {
  StateVector state(circuit.num_qubits(), Execution::Serial);
  for (const Gate& gate : circuit.gates()) {
    apply(gate, state);
    double p = gate.span_width() == 1 ? model.p1 : model.p2;
    // Touched-qubit order is fixed (targets, then controls) so a seed's
    // draw sequence is reproducible.
    for (int q : gate.targets) maybe_corrupt(state, q, p, rng);
    for (int q : gate.controls) maybe_corrupt(state, q, p, rng);
  }
  std::string bits = bitstring(state.sample_index(rng), circuit.num_qubits());
  for (char& c : bits) {
    double flip = c == '0' ? model.r01 : model.r10;
    if (flip > 0.0 && detail::random_unit(rng) < flip) {
      c = c == '0' ? '1' : '0';
    }
  }
  return bits;
}

}  // namespace

void NoiseModel::validate() const {
  for (double p : {p1, p2, r01, r10}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("noise probabilities must lie in [0, 1]");
    }
  }
}

bool NoiseModel::is_zero() const {
  return p1 == 0.0 && p2 == 0.0 && r01 == 0.0 && r10 == 0.0;
}

MeasurementHistogram run_noisy(const Circuit& circuit, const NoiseModel& model,
                               std::uint64_t shots, std::uint64_t seed) {
  model.validate();
  if (shots < 1) throw std::invalid_argument("need at least one shot");
  MeasurementHistogram hist;
  hist.shots = shots;
  auto count = static_cast<std::ptrdiff_t>(shots);
#pragma omp parallel
  {
    std::map<std::string, std::uint64_t> local;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t shot = 0; shot < count; ++shot) {
      std::mt19937_64 rng(
          detail::mix_seed(seed, static_cast<std::uint64_t>(shot)));
      ++local[run_trajectory(circuit, model, rng)];
    }
#pragma omp critical
    {
      for (const auto& [bits, c] : local) hist.counts[bits] += c;
    }
  }
  return hist;
}

namespace {

std::uint32_t parse_bits(std::string_view bits) {
  std::uint32_t value = 0;
  for (char c : bits) value = (value << 1) | static_cast<std::uint32_t>(c == '1');
  return value;
}

}  // namespace

double accuracy(const MeasurementHistogram& histogram,
                const BooleanTable& truth) {
  if (histogram.shots == 0) {
    throw std::invalid_argument("accuracy of an empty histogram is undefined");
  }
  std::uint64_t good = 0;
  for (const auto& [bits, count] : histogram.counts) {
    if (static_cast<int>(bits.size()) != truth.n + truth.m) {
      throw std::invalid_argument(
          "histogram bitstrings do not cover input + output registers");
    }
    std::uint32_t x = parse_bits(std::string_view(bits).substr(
        0, static_cast<std::size_t>(truth.n)));
    std::uint32_t y = parse_bits(std::string_view(bits).substr(
        static_cast<std::size_t>(truth.n)));
    if (truth(x) == y) good += count;
  }
  return static_cast<double>(good) / static_cast<double>(histogram.shots);
}

double accuracy(const MeasurementHistogram& histogram,
                const BooleanTable& truth, std::string_view input_bits) {
  if (histogram.shots == 0) {
    throw std::invalid_argument("accuracy of an empty histogram is undefined");
  }
  if (static_cast<int>(input_bits.size()) != truth.n) {
    throw std::invalid_argument("input bitstring must have n bits");
  }
  std::uint32_t expected = truth(parse_bits(input_bits));
  std::uint64_t good = 0;
  for (const auto& [bits, count] : histogram.counts) {
    if (static_cast<int>(bits.size()) != truth.n + truth.m) {
      throw std::invalid_argument(
          "histogram bitstrings do not cover input + output registers");
    }
    std::uint32_t y = parse_bits(std::string_view(bits).substr(
        static_cast<std::size_t>(truth.n)));
    if (y == expected) good += count;
  }
  return static_cast<double>(good) / static_cast<double>(histogram.shots);
}

}  // namespace qneuron
