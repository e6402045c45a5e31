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

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>

#include "qneuron/kernels.hpp"

namespace qneuron {

/// Tolerance for normalization and unitarity checks on state mutations.
inline constexpr double kStateTolerance = 1e-10;

/// Inclusive qubit-count bounds for dense simulation (desk-scale cap).
inline constexpr int kMinQubits = 1;
inline constexpr int kMaxQubits = 24;

struct MeasurementHistogram {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;
};

/// `value` rendered as `width` bits, MSB first.
std::string bitstring(std::size_t value, int width);

/// Dense state vector over [1, 24] qubits. Qubit 0 is the most significant
/// bit of the basis index. All mutating entry points validate their operands
/// (unit-modulus diagonals, unitary matrices, nonzero amplitude loads)
/// within kStateTolerance and throw std::invalid_argument on violations.
class StateVector {
 public:
  explicit StateVector(int num_qubits,
                       Execution execution = Execution::Parallel);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amps_.size(); }
  Execution execution() const { return exec_; }
  void set_execution(Execution execution) { exec_ = execution; }

  /// Resets to the computational basis state described by a '0'/'1' string
  /// of exactly num_qubits characters, first character = qubit 0.
  void set_basis_state(std::string_view bits);

  /// Loads a full amplitude vector (size 2^num_qubits), scaled to unit norm.
  /// Throws for a zero (or non-finite) vector.
  void set_amplitudes(std::span<const cdouble> values);

  /// Applies a dense 2^k x 2^k row-major matrix to `targets`, restricted to
  /// the subspace where all `controls` are 1. First listed target is the most
  /// significant bit of the matrix index. Rejects non-unitary matrices.
  void apply_unitary(std::span<const cdouble> matrix,
                     std::span<const int> targets,
                     std::span<const int> controls = {});

  /// Same slicing rules for a diagonal operator; every entry must have unit
  /// modulus.
  void apply_diagonal(std::span<const cdouble> diag,
                      std::span<const int> targets,
                      std::span<const int> controls = {});

  /// Marginal distribution over the listed qubits (first listed = MSB).
  std::vector<double> probabilities(std::span<const int> qubits) const;

  /// Draws `shots` outcomes over the listed qubits with a seeded generator;
  /// identical seeds give identical histograms.
  MeasurementHistogram sample(std::span<const int> qubits, std::uint64_t shots,
                              std::uint64_t seed) const;

  /// One full-register outcome index drawn from |amplitude|^2.
  std::size_t sample_index(std::mt19937_64& rng) const;

  double norm_squared() const;

  std::span<const cdouble> amplitudes() const { return amps_; }

  /// Mutable amplitude view for permutation-style updates (basis-state
  /// relabelling). Writes through this view bypass the normalization checks;
  /// callers must preserve the norm themselves.
  std::span<cdouble> raw_amplitudes() { return amps_; }

 private:
  void check_operands(std::span<const int> targets,
                      std::span<const int> controls) const;

  int num_qubits_;
  Execution exec_;
  std::vector<cdouble> amps_;
};

}  // namespace qneuron
