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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qneuron {

using cdouble = std::complex<double>;

/// Which kernel implementation dense state updates run through. Parallel is
/// the OpenMP path (it falls back to the serial loop below a size threshold
/// where forking threads costs more than the sweep); Serial is the plain
/// reference loop, kept independent so tests can diff the two.
enum class Execution { Serial, Parallel };

namespace kernels {

/// Amplitude-count threshold below which the Parallel dispatch stays serial.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

// Index convention used throughout: qubit t of a q-qubit register sits at bit
// position (q - 1 - t) of the basis index, so qubit 0 is the most significant
// bit. Multi-qubit operands read their qubit list the same way: the first
// listed target is the most significant bit of the local matrix index.

// Applies a dense 2^k x 2^k matrix (row-major) to the `targets` qubits on the
// amplitude slices where every control qubit is 1.
void apply_controlled_unitary_serial(std::span<cdouble> amps, int num_qubits,
                                     std::span<const cdouble> matrix,
                                     std::span<const int> targets,
                                     std::span<const int> controls);
void apply_controlled_unitary_parallel(std::span<cdouble> amps, int num_qubits,
                                       std::span<const cdouble> matrix,
                                       std::span<const int> targets,
                                       std::span<const int> controls);

// Multiplies amplitudes by diag entries indexed by the target bits, on the
// slices where every control qubit is 1. diag has 2^k entries.
void apply_controlled_diagonal_serial(std::span<cdouble> amps, int num_qubits,
                                      std::span<const cdouble> diag,
                                      std::span<const int> targets,
                                      std::span<const int> controls);
void apply_controlled_diagonal_parallel(std::span<cdouble> amps,
                                        int num_qubits,
                                        std::span<const cdouble> diag,
                                        std::span<const int> targets,
                                        std::span<const int> controls);

// Probability distribution over the listed qubits (first listed = MSB of the
// result index), summing out the rest. Returns 2^k values.
std::vector<double> marginal_probabilities_serial(std::span<const cdouble> amps,
                                                  int num_qubits,
                                                  std::span<const int> qubits);
std::vector<double> marginal_probabilities_parallel(
    std::span<const cdouble> amps, int num_qubits,
    std::span<const int> qubits);

double norm_squared_serial(std::span<const cdouble> amps);
double norm_squared_parallel(std::span<const cdouble> amps);

inline bool run_parallel(std::size_t amp_count, Execution exec) {
  return exec == Execution::Parallel && amp_count >= kParallelThreshold;
}

inline void apply_controlled_unitary(std::span<cdouble> amps, int num_qubits,
                                     std::span<const cdouble> matrix,
                                     std::span<const int> targets,
                                     std::span<const int> controls,
                                     Execution exec) {
  if (run_parallel(amps.size(), exec)) {
    apply_controlled_unitary_parallel(amps, num_qubits, matrix, targets,
                                      controls);
  } else {
    apply_controlled_unitary_serial(amps, num_qubits, matrix, targets,
                                    controls);
  }
}

inline void apply_controlled_diagonal(std::span<cdouble> amps, int num_qubits,
                                      std::span<const cdouble> diag,
                                      std::span<const int> targets,
                                      std::span<const int> controls,
                                      Execution exec) {
  if (run_parallel(amps.size(), exec)) {
    apply_controlled_diagonal_parallel(amps, num_qubits, diag, targets,
                                       controls);
  } else {
    apply_controlled_diagonal_serial(amps, num_qubits, diag, targets,
                                     controls);
  }
}

inline std::vector<double> marginal_probabilities(std::span<const cdouble> amps,
                                                  int num_qubits,
                                                  std::span<const int> qubits,
                                                  Execution exec) {
  if (run_parallel(amps.size(), exec)) {
    return marginal_probabilities_parallel(amps, num_qubits, qubits);
  }
  return marginal_probabilities_serial(amps, num_qubits, qubits);
}

inline double norm_squared(std::span<const cdouble> amps, Execution exec) {
  if (run_parallel(amps.size(), exec)) return norm_squared_parallel(amps);
  return norm_squared_serial(amps);
}

}  // namespace kernels
}  // namespace qneuron
