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

// Reference kernels: one slice at a time, no threading. The parallel path in
// kernels.cpp must produce bit-identical marginals and amplitudes up to
// floating-point associativity; tests diff the two implementations.

#include "kernels_common.hpp"

namespace qneuron::kernels {

using detail::build_layout;
using detail::expand_free_index;
using detail::gather_local;

void apply_controlled_unitary_serial(std::span<cdouble> amps, int num_qubits,
                                     std::span<const cdouble> matrix,
                                     std::span<const int> targets,
                                     std::span<const int> controls) {
  auto layout = build_layout(num_qubits, targets, controls);
  std::size_t dim = layout.offsets.size();
  std::vector<cdouble> in(dim), out(dim);
  std::size_t slices = std::size_t{1} << layout.free_bits;
  for (std::size_t g = 0; g < slices; ++g) {
    std::size_t base =
        expand_free_index(g, layout.fixed_positions) | layout.control_mask;
    for (std::size_t t = 0; t < dim; ++t) in[t] = amps[base | layout.offsets[t]];
    for (std::size_t r = 0; r < dim; ++r) {
      cdouble acc = 0.0;
      const cdouble* row = matrix.data() + r * dim;
      for (std::size_t c = 0; c < dim; ++c) acc += row[c] * in[c];
      out[r] = acc;
    }
    for (std::size_t t = 0; t < dim; ++t) amps[base | layout.offsets[t]] = out[t];
  }
}

void apply_controlled_diagonal_serial(std::span<cdouble> amps, int num_qubits,
                                      std::span<const cdouble> diag,
                                      std::span<const int> targets,
                                      std::span<const int> controls) {
  auto layout = build_layout(num_qubits, targets, controls);
  std::size_t dim = layout.offsets.size();
  std::size_t slices = std::size_t{1} << layout.free_bits;
  for (std::size_t g = 0; g < slices; ++g) {
    std::size_t base =
        expand_free_index(g, layout.fixed_positions) | layout.control_mask;
    for (std::size_t t = 0; t < dim; ++t) amps[base | layout.offsets[t]] *= diag[t];
  }
}

std::vector<double> marginal_probabilities_serial(std::span<const cdouble> amps,
                                                  int num_qubits,
                                                  std::span<const int> qubits) {
  std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    probs[gather_local(i, num_qubits, qubits)] += std::norm(amps[i]);
  }
  return probs;
}

double norm_squared_serial(std::span<const cdouble> amps) {
  double total = 0.0;
  for (const cdouble& a : amps) total += std::norm(a);
  return total;
}

}  // namespace qneuron::kernels
