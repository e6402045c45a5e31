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

// OpenMP kernels. The unitary kernel parallelizes over free-qubit slices
// (each slice owns its 2^k amplitudes, so no write conflicts); the diagonal
// and marginal kernels sweep the whole index space, which keeps the parallel
// split independent of where the operand qubits sit.

#include <omp.h>

#include "kernels_common.hpp"

namespace qneuron::kernels {

using detail::build_layout;
using detail::expand_free_index;
using detail::gather_local;

void apply_controlled_unitary_parallel(std::span<cdouble> amps, int num_qubits,
                                       std::span<const cdouble> matrix,
                                       std::span<const int> targets,
                                       std::span<const int> controls) {
  auto layout = build_layout(num_qubits, targets, controls);
  std::size_t dim = layout.offsets.size();
  auto slices = static_cast<std::ptrdiff_t>(std::size_t{1} << layout.free_bits);
#pragma omp parallel
  {
    std::vector<cdouble> in(dim), out(dim);
#pragma omp for schedule(static)
    for (std::ptrdiff_t g = 0; g < slices; ++g) {
      std::size_t base =
          expand_free_index(static_cast<std::size_t>(g), layout.fixed_positions) |
          layout.control_mask;
      for (std::size_t t = 0; t < dim; ++t)
        in[t] = amps[base | layout.offsets[t]];
      for (std::size_t r = 0; r < dim; ++r) {
        cdouble acc = 0.0;
        const cdouble* row = matrix.data() + r * dim;
        for (std::size_t c = 0; c < dim; ++c) acc += row[c] * in[c];
        out[r] = acc;
      }
      for (std::size_t t = 0; t < dim; ++t)
        amps[base | layout.offsets[t]] = out[t];
    }
  }
}

void apply_controlled_diagonal_parallel(std::span<cdouble> amps,
                                        int num_qubits,
                                        std::span<const cdouble> diag,
                                        std::span<const int> targets,
                                        std::span<const int> controls) {
  auto layout = build_layout(num_qubits, targets, controls);
  auto size = static_cast<std::ptrdiff_t>(amps.size());
  std::size_t cmask = layout.control_mask;
  const int* tbegin = targets.data();
  auto tcount = targets.size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < size; ++i) {
    auto idx = static_cast<std::size_t>(i);
    if ((idx & cmask) == cmask) {
      amps[idx] *= diag[gather_local(idx, num_qubits, {tbegin, tcount})];
    }
  }
}

std::vector<double> marginal_probabilities_parallel(
    std::span<const cdouble> amps, int num_qubits,
    std::span<const int> qubits) {
  std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
  auto size = static_cast<std::ptrdiff_t>(amps.size());
#pragma omp parallel
  {
    std::vector<double> local(probs.size(), 0.0);
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < size; ++i) {
      auto idx = static_cast<std::size_t>(i);
      local[gather_local(idx, num_qubits, qubits)] += std::norm(amps[idx]);
    }
#pragma omp critical
    {
      for (std::size_t j = 0; j < probs.size(); ++j) probs[j] += local[j];
    }
  }
  return probs;
}

double norm_squared_parallel(std::span<const cdouble> amps) {
  double total = 0.0;
  auto size = static_cast<std::ptrdiff_t>(amps.size());
#pragma omp parallel for schedule(static) reduction(+ : total)
  for (std::ptrdiff_t i = 0; i < size; ++i) {
    total += std::norm(amps[static_cast<std::size_t>(i)]);
  }
  return total;
}

}  // namespace qneuron::kernels
