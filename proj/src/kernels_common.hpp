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

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "qneuron/kernels.hpp"

namespace qneuron::kernels::detail {

inline std::size_t bit_of(int num_qubits, int qubit) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

/// Precomputed addressing for one gate application: which indices a slice
/// touches and how local matrix indices map onto global index offsets.
struct OperandLayout {
  std::size_t control_mask = 0;
  // offsets[t] = OR of target bit values for local index t; targets are read
  // first-listed-as-MSB, matching the matrix ordering.
  std::vector<std::size_t> offsets;
  // Bit positions of all fixed (target + control) qubits, ascending.
  std::vector<int> fixed_positions;
  int free_bits = 0;
};

inline OperandLayout build_layout(int num_qubits, std::span<const int> targets,
                                  std::span<const int> controls) {
  OperandLayout layout;
  int k = static_cast<int>(targets.size());
  layout.offsets.assign(std::size_t{1} << k, 0);
  for (std::size_t t = 1; t < layout.offsets.size(); ++t) {
    std::size_t off = 0;
    for (int j = 0; j < k; ++j) {
      if ((t >> j) & 1) off |= bit_of(num_qubits, targets[k - 1 - j]);
    }
    layout.offsets[t] = off;
  }
  for (int c : controls) {
    layout.control_mask |= bit_of(num_qubits, c);
    layout.fixed_positions.push_back(num_qubits - 1 - c);
  }
  for (int t : targets) layout.fixed_positions.push_back(num_qubits - 1 - t);
  std::sort(layout.fixed_positions.begin(), layout.fixed_positions.end());
  layout.free_bits = num_qubits - static_cast<int>(layout.fixed_positions.size());
  return layout;
}

/// Spreads the free-qubit counter g over the full index space, leaving zero
/// bits at every fixed position (filled in by control mask / target offsets).
inline std::size_t expand_free_index(std::size_t g,
                                     const std::vector<int>& fixed_ascending) {
  for (int p : fixed_ascending) {
    std::size_t low = g & ((std::size_t{1} << p) - 1);
    g = ((g >> p) << (p + 1)) | low;
  }
  return g;
}

/// Local diagonal/matrix index of `idx` restricted to the target qubits.
inline std::size_t gather_local(std::size_t idx, int num_qubits,
                                std::span<const int> targets) {
  std::size_t local = 0;
  for (int t : targets) {
    local = (local << 1) | ((idx >> (num_qubits - 1 - t)) & 1);
  }
  return local;
}

}  // namespace qneuron::kernels::detail
