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

#include <vector>

#include "qneuron/kernels.hpp"

namespace qneuron::linalg {

// Small dense helpers for gate-sized matrices (row-major, dim x dim). These
// stay O(dim^3) with dim <= 2^k for k-qubit blocks; nothing here is meant for
// state-sized data.

std::vector<cdouble> identity(std::size_t dim);
std::vector<cdouble> mat_mul(std::span<const cdouble> a,
                             std::span<const cdouble> b, std::size_t dim);
/// a^(2^s) by repeated squaring.
std::vector<cdouble> mat_power_pow2(std::span<const cdouble> a,
                                    std::size_t dim, int s);
bool is_unitary(std::span<const cdouble> a, std::size_t dim, double tol);

}  // namespace qneuron::linalg
