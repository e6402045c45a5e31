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

#include "qneuron/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace qneuron::linalg {

std::vector<cdouble> identity(std::size_t dim) {
  std::vector<cdouble> m(dim * dim, cdouble{0.0, 0.0});
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
  return m;
}

std::vector<cdouble> mat_mul(std::span<const cdouble> a,
                             std::span<const cdouble> b, std::size_t dim) {
  if (a.size() != dim * dim || b.size() != dim * dim) {
    throw std::invalid_argument("matrix size mismatch");
  }
  std::vector<cdouble> out(dim * dim, cdouble{0.0, 0.0});
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      cdouble aik = a[i * dim + k];
      if (aik == cdouble{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        out[i * dim + j] += aik * b[k * dim + j];
      }
    }
  }
  return out;
}

std::vector<cdouble> mat_power_pow2(std::span<const cdouble> a,
                                    std::size_t dim, int s) {
  if (s < 0) throw std::invalid_argument("power exponent must be >= 0");
  std::vector<cdouble> m(a.begin(), a.end());
  for (int i = 0; i < s; ++i) m = mat_mul(m, m, dim);
  return m;
}

bool is_unitary(std::span<const cdouble> a, std::size_t dim, double tol) {
  if (a.size() != dim * dim) return false;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      cdouble acc = 0.0;
      for (std::size_t r = 0; r < dim; ++r) {
        acc += std::conj(a[r * dim + i]) * a[r * dim + j];
      }
      cdouble expected = i == j ? cdouble{1.0, 0.0} : cdouble{0.0, 0.0};
      if (std::abs(acc - expected) > tol) return false;
    }
  }
  return true;
}

}  // namespace qneuron::linalg
