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

#include "test_helpers.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qneuron::testing {

std::vector<cdouble> random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cdouble> m(dim * dim);
  for (auto& e : m) e = cdouble(gauss(rng), gauss(rng));
  // Gram-Schmidt over rows.
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t prev = 0; prev < r; ++prev) {
      cdouble dot = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        dot += std::conj(m[prev * dim + c]) * m[r * dim + c];
      }
      for (std::size_t c = 0; c < dim; ++c) {
        m[r * dim + c] -= dot * m[prev * dim + c];
      }
    }
    double norm = 0.0;
    for (std::size_t c = 0; c < dim; ++c) norm += std::norm(m[r * dim + c]);
    norm = std::sqrt(norm);
    if (norm < 1e-8) throw std::runtime_error("degenerate random matrix");
    for (std::size_t c = 0; c < dim; ++c) m[r * dim + c] /= norm;
  }
  return m;
}

std::vector<cdouble> random_state(int num_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cdouble> v(std::size_t{1} << num_qubits);
  double norm = 0.0;
  for (auto& e : v) {
    e = cdouble(gauss(rng), gauss(rng));
    norm += std::norm(e);
  }
  norm = std::sqrt(norm);
  for (auto& e : v) e /= norm;
  return v;
}

namespace {

// Bit of qubit q in an n-qubit index (qubit 0 = MSB).
inline std::size_t qubit_bit(std::size_t index, int q, int n) {
  return (index >> (n - 1 - q)) & 1;
}

// Full dense matrix of the gate, built entry by entry from first
// principles: rows/columns agree outside the targets, controls gate the
// action, and the local matrix is indexed with the first target as MSB.
std::vector<cdouble> gate_matrix(const Gate& gate, int num_qubits) {
  std::size_t dim = std::size_t{1} << num_qubits;
  std::size_t k = gate.targets.size();
  std::size_t local_dim = std::size_t{1} << k;

  // Local matrix for every kind.
  std::vector<cdouble> local;
  const cdouble i1(0.0, 1.0);
  switch (gate.kind) {
    case GateKind::X:
      local = {0, 1, 1, 0};
      break;
    case GateKind::H: {
      double r = 1.0 / std::sqrt(2.0);
      local = {r, r, r, -r};
      break;
    }
    case GateKind::S:
      local = {1, 0, 0, i1};
      break;
    case GateKind::Rz:
    case GateKind::CRz:
      local = {1, 0, 0, std::exp(i1 * (2.0 * std::numbers::pi * gate.phase))};
      break;
    case GateKind::Mcx:
      local = {0, 1, 1, 0};
      break;
    case GateKind::DiagonalUnitary:
      local.assign(local_dim * local_dim, 0.0);
      for (std::size_t t = 0; t < local_dim; ++t) {
        local[t * local_dim + t] = gate.values[t];
      }
      break;
    case GateKind::GenericUnitary:
      local = gate.values;
      break;
  }

  // CRz's control and MCX's controls live in gate.controls already.
  std::vector<cdouble> full(dim * dim, 0.0);
  for (std::size_t col = 0; col < dim; ++col) {
    bool active = true;
    for (int c : gate.controls) {
      if (qubit_bit(col, c, num_qubits) == 0) active = false;
    }
    if (!active) {
      full[col * dim + col] = 1.0;
      continue;
    }
    std::size_t local_col = 0;
    for (int t : gate.targets) {
      local_col = (local_col << 1) | qubit_bit(col, t, num_qubits);
    }
    for (std::size_t local_row = 0; local_row < local_dim; ++local_row) {
      cdouble entry = local[local_row * local_dim + local_col];
      if (entry == cdouble(0.0)) continue;
      std::size_t row = col;
      for (std::size_t ti = 0; ti < k; ++ti) {
        int t = gate.targets[ti];
        std::size_t bit = (local_row >> (k - 1 - ti)) & 1;
        std::size_t mask = std::size_t{1} << (num_qubits - 1 - t);
        row = (row & ~mask) | (bit ? mask : 0);
      }
      full[row * dim + col] = entry;
    }
  }
  return full;
}

}  // namespace

std::vector<cdouble> apply_gate_dense(const Gate& gate, int num_qubits,
                                      std::span<const cdouble> in) {
  std::size_t dim = std::size_t{1} << num_qubits;
  std::vector<cdouble> m = gate_matrix(gate, num_qubits);
  std::vector<cdouble> out(dim, 0.0);
  for (std::size_t r = 0; r < dim; ++r) {
    cdouble acc = 0.0;
    for (std::size_t c = 0; c < dim; ++c) acc += m[r * dim + c] * in[c];
    out[r] = acc;
  }
  return out;
}

double max_abs_diff(std::span<const cdouble> a, std::span<const cdouble> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

double chi_square_uniform(const MeasurementHistogram& hist, int bits) {
  std::size_t cells = std::size_t{1} << bits;
  double expected = static_cast<double>(hist.shots) / static_cast<double>(cells);
  double stat = 0.0;
  for (std::size_t i = 0; i < cells; ++i) {
    std::string key = bitstring(i, bits);
    auto it = hist.counts.find(key);
    double observed = it == hist.counts.end()
                          ? 0.0
                          : static_cast<double>(it->second);
    double d = observed - expected;
    stat += d * d / expected;
  }
  return stat;
}

std::pair<double, double> linear_fit_r2(std::span<const double> x,
                                        std::span<const double> y) {
  std::size_t n = x.size();
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  double mx = sx / static_cast<double>(n);
  double my = sy / static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  double slope = sxy / sxx;
  double intercept = my - slope * mx;
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double fit = slope * x[i] + intercept;
    ss_res += (y[i] - fit) * (y[i] - fit);
    ss_tot += (y[i] - my) * (y[i] - my);
  }
  return {slope, ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot};
}

BooleanTable random_table(int n, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> out(
      0, static_cast<std::uint32_t>((1u << m) - 1));
  std::vector<std::uint32_t> table(std::size_t{1} << n);
  for (auto& e : table) e = out(rng);
  return BooleanTable(n, m, std::move(table));
}

bool invariant_plane_eigenvalues(std::span<const cdouble> op, std::size_t dim,
                                 std::span<const cdouble> v1,
                                 std::span<const cdouble> v2, double tol,
                                 cdouble& lambda1, cdouble& lambda2) {
  auto dot = [dim](std::span<const cdouble> a, std::span<const cdouble> b) {
    cdouble acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) acc += std::conj(a[i]) * b[i];
    return acc;
  };
  auto matvec = [&](std::span<const cdouble> v) {
    std::vector<cdouble> out(dim, 0.0);
    for (std::size_t r = 0; r < dim; ++r) {
      cdouble acc = 0.0;
      for (std::size_t c = 0; c < dim; ++c) acc += op[r * dim + c] * v[c];
      out[r] = acc;
    }
    return out;
  };

  // Orthonormalize {v1, v2}.
  std::vector<cdouble> e1(v1.begin(), v1.end());
  std::vector<cdouble> e2(v2.begin(), v2.end());
  cdouble overlap = dot(e1, e2);
  for (std::size_t i = 0; i < dim; ++i) e2[i] -= overlap * e1[i];
  double n2 = std::sqrt(std::real(dot(e2, e2)));
  if (n2 < 1e-9) return false;
  for (auto& e : e2) e /= n2;

  std::vector<cdouble> g1 = matvec(e1);
  std::vector<cdouble> g2 = matvec(e2);
  cdouble a11 = dot(e1, g1), a12 = dot(e1, g2);
  cdouble a21 = dot(e2, g1), a22 = dot(e2, g2);

  // Invariance: the images must have no component outside span{e1, e2}.
  for (std::size_t i = 0; i < dim; ++i) {
    cdouble r1 = g1[i] - a11 * e1[i] - a21 * e2[i];
    cdouble r2 = g2[i] - a12 * e1[i] - a22 * e2[i];
    if (std::abs(r1) > tol || std::abs(r2) > tol) return false;
  }

  cdouble tr = a11 + a22;
  cdouble det = a11 * a22 - a12 * a21;
  cdouble disc = std::sqrt(tr * tr - 4.0 * det);
  lambda1 = (tr + disc) / 2.0;
  lambda2 = (tr - disc) / 2.0;
  return true;
}

}  // namespace qneuron::testing
