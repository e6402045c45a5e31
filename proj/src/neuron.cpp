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

#include "qneuron/neuron.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qneuron {

namespace {

// Readout helpers shared by both neurons: exact marginal or sampled
// frequencies over the first m qubits, plus the mode with low-code ties.

std::map<std::uint32_t, double> register_distribution(const StateVector& state,
                                                      int m,
                                                      const RunMode& mode) {
  std::vector<int> qpe(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) qpe[static_cast<std::size_t>(j)] = j;
  std::map<std::uint32_t, double> dist;
  if (mode.is_exact()) {
    std::vector<double> probs = state.probabilities(qpe);
    for (std::size_t code = 0; code < probs.size(); ++code) {
      dist[static_cast<std::uint32_t>(code)] = probs[code];
    }
  } else {
    MeasurementHistogram hist = state.sample(qpe, mode.shots, mode.seed);
    for (const auto& [bits, count] : hist.counts) {
      std::uint32_t code = 0;
      for (char c : bits) code = (code << 1) | static_cast<std::uint32_t>(c == '1');
      dist[code] = static_cast<double>(count) / static_cast<double>(hist.shots);
    }
  }
  return dist;
}

std::uint32_t mode_of(const std::map<std::uint32_t, double>& dist) {
  std::uint32_t best = 0;
  double best_p = -1.0;
  for (const auto& [code, p] : dist) {
    if (p > best_p) {
      best = code;
      best_p = p;
    }
  }
  return best;
}

// Inner-product comb: CRz between QPE qubit j (weight exponent s = m-1-j)
// and sample bit (feature j2, bit k) with phase fraction
// w_j2 * 2^(s + e + fb - m), e the bit's place value exponent. Zero-weight
// phases are kept so the gate structure is weight-independent.
void append_inner_product_block(Circuit& circuit, const BasisNeuronConfig& cfg,
                                int sample_base) {
  int bpf = cfg.bits_per_feature();
  for (int j = 0; j < cfg.m; ++j) {
    int s = cfg.m - 1 - j;
    for (int j2 = 0; j2 < cfg.n; ++j2) {
      for (int k = 0; k < bpf; ++k) {
        int e = cfg.sample_int_bits - 1 - k;
        double alpha = std::ldexp(cfg.weights[static_cast<std::size_t>(j2)],
                                  s + e + cfg.fb - cfg.m);
        circuit.append(
            Gate::crz(alpha, j, sample_base + j2 * bpf + k));
      }
    }
  }
}

// Sample + QPE registers only: [0, m) register, [m, m + p*n) sample.
Circuit basis_core_circuit(const BasisNeuronConfig& cfg,
                           const SampleEncoding& sample) {
  int nq = cfg.m + sample.total_bits();
  Circuit circuit(nq);
  for (int i = 0; i < sample.total_bits(); ++i) {
    if (sample.bits[static_cast<std::size_t>(i)] == '1') {
      circuit.append(Gate::x(cfg.m + i));
    }
  }
  for (int j = 0; j < cfg.m; ++j) circuit.append(Gate::h(j));
  append_inner_product_block(circuit, cfg, cfg.m);
  Circuit iqft = inverse_qft_circuit(cfg.m);
  std::vector<int> map(static_cast<std::size_t>(cfg.m));
  for (int j = 0; j < cfg.m; ++j) map[static_cast<std::size_t>(j)] = j;
  circuit.append(iqft, map);
  return circuit;
}

// The sample register stays in its basis state (X encoding, then it only
// ever controls), so every comb CRz either fires or idles. The run
// therefore needs just the m register qubits, with the fired phases summed
// into one Rz per qubit. build_basis_neuron_circuit keeps the full comb;
// the two agree exactly and tests hold them together.
Circuit basis_register_circuit(const BasisNeuronConfig& cfg,
                               const SampleEncoding& sample) {
  Circuit circuit(cfg.m);
  for (int j = 0; j < cfg.m; ++j) circuit.append(Gate::h(j));
  int bpf = cfg.bits_per_feature();
  for (int j = 0; j < cfg.m; ++j) {
    int s = cfg.m - 1 - j;
    double theta = 0.0;
    for (int j2 = 0; j2 < cfg.n; ++j2) {
      for (int k = 0; k < bpf; ++k) {
        if (sample.bits[static_cast<std::size_t>(j2 * bpf + k)] != '1') {
          continue;
        }
        int e = cfg.sample_int_bits - 1 - k;
        theta += std::ldexp(cfg.weights[static_cast<std::size_t>(j2)],
                            s + e + cfg.fb - cfg.m);
      }
    }
    circuit.append(Gate::rz(theta, j));
  }
  Circuit iqft = inverse_qft_circuit(cfg.m);
  std::vector<int> map(static_cast<std::size_t>(cfg.m));
  for (int j = 0; j < cfg.m; ++j) map[static_cast<std::size_t>(j)] = j;
  circuit.append(iqft, map);
  return circuit;
}

void check_sample_matches(const BasisNeuronConfig& cfg,
                          const SampleEncoding& sample) {
  if (sample.n != cfg.n || sample.p != cfg.p ||
      sample.int_bits != cfg.sample_int_bits) {
    throw std::invalid_argument(
        "sample encoding does not match the neuron's n/p/int-bits layout");
  }
}

// The register must read 2^fb * x.w unambiguously: its nearest integer has
// to be a representable two's complement code.
void check_register_range(const BasisNeuronConfig& cfg,
                          const SampleEncoding& sample) {
  double v = 0.0;
  for (int j = 0; j < cfg.n; ++j) {
    v += cfg.weights[static_cast<std::size_t>(j)] * sample.decode_feature(j);
  }
  v = std::ldexp(v, cfg.fb);
  double rounded = std::nearbyint(v);
  double half = std::ldexp(1.0, cfg.m - 1);
  if (rounded < -half || rounded > half - 1.0) {
    throw std::domain_error(
        "inner product " + std::to_string(v) +
        " overflows the signed register (m = " + std::to_string(cfg.m) +
        ", fb = " + std::to_string(cfg.fb) + ")");
  }
}

int int_log2(std::size_t value) {
  int k = 0;
  while ((std::size_t{1} << k) < value) ++k;
  return k;
}

}  // namespace

FixedPointFormat BasisNeuronConfig::register_format() const {
  return FixedPointFormat{1, m - 1 - fb, fb};
}

void BasisNeuronConfig::validate() const {
  if (n < 1) throw std::invalid_argument("neuron needs at least one feature");
  if (bits_per_feature() < 1) {
    throw std::invalid_argument("each feature needs at least one sample bit");
  }
  if (m < 1 || m > 12) {
    throw std::invalid_argument("register width m must be in [1, 12]");
  }
  if (fb < 0 || fb > m - 1) {
    throw std::invalid_argument("fraction bits must be in [0, m-1]");
  }
  if (static_cast<int>(weights.size()) != n) {
    throw std::invalid_argument("weight count must equal the feature count");
  }
  if (activation.n != m) {
    throw std::invalid_argument("activation table input width must equal m");
  }
}

void AmplitudeNeuronConfig::validate() const {
  if (n < 1 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("feature count must be a power of 2");
  }
  if (m < 2 || m > 12) {
    throw std::invalid_argument("register width m must be in [2, 12]");
  }
  if (static_cast<int>(weights.size()) != n) {
    throw std::invalid_argument("weight count must equal the feature count");
  }
  double norm = 0.0;
  for (double w : weights) norm += w * w;
  if (!(norm > 0.0)) {
    throw std::invalid_argument("weights must not be the zero vector");
  }
  if (activation.n != m) {
    throw std::invalid_argument("activation table input width must equal m");
  }
}

Circuit build_basis_neuron_circuit(const BasisNeuronConfig& cfg,
                                   const SampleEncoding& sample) {
  cfg.validate();
  check_sample_matches(cfg, sample);
  check_register_range(cfg, sample);
  // No width cap here: a circuit is only a gate list, and resource counting
  // deliberately builds neurons far beyond what the simulator can hold.
  // Simulating one allocates a StateVector, which enforces its own cap.
  int nq = cfg.m + cfg.activation.m + sample.total_bits();
  // Core layout is [register][sample]; the full circuit inserts the
  // activation output register in between.
  Circuit core = basis_core_circuit(cfg, sample);
  Circuit circuit(nq);
  std::vector<int> core_map(static_cast<std::size_t>(core.num_qubits()));
  for (int j = 0; j < cfg.m; ++j) core_map[static_cast<std::size_t>(j)] = j;
  for (int i = 0; i < sample.total_bits(); ++i) {
    core_map[static_cast<std::size_t>(cfg.m + i)] =
        cfg.m + cfg.activation.m + i;
  }
  circuit.append(core, core_map);
  Circuit oracle = build_assignment_circuit(cfg.activation);
  std::vector<int> oracle_map(
      static_cast<std::size_t>(cfg.m + cfg.activation.m));
  for (int j = 0; j < cfg.m + cfg.activation.m; ++j) {
    oracle_map[static_cast<std::size_t>(j)] = j;
  }
  circuit.append(oracle, oracle_map);
  return circuit;
}

NeuronOutput run_basis_neuron(const BasisNeuronConfig& cfg,
                              const SampleEncoding& sample,
                              const RunMode& mode) {
  cfg.validate();
  check_sample_matches(cfg, sample);
  check_register_range(cfg, sample);
  Circuit core = basis_register_circuit(cfg, sample);
  StateVector state(core.num_qubits());
  core.apply_to(state);
  NeuronOutput out;
  out.distribution = register_distribution(state, cfg.m, mode);
  out.register_value = mode_of(out.distribution);
  out.decoded_pre_activation =
      decode(out.register_value, cfg.register_format());
  out.activation_code = cfg.activation(out.register_value);
  return out;
}

StateVector prepare_phi(std::span<const double> x, std::span<const double> w) {
  if (x.size() != w.size() || x.empty()) {
    throw std::invalid_argument("sample and weights must have equal length");
  }
  std::size_t n = x.size();
  if ((n & (n - 1)) != 0) {
    throw std::invalid_argument("feature count must be a power of 2");
  }
  double nx = 0.0;
  double nw = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    nx += x[j] * x[j];
    nw += w[j] * w[j];
  }
  if (!(nx > 0.0) || !(nw > 0.0)) {
    throw std::invalid_argument("zero vector cannot be amplitude-encoded");
  }
  nx = std::sqrt(nx);
  nw = std::sqrt(nw);
  int k = int_log2(n);
  StateVector state(1 + k);
  std::vector<cdouble> amps(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    double xe = x[j] / nx;
    double we = w[j] / nw;
    amps[j] = 0.5 * (xe + we);
    amps[n + j] = 0.5 * (xe - we);
  }
  state.set_amplitudes(amps);
  return state;
}

std::vector<cdouble> build_reflection_operator(const StateVector& phi) {
  std::span<const cdouble> v = phi.amplitudes();
  std::size_t dim = v.size();
  std::size_t half = dim / 2;
  std::vector<cdouble> g(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      cdouble r = -2.0 * v[i] * std::conj(v[j]);
      if (i == j) r += 1.0;
      // Right factor Z (tensor) I: column j is negated when the ancilla
      // (most significant) bit of j is set.
      g[i * dim + j] = j < half ? r : -r;
    }
  }
  return g;
}

BooleanTable compose_activation_for_amplitude(
    const std::function<double(double)>& g, int m,
    const FixedPointFormat& out_fmt, Rounding rounding) {
  if (m < 2 || m > 12) {
    throw std::invalid_argument("register width m must be in [2, 12]");
  }
  out_fmt.validate();
  std::size_t rows = std::size_t{1} << m;
  double half = std::ldexp(1.0, m - 1);
  std::vector<std::uint32_t> table(rows);
  for (std::size_t u = 0; u < rows; ++u) {
    double t = -std::cos(static_cast<double>(u) * std::numbers::pi / half);
    double out = std::clamp(g(t), out_fmt.min_value(), out_fmt.max_value());
    table[u] = static_cast<std::uint32_t>(quantize(out, out_fmt, rounding));
  }
  return BooleanTable(m, out_fmt.total_bits(), std::move(table));
}

namespace {

// Hadamards + controlled reflection powers + inverse QFT on
// [register][state block] qubits; the state block is assumed already
// initialized to phi by the caller.
void append_amplitude_qpe_block(Circuit& circuit, int m, int block_qubits,
                                const std::vector<cdouble>& reflection) {
  for (int j = 0; j < m; ++j) circuit.append(Gate::h(j));
  std::vector<int> block(static_cast<std::size_t>(block_qubits));
  for (int i = 0; i < block_qubits; ++i) {
    block[static_cast<std::size_t>(i)] = m + i;
  }
  Gate reflect = Gate::unitary(reflection, block);
  for (int j = 0; j < m; ++j) {
    for (Gate& g : controlled_power(reflect, m - 1 - j, j)) {
      circuit.append(std::move(g));
    }
  }
  Circuit iqft = inverse_qft_circuit(m);
  std::vector<int> map(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) map[static_cast<std::size_t>(j)] = j;
  circuit.append(iqft, map);
}

// Completes phi to a unitary whose first column is phi (the exact stand-in
// for a state-preparation routine). Modified Gram-Schmidt, run twice.
std::vector<cdouble> preparation_unitary(std::span<const cdouble> phi) {
  std::size_t dim = phi.size();
  std::vector<std::vector<cdouble>> cols;
  cols.emplace_back(phi.begin(), phi.end());
  for (std::size_t i = 0; i < dim && cols.size() < dim; ++i) {
    std::vector<cdouble> v(dim, cdouble{0.0, 0.0});
    v[i] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& c : cols) {
        cdouble proj = 0.0;
        for (std::size_t r = 0; r < dim; ++r) proj += std::conj(c[r]) * v[r];
        for (std::size_t r = 0; r < dim; ++r) v[r] -= proj * c[r];
      }
    }
    double norm = 0.0;
    for (const cdouble& a : v) norm += std::norm(a);
    if (norm < 1e-12) continue;
    norm = std::sqrt(norm);
    for (cdouble& a : v) a /= norm;
    cols.push_back(std::move(v));
  }
  std::vector<cdouble> matrix(dim * dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) matrix[r * dim + c] = cols[c][r];
  }
  return matrix;
}

}  // namespace

Circuit build_amplitude_neuron_circuit(const AmplitudeNeuronConfig& cfg,
                                       std::span<const double> sample) {
  cfg.validate();
  if (static_cast<int>(sample.size()) != cfg.n) {
    throw std::invalid_argument("sample length must equal the feature count");
  }
  StateVector phi = prepare_phi(sample, cfg.weights);
  int block_qubits = phi.num_qubits();
  int nq = cfg.m + block_qubits + cfg.activation.m;
  Circuit circuit(nq);
  std::vector<int> block(static_cast<std::size_t>(block_qubits));
  for (int i = 0; i < block_qubits; ++i) {
    block[static_cast<std::size_t>(i)] = cfg.m + i;
  }
  circuit.append(Gate::unitary(preparation_unitary(phi.amplitudes()), block));
  append_amplitude_qpe_block(circuit, cfg.m, block_qubits,
                             build_reflection_operator(phi));
  Circuit oracle = build_assignment_circuit(cfg.activation);
  std::vector<int> oracle_map(
      static_cast<std::size_t>(cfg.m + cfg.activation.m));
  for (int j = 0; j < cfg.m; ++j) oracle_map[static_cast<std::size_t>(j)] = j;
  for (int b = 0; b < cfg.activation.m; ++b) {
    oracle_map[static_cast<std::size_t>(cfg.m + b)] =
        cfg.m + block_qubits + b;
  }
  circuit.append(oracle, oracle_map);
  return circuit;
}

NeuronOutput run_amplitude_neuron(const AmplitudeNeuronConfig& cfg,
                                  std::span<const double> sample,
                                  const RunMode& mode) {
  cfg.validate();
  if (static_cast<int>(sample.size()) != cfg.n) {
    throw std::invalid_argument("sample length must equal the feature count");
  }
  StateVector phi = prepare_phi(sample, cfg.weights);
  int block_qubits = phi.num_qubits();
  int nq = cfg.m + block_qubits;
  StateVector state(nq);
  {
    std::vector<cdouble> amps(std::size_t{1} << nq, cdouble{0.0, 0.0});
    std::span<const cdouble> phi_amps = phi.amplitudes();
    std::copy(phi_amps.begin(), phi_amps.end(), amps.begin());
    state.set_amplitudes(amps);
  }
  Circuit block(nq);
  append_amplitude_qpe_block(block, cfg.m, block_qubits,
                             build_reflection_operator(phi));
  block.apply_to(state);

  NeuronOutput out;
  out.distribution = register_distribution(state, cfg.m, mode);
  // Both eigenbranches carry the same angle, so u and 2^m - u are the same
  // reading; fold before taking the mode.
  std::uint32_t size = std::uint32_t{1} << cfg.m;
  std::uint32_t half = size / 2;
  std::map<std::uint32_t, double> folded;
  for (const auto& [code, p] : out.distribution) {
    std::uint32_t u = code > half ? size - code : code;
    folded[u] += p;
  }
  std::uint32_t mode_u = mode_of(folded);
  out.register_value = mode_u;
  out.boundary = mode_u == half;
  out.decoded_pre_activation =
      -std::cos(static_cast<double>(mode_u) * std::numbers::pi /
                static_cast<double>(half));
  out.activation_code = cfg.activation(mode_u);
  return out;
}

}  // namespace qneuron
