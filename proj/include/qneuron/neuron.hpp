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

#include "qneuron/circuit.hpp"
#include "qneuron/fixedpoint.hpp"
#include "qneuron/oracle.hpp"

namespace qneuron {

/// How a neuron is evaluated: exact marginal probabilities (shots == 0) or a
/// seeded finite-shot histogram.
struct RunMode {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  static RunMode exact() { return RunMode{}; }
  static RunMode sampled(std::uint64_t shots, std::uint64_t seed) {
    return RunMode{shots, seed};
  }
  bool is_exact() const { return shots == 0; }
};

/// Basis-encoded neuron: each feature is written into sample qubits as a
/// fixed-point code (`sample_int_bits` unsigned integer bits, then `p`
/// fraction bits), the weighted sum lands in an m-bit phase-estimation
/// register scaled by 2^fb, and an activation oracle maps that register to
/// the output register.
///
/// The register reads 2^fb * x.w in two's complement, so the sum must round
/// into [-2^(m-1), 2^(m-1) - 1]; runs outside that window throw
/// std::domain_error.
struct BasisNeuronConfig {
  int n = 1;
  int p = 0;
  int sample_int_bits = 0;
  int m = 2;
  int fb = 0;
  std::vector<double> weights;
  BooleanTable activation;

  int bits_per_feature() const { return p + sample_int_bits; }
  /// Signed two's complement format the register value decodes under.
  FixedPointFormat register_format() const;
  void validate() const;
};

/// Amplitude-encoded neuron: sample and weights (normalized, n = 2^k
/// entries) meet through the reflection operator's eigenphases; the m-bit
/// register reads u with u*pi/2^(m-1) ~= 2*gamma and decodes back to the
/// normalized inner product via -cos.
struct AmplitudeNeuronConfig {
  int n = 2;
  int m = 4;
  std::vector<double> weights;
  BooleanTable activation;

  void validate() const;
};

struct NeuronOutput {
  /// Most probable register outcome (exact mode) or the empirical mode
  /// (shots mode); ties break toward the lower code. For the amplitude
  /// neuron this is the folded value (outcomes u >= 2^(m-1) count as
  /// 2^m - u, since both branches carry the same angle).
  std::uint32_t register_value = 0;
  double decoded_pre_activation = 0.0;
  std::uint32_t activation_code = 0;
  /// Set when an amplitude run folds the exact boundary outcome 2^(m-1)
  /// (inner product 1), which has no leading-zero representative.
  bool boundary = false;
  /// Unfolded register distribution, code -> probability (exact) or
  /// empirical frequency (shots mode).
  std::map<std::uint32_t, double> distribution;
};

/// Full basis-neuron circuit on p*n + m + out-bits qubits. Layout: [0, m) the
/// phase-estimation register, [m, m + out) the activation output register,
/// then the sample qubits. Blocks: X sample encoding, Hadamards, the CRz
/// inner-product comb, inverse QFT, then the activation oracle as an
/// assignment construction.
Circuit build_basis_neuron_circuit(const BasisNeuronConfig& cfg,
                                   const SampleEncoding& sample);

/// Evaluates the neuron (without materializing the output register: the
/// activation oracle is a permutation, so its code is looked up from the
/// measured register value).
NeuronOutput run_basis_neuron(const BasisNeuronConfig& cfg,
                              const SampleEncoding& sample,
                              const RunMode& mode = RunMode::exact());

/// (|+>|x> + |->|w>)/sqrt(2) on 1 + log2(n) qubits (qubit 0 = the ancilla),
/// with x and w normalized first. The |0> branch carries (x+w)/2, whose norm
/// is sin(gamma) = sqrt((1 + <w|x>)/2).
StateVector prepare_phi(std::span<const double> x, std::span<const double> w);

/// Reflection operator (I - 2|phi><phi|)(Z tensor I), dense row-major over
/// phi's full space. Its eigenphases on the plane spanned by the two branch
/// states are +-2*gamma, which is what the phase estimation reads out.
std::vector<cdouble> build_reflection_operator(const StateVector& phi);

/// Activation composed with the register decoding: table[u] =
/// quantize(g(-cos(u * pi / 2^(m-1))), out_fmt). Requires m >= 2.
BooleanTable compose_activation_for_amplitude(
    const std::function<double(double)>& g, int m,
    const FixedPointFormat& out_fmt,
    Rounding rounding = Rounding::NearestEven);

/// Full amplitude-neuron circuit on 1 + log2(n) + m + out-bits qubits.
/// Layout: [0, m) register, then the 1 + log2(n) state block (prepared from
/// |0...0> by a dense unitary whose first column is phi), then the output
/// register fed by the activation oracle.
Circuit build_amplitude_neuron_circuit(const AmplitudeNeuronConfig& cfg,
                                       std::span<const double> sample);

NeuronOutput run_amplitude_neuron(const AmplitudeNeuronConfig& cfg,
                                  std::span<const double> sample,
                                  const RunMode& mode = RunMode::exact());

}  // namespace qneuron
