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

#include <stdexcept>

#include "qneuron/activation.hpp"
#include "qneuron/neuron.hpp"

namespace qneuron {

/// Thrown when training blows past the divergence guard (loss exceeding ten
/// times its initial value).
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How the network is evaluated: Quantum runs every neuron through its
/// register circuit and hands the decoded mode to the next layer re-encoded
/// with fb fraction bits; Surrogate is the smooth real-arithmetic twin the
/// gradients flow through.
enum class ForwardMode { Quantum, Surrogate };

ForwardMode parse_forward_mode(std::string_view name);
std::string_view forward_mode_name(ForwardMode mode);

/// Layered feedforward net of basis-encoded neurons (no bias terms; the
/// edge weights are the only parameters). weights[k] is the dense matrix
/// between layer k and k+1, flattened as [from * layer_sizes[k+1] + to].
/// All neurons share one register format (m bits, fb of them fractional)
/// and one activation, quantized between identical in/out formats.
struct QFNNConfig {
  std::vector<int> layer_sizes{2, 2, 1};
  std::vector<std::vector<double>> weights;
  int m = 8;
  int fb = 4;
  ActivationKind activation = ActivationKind::Sigmoid;

  FixedPointFormat register_format() const;
  ActivationSpec activation_spec() const;
  int weight_count() const;
  /// Shape checks; with require_weights the weight matrices must be
  /// populated (training can start from an empty set it initializes).
  void validate(bool require_weights = true) const;
};

struct Dataset {
  struct Sample {
    std::vector<double> x;
    double d = 0.0;
  };
  std::vector<Sample> samples;

  std::size_t q() const { return samples.size(); }
};

/// The four-sample XOR truth table with binary inputs.
Dataset xor_dataset();

/// Documented XOR training defaults: the golden run `train-xor` performs
/// when no flags are given, and the plateau that run settles at (quantum
/// loss, m = 8, fb = 4). The run enters a stable attractor: the curve is
/// non-increasing from kXorBurnIn on and flat at kXorPlateau from epoch
/// 2602. Tests pin these numbers.
inline constexpr double kXorEta = 1.0;
inline constexpr int kXorEpochs = 3000;
inline constexpr std::uint64_t kXorSeed = 19;
inline constexpr int kXorBurnIn = 1700;
inline constexpr double kXorPlateau = 0.1669921875;

struct ForwardTrace {
  double output = 0.0;
  /// Per layer: the register's decoded value (quantum) or the real weighted
  /// sum (surrogate), one entry per neuron.
  std::vector<std::vector<double>> pre_activations;
  std::vector<std::vector<double>> activations;
};

/// Evaluates the net on one input. Quantum-mode register overflows surface
/// as std::domain_error tagged with the layer and neuron index.
ForwardTrace qfnn_forward(const QFNNConfig& net, std::span<const double> x,
                          ForwardMode mode);

/// Mean square loss (1/q) * sum (d - z)^2.
double qfnn_loss(const QFNNConfig& net, const Dataset& data, ForwardMode mode);

/// Full-batch gradient through the smooth surrogate, same shape as the
/// weight matrices.
std::vector<std::vector<double>> qfnn_gradient(const QFNNConfig& net,
                                               const Dataset& data);

struct TrainConfig {
  double eta = 1.0;
  int epochs = 100;
  std::uint64_t seed = 0;
  double init_scale = 1.0;

  void validate() const;
};

struct TrainResult {
  /// curve[0] is the initial loss, curve[e] the loss after epoch e.
  std::vector<double> curve;
  QFNNConfig net;
};

/// Full-batch gradient descent. Empty weights are initialized uniformly in
/// [-init_scale, init_scale] from the seed; provided weights are used as-is.
/// The curve records `loss_mode` evaluations; gradients always come from the
/// surrogate. Throws DivergenceError when a recorded loss exceeds ten times
/// the initial loss.
TrainResult train_qfnn(QFNNConfig net, const Dataset& data,
                       const TrainConfig& cfg,
                       ForwardMode loss_mode = ForwardMode::Quantum);

}  // namespace qneuron
