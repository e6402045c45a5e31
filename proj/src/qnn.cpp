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

#include "qneuron/qnn.hpp"

#include <cmath>
#include <random>
#include <string>

#include "rng.hpp"

namespace qneuron {

ForwardMode parse_forward_mode(std::string_view name) {
  if (name == "quantum") return ForwardMode::Quantum;
  if (name == "surrogate") return ForwardMode::Surrogate;
  throw std::invalid_argument("unknown forward mode '" + std::string(name) +
                              "' (expected quantum or surrogate)");
}

std::string_view forward_mode_name(ForwardMode mode) {
  return mode == ForwardMode::Quantum ? "quantum" : "surrogate";
}

FixedPointFormat QFNNConfig::register_format() const {
  return FixedPointFormat{1, m - 1 - fb, fb};
}

ActivationSpec QFNNConfig::activation_spec() const {
  return ActivationSpec{activation, register_format(), register_format()};
}

int QFNNConfig::weight_count() const {
  int count = 0;
  for (std::size_t k = 0; k + 1 < layer_sizes.size(); ++k) {
    count += layer_sizes[k] * layer_sizes[k + 1];
  }
  return count;
}

void QFNNConfig::validate(bool require_weights) const {
  if (layer_sizes.size() < 2) {
    throw std::invalid_argument("network needs at least two layers");
  }
  for (int size : layer_sizes) {
    if (size < 1) throw std::invalid_argument("layer sizes must be positive");
  }
  if (layer_sizes.back() != 1) {
    throw std::invalid_argument("the output layer must have one neuron");
  }
  if (m < 2 || m > 12) {
    throw std::invalid_argument("register width m must be in [2, 12]");
  }
  if (fb < 1 || fb > m - 1) {
    throw std::invalid_argument(
        "fraction bits must be in [1, m-1] (the hand-off encodes fb bits)");
  }
  if (require_weights || !weights.empty()) {
    if (weights.size() != layer_sizes.size() - 1) {
      throw std::invalid_argument("one weight matrix per layer pair required");
    }
    for (std::size_t k = 0; k + 1 < layer_sizes.size(); ++k) {
      auto expected = static_cast<std::size_t>(layer_sizes[k]) *
                      static_cast<std::size_t>(layer_sizes[k + 1]);
      if (weights[k].size() != expected) {
        throw std::invalid_argument("weight matrix shape mismatch at layer " +
                                    std::to_string(k + 1));
      }
    }
  }
}

Dataset xor_dataset() {
  Dataset data;
  data.samples = {{{0.0, 0.0}, 0.0},
                  {{0.0, 1.0}, 1.0},
                  {{1.0, 0.0}, 1.0},
                  {{1.0, 1.0}, 0.0}};
  return data;
}

namespace {

// One quantum layer: every neuron shares the activation table; inputs are
// binary on the first layer (one integer bit per feature) and fb-fraction-bit
// codes afterwards.
std::vector<double> quantum_layer(const QFNNConfig& net,
                                  const BooleanTable& table, int layer,
                                  std::span<const double> inputs,
                                  std::vector<double>* pre_out) {
  int n = net.layer_sizes[static_cast<std::size_t>(layer)];
  int width = net.layer_sizes[static_cast<std::size_t>(layer + 1)];
  SampleEncoding enc = layer == 0
                           ? basis_encode_sample(inputs, 0, 1)
                           : basis_encode_sample(inputs, net.fb, 0);
  FixedPointFormat reg_fmt{1, net.m - 1 - net.fb, net.fb};
  std::vector<double> outputs(static_cast<std::size_t>(width));
  for (int j = 0; j < width; ++j) {
    BasisNeuronConfig cfg;
    cfg.n = n;
    cfg.p = enc.p;
    cfg.sample_int_bits = enc.int_bits;
    cfg.m = net.m;
    cfg.fb = net.fb;
    cfg.activation = table;
    cfg.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      cfg.weights[static_cast<std::size_t>(i)] =
          net.weights[static_cast<std::size_t>(layer)]
                     [static_cast<std::size_t>(i * width + j)];
    }
    NeuronOutput out;
    try {
      out = run_basis_neuron(cfg, enc);
    } catch (const std::domain_error& e) {
      throw std::domain_error("layer " + std::to_string(layer + 1) +
                              " neuron " + std::to_string(j) + ": " +
                              e.what());
    }
    if (pre_out) {
      (*pre_out)[static_cast<std::size_t>(j)] = out.decoded_pre_activation;
    }
    outputs[static_cast<std::size_t>(j)] = decode(out.activation_code, reg_fmt);
  }
  return outputs;
}

// Activation values leaving a neuron live in the register's range, but the
// next layer encodes pure fractions, so the hand-off clamps into [0, 1).
std::vector<double> clamp_for_handoff(std::vector<double> values, int p) {
  double hi = 1.0 - std::ldexp(1.0, -p);
  for (double& v : values) {
    if (v < 0.0) v = 0.0;
    if (v > hi) v = hi;
  }
  return values;
}

}  // namespace

ForwardTrace qfnn_forward(const QFNNConfig& net, std::span<const double> x,
                          ForwardMode mode) {
  net.validate();
  if (static_cast<int>(x.size()) != net.layer_sizes.front()) {
    throw std::invalid_argument("input length must match the first layer");
  }
  ForwardTrace trace;
  std::size_t layers = net.layer_sizes.size() - 1;
  trace.pre_activations.resize(layers);
  trace.activations.resize(layers);
  if (mode == ForwardMode::Surrogate) {
    std::vector<double> current(x.begin(), x.end());
    for (std::size_t k = 0; k < layers; ++k) {
      int n = net.layer_sizes[k];
      int width = net.layer_sizes[k + 1];
      std::vector<double> pre(static_cast<std::size_t>(width), 0.0);
      std::vector<double> act(static_cast<std::size_t>(width), 0.0);
      for (int j = 0; j < width; ++j) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
          sum += net.weights[k][static_cast<std::size_t>(i * width + j)] *
                 current[static_cast<std::size_t>(i)];
        }
        pre[static_cast<std::size_t>(j)] = sum;
        act[static_cast<std::size_t>(j)] = eval_activation(net.activation, sum);
      }
      trace.pre_activations[k] = pre;
      trace.activations[k] = act;
      current = act;
    }
    trace.output = trace.activations.back()[0];
    return trace;
  }
  BooleanTable table = activation_table(net.activation_spec());
  std::vector<double> current(x.begin(), x.end());
  for (std::size_t k = 0; k < layers; ++k) {
    int width = net.layer_sizes[k + 1];
    trace.pre_activations[k].resize(static_cast<std::size_t>(width));
    std::vector<double> act =
        quantum_layer(net, table, static_cast<int>(k), current,
                      &trace.pre_activations[k]);
    trace.activations[k] = act;
    current = k + 1 < layers ? clamp_for_handoff(std::move(act), net.fb)
                             : std::move(act);
  }
  trace.output = trace.activations.back()[0];
  return trace;
}

double qfnn_loss(const QFNNConfig& net, const Dataset& data,
                 ForwardMode mode) {
  if (data.samples.empty()) {
    throw std::invalid_argument("loss of an empty dataset is undefined");
  }
  double total = 0.0;
  for (const Dataset::Sample& sample : data.samples) {
    double z = qfnn_forward(net, sample.x, mode).output;
    double r = sample.d - z;
    total += r * r;
  }
  return total / static_cast<double>(data.q());
}

std::vector<std::vector<double>> qfnn_gradient(const QFNNConfig& net,
                                               const Dataset& data) {
  net.validate();
  if (data.samples.empty()) {
    throw std::invalid_argument("gradient of an empty dataset is undefined");
  }
  std::size_t layers = net.layer_sizes.size() - 1;
  std::vector<std::vector<double>> grad(layers);
  for (std::size_t k = 0; k < layers; ++k) {
    grad[k].assign(net.weights[k].size(), 0.0);
  }
  double inv_q = 1.0 / static_cast<double>(data.q());
  for (const Dataset::Sample& sample : data.samples) {
    ForwardTrace trace = qfnn_forward(net, sample.x, ForwardMode::Surrogate);
    // delta starts at d(loss)/d(pre) of the output neuron and walks back.
    std::vector<double> delta(1);
    delta[0] = 2.0 * inv_q * (trace.output - sample.d) *
               eval_activation_derivative(net.activation,
                                          trace.pre_activations.back()[0]);
    for (std::size_t k = layers; k-- > 0;) {
      int n = net.layer_sizes[k];
      int width = net.layer_sizes[k + 1];
      const std::vector<double>& below =
          k == 0 ? sample.x : trace.activations[k - 1];
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < width; ++j) {
          grad[k][static_cast<std::size_t>(i * width + j)] +=
              below[static_cast<std::size_t>(i)] *
              delta[static_cast<std::size_t>(j)];
        }
      }
      if (k == 0) break;
      std::vector<double> next(static_cast<std::size_t>(n), 0.0);
      for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int j = 0; j < width; ++j) {
          sum += net.weights[k][static_cast<std::size_t>(i * width + j)] *
                 delta[static_cast<std::size_t>(j)];
        }
        next[static_cast<std::size_t>(i)] =
            sum * eval_activation_derivative(
                      net.activation, trace.pre_activations[k - 1]
                                                           [static_cast<std::size_t>(i)]);
      }
      delta = std::move(next);
    }
  }
  return grad;
}

void TrainConfig::validate() const {
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("step length must be finite and >= 0");
  }
  if (epochs < 0) throw std::invalid_argument("epochs must be >= 0");
  if (!(init_scale >= 0.0) || !std::isfinite(init_scale)) {
    throw std::invalid_argument("init scale must be finite and >= 0");
  }
}

TrainResult train_qfnn(QFNNConfig net, const Dataset& data,
                       const TrainConfig& cfg, ForwardMode loss_mode) {
  cfg.validate();
  net.validate(false);
  if (net.weights.empty()) {
    std::mt19937_64 rng(cfg.seed);
    net.weights.resize(net.layer_sizes.size() - 1);
    for (std::size_t k = 0; k + 1 < net.layer_sizes.size(); ++k) {
      auto count = static_cast<std::size_t>(net.layer_sizes[k]) *
                   static_cast<std::size_t>(net.layer_sizes[k + 1]);
      net.weights[k].resize(count);
      for (double& w : net.weights[k]) {
        w = (2.0 * detail::random_unit(rng) - 1.0) * cfg.init_scale;
      }
    }
  }
  net.validate();
  TrainResult result;
  result.curve.reserve(static_cast<std::size_t>(cfg.epochs) + 1);
  double initial = qfnn_loss(net, data, loss_mode);
  result.curve.push_back(initial);
  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    std::vector<std::vector<double>> grad = qfnn_gradient(net, data);
    for (std::size_t k = 0; k < grad.size(); ++k) {
      for (std::size_t i = 0; i < grad[k].size(); ++i) {
        net.weights[k][i] -= cfg.eta * grad[k][i];
      }
    }
    double loss = qfnn_loss(net, data, loss_mode);
    result.curve.push_back(loss);
    if (loss > 10.0 * initial) {
      throw DivergenceError("training diverged at epoch " +
                            std::to_string(epoch) + ": loss " +
                            std::to_string(loss) + " exceeds 10x initial " +
                            std::to_string(initial));
    }
  }
  result.net = std::move(net);
  return result;
}

}  // namespace qneuron
