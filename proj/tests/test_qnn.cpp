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

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "qneuron/qnn.hpp"

namespace qn = qneuron;

namespace {

qn::QFNNConfig random_net(std::mt19937_64& rng, double scale) {
  qn::QFNNConfig net;
  std::uniform_real_distribution<double> w(-scale, scale);
  net.weights = {{w(rng), w(rng), w(rng), w(rng)}, {w(rng), w(rng)}};
  return net;
}

}  // namespace

TEST_CASE("forward mode names") {
  CHECK(qn::parse_forward_mode("quantum") == qn::ForwardMode::Quantum);
  CHECK(qn::parse_forward_mode("surrogate") == qn::ForwardMode::Surrogate);
  CHECK_THROWS_AS(qn::parse_forward_mode("classical"), std::invalid_argument);
  CHECK(qn::forward_mode_name(qn::ForwardMode::Quantum) == "quantum");
}

TEST_CASE("XOR dataset") {
  qn::Dataset data = qn::xor_dataset();
  REQUIRE(data.q() == 4);
  for (const auto& sample : data.samples) {
    REQUIRE(sample.x.size() == 2);
    double expected = sample.x[0] != sample.x[1] ? 1.0 : 0.0;
    CHECK(sample.d == expected);
  }
}

TEST_CASE("config shape validation") {
  qn::QFNNConfig net;
  CHECK(net.weight_count() == 6);
  net.validate(false);
  CHECK_THROWS_AS(net.validate(true), std::invalid_argument);

  net.weights = {{1, 2, 3, 4}, {5, 6}};
  net.validate(true);

  net.weights = {{1, 2, 3}, {5, 6}};
  CHECK_THROWS_AS(net.validate(true), std::invalid_argument);

  qn::QFNNConfig wide;
  wide.layer_sizes = {2, 3, 2};  // Output layer must be a single neuron.
  CHECK_THROWS_AS(wide.validate(false), std::invalid_argument);

  qn::QFNNConfig bad_fb;
  bad_fb.fb = 0;  // The hand-off re-encodes fb fraction bits.
  CHECK_THROWS_AS(bad_fb.validate(false), std::invalid_argument);

  qn::QFNNConfig fmt;
  CHECK(fmt.register_format() == qn::FixedPointFormat::signed_format(3, 4));
  CHECK(fmt.activation_spec().in_fmt == fmt.register_format());
}

TEST_CASE("all-zero weights evaluate to one half") {
  qn::QFNNConfig net;
  net.weights = {{0, 0, 0, 0}, {0, 0}};
  for (auto mode : {qn::ForwardMode::Surrogate, qn::ForwardMode::Quantum}) {
    for (const auto& sample : qn::xor_dataset().samples) {
      auto trace = qn::qfnn_forward(net, sample.x, mode);
      CHECK(trace.output == doctest::Approx(0.5).epsilon(1e-12));
    }
    CHECK(qn::qfnn_loss(net, qn::xor_dataset(), mode) ==
          doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("forward trace shape") {
  std::mt19937_64 rng(3);
  qn::QFNNConfig net = random_net(rng, 0.5);
  auto trace = qn::qfnn_forward(net, qn::xor_dataset().samples[1].x,
                                qn::ForwardMode::Surrogate);
  REQUIRE(trace.pre_activations.size() == 2);
  REQUIRE(trace.activations.size() == 2);
  CHECK(trace.pre_activations[0].size() == 2);
  CHECK(trace.pre_activations[1].size() == 1);
  CHECK(trace.output == trace.activations[1][0]);
}

TEST_CASE("quantum register overflow names the neuron") {
  qn::QFNNConfig net;
  net.weights = {{100.0, 0, 0, 0}, {0, 0}};
  std::vector<double> x = {1.0, 1.0};
  try {
    qn::qfnn_forward(net, x, qn::ForwardMode::Quantum);
    FAIL("expected a register overflow");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("layer") != std::string::npos);
    CHECK(std::string(e.what()).find("neuron") != std::string::npos);
  }
}

TEST_CASE("analytic gradient matches finite differences") {
  std::mt19937_64 rng(29);
  qn::Dataset data = qn::xor_dataset();
  const double h = 1e-5;
  for (int trial = 0; trial < 20; ++trial) {
    qn::QFNNConfig net = random_net(rng, 1.5);
    auto grad = qn::qfnn_gradient(net, data);
    for (std::size_t layer = 0; layer < grad.size(); ++layer) {
      for (std::size_t i = 0; i < grad[layer].size(); ++i) {
        qn::QFNNConfig plus = net;
        plus.weights[layer][i] += h;
        qn::QFNNConfig minus = net;
        minus.weights[layer][i] -= h;
        double numeric =
            (qn::qfnn_loss(plus, data, qn::ForwardMode::Surrogate) -
             qn::qfnn_loss(minus, data, qn::ForwardMode::Surrogate)) /
            (2.0 * h);
        double denom = std::max({std::abs(numeric),
                                 std::abs(grad[layer][i]), 1e-8});
        CHECK(std::abs(grad[layer][i] - numeric) / denom < 1e-4);
      }
    }
  }
}

TEST_CASE("quantum output stays within the propagated quantization bound") {
  // With exact binary inputs the only quantum/surrogate gaps are the
  // register rounding (one step), the activation output rounding (half a
  // step), and the hand-off truncation plus clamp (up to two steps). The
  // sigmoid slope bound 1/4 propagates layer one's error through layer two.
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> w(-2.0, 2.0);
  const int m = 10;
  const int fb = 6;
  const double step = std::ldexp(1.0, -fb);
  int compared = 0;
  for (int trial = 0; trial < 10; ++trial) {
    qn::QFNNConfig net;
    net.m = m;
    net.fb = fb;
    net.weights = {{w(rng), w(rng), w(rng), w(rng)}, {w(rng), w(rng)}};
    double fan_in2 =
        std::abs(net.weights[1][0]) + std::abs(net.weights[1][1]);

    double e_pre1 = step;
    double e_act1 = 0.25 * e_pre1 + 0.5 * step;
    double e_in2 = e_act1 + 2.0 * step;
    double e_pre2 = fan_in2 * e_in2 + step;
    double bound = 0.25 * e_pre2 + 0.5 * step;

    for (const auto& sample : qn::xor_dataset().samples) {
      double zq, zs;
      try {
        zq = qn::qfnn_forward(net, sample.x, qn::ForwardMode::Quantum).output;
      } catch (const std::domain_error&) {
        continue;  // Register overflow for this draw; skip.
      }
      zs = qn::qfnn_forward(net, sample.x, qn::ForwardMode::Surrogate).output;
      CHECK(std::abs(zq - zs) <= bound);
      ++compared;
    }
  }
  CHECK(compared >= 20);
}

TEST_CASE("zero learning rate freezes the curve") {
  qn::QFNNConfig net;
  qn::TrainConfig cfg;
  cfg.eta = 0.0;
  cfg.epochs = 10;
  cfg.seed = 5;
  auto result = qn::train_qfnn(net, qn::xor_dataset(), cfg,
                               qn::ForwardMode::Surrogate);
  REQUIRE(result.curve.size() == 11);
  for (double loss : result.curve) CHECK(loss == result.curve[0]);
}

TEST_CASE("training is bit-reproducible per seed") {
  qn::TrainConfig cfg;
  cfg.eta = 0.8;
  cfg.epochs = 40;
  cfg.seed = 77;
  auto a = qn::train_qfnn(qn::QFNNConfig{}, qn::xor_dataset(), cfg,
                          qn::ForwardMode::Surrogate);
  auto b = qn::train_qfnn(qn::QFNNConfig{}, qn::xor_dataset(), cfg,
                          qn::ForwardMode::Surrogate);
  CHECK(a.curve == b.curve);
  CHECK(a.net.weights == b.net.weights);

  qn::TrainConfig other = cfg;
  other.seed = 78;
  auto c = qn::train_qfnn(qn::QFNNConfig{}, qn::xor_dataset(), other,
                          qn::ForwardMode::Surrogate);
  CHECK(a.curve != c.curve);
}

TEST_CASE("provided weights are trained in place") {
  qn::QFNNConfig net;
  net.weights = {{0.3, -0.2, 0.4, 0.1}, {0.5, -0.4}};
  qn::TrainConfig cfg;
  cfg.eta = 0.5;
  cfg.epochs = 5;
  auto result = qn::train_qfnn(net, qn::xor_dataset(), cfg,
                               qn::ForwardMode::Surrogate);
  CHECK(result.curve.front() ==
        doctest::Approx(qn::qfnn_loss(net, qn::xor_dataset(),
                                      qn::ForwardMode::Surrogate)));
  CHECK(result.net.weights != net.weights);
  CHECK(result.curve.back() < result.curve.front());
}

TEST_CASE("divergence guard") {
  // All-zero weights put the output at exactly 0.5, so a target of 0.51
  // starts the loss at 1e-4; one huge step saturates the output neuron and
  // the recorded loss blows past ten times that.
  qn::QFNNConfig net;
  net.weights = {{0, 0, 0, 0}, {0, 0}};
  qn::Dataset data;
  data.samples.push_back({{1.0, 1.0}, 0.51});

  qn::TrainConfig wild;
  wild.eta = 1e6;
  wild.epochs = 5;
  CHECK_THROWS_AS(
      qn::train_qfnn(net, data, wild, qn::ForwardMode::Surrogate),
      qn::DivergenceError);
  try {
    qn::train_qfnn(net, data, wild, qn::ForwardMode::Surrogate);
  } catch (const qn::DivergenceError& e) {
    CHECK(std::string(e.what()).find("epoch") != std::string::npos);
  }
}

TEST_CASE("documented defaults are self-consistent") {
  CHECK(qn::kXorEta > 0.0);
  CHECK(qn::kXorEpochs > qn::kXorBurnIn);
  CHECK(std::abs(qn::kXorPlateau - 0.126) <= 0.05);
}
