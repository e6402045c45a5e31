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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "json.hpp"
#include "qneuron/activation.hpp"
#include "qneuron/circuit.hpp"
#include "qneuron/neuron.hpp"
#include "qneuron/noise.hpp"
#include "qneuron/qnn.hpp"
#include "qneuron/statevec.hpp"

namespace qneuron {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// 10 significant digits; the fixed width all CSV cells share.
std::string format_double(double value);
/// Shortest decimal that round-trips to the exact double.
std::string format_double_exact(double value);

/// Gate-list document: num_qubits plus one record per gate with kind,
/// targets, controls, and (where the kind carries them) the phase fraction
/// or matrix entries. Angles and complex components are exact decimal
/// strings so the document loses nothing.
nlohmann::json circuit_to_json(const Circuit& circuit);

enum class NeuronType { Basis, Amplitude };

/// A neuron configuration as loaded from disk. `out_fmt` is the format the
/// activation output register decodes under: the shared register format for
/// named activations, a plain unsigned integer view for truth-table files.
struct NeuronConfig {
  NeuronType type = NeuronType::Basis;
  BasisNeuronConfig basis;
  AmplitudeNeuronConfig amplitude;
  FixedPointFormat out_fmt;
};

/// Reads {type, n, p, m, fb, weights, activation} JSON. `activation` is an
/// activation name or a truth-table file path (resolved relative to the
/// config's directory). Basis extras: `sample_int_bits` (default 1 when
/// p == 0, else 0). Amplitude configs ignore p and use fb only to shape the
/// named-activation output format.
NeuronConfig load_neuron_config(const std::filesystem::path& path);

NoiseModel load_noise_model(const std::filesystem::path& path);

/// Everything a run reports: register value and its decoded pre-activation,
/// activation code and decoded value, the full distribution.
nlohmann::json neuron_output_to_json(const NeuronOutput& out,
                                     const FixedPointFormat& reg_fmt,
                                     const FixedPointFormat& out_fmt);

nlohmann::json resource_report_to_json(const ResourceReport& report);

nlohmann::json qfnn_to_json(const QFNNConfig& net);
QFNNConfig qfnn_from_json(const nlohmann::json& j);

/// "bitstring,count" rows, lexicographic by bitstring.
void write_histogram_csv(std::ostream& os, const MeasurementHistogram& hist);
/// "bitstring,probability" rows for exact runs.
void write_probability_csv(std::ostream& os,
                           std::span<const std::pair<std::string, double>> rows);
/// "input,exact,quantized" rows in curve order.
void write_activation_csv(std::ostream& os, std::span<const CurvePoint> curve);
/// "epoch,loss" rows; epoch 0 is the pre-training loss.
void write_loss_csv(std::ostream& os, std::span<const double> curve);

/// Record of one CLI invocation, enough to replay it bit-for-bit.
struct RunManifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::vector<std::string> outputs;
  std::string tool_version{kToolVersion};
  std::string timestamp;
};

std::string iso_timestamp_utc();
nlohmann::json manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& j);
void save_manifest(const std::filesystem::path& path,
                   const RunManifest& manifest);
RunManifest load_manifest(const std::filesystem::path& path);

/// Parses a whole file as JSON with the path included in error messages.
nlohmann::json load_json_file(const std::filesystem::path& path);

}  // namespace qneuron
