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

#include "qneuron/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>

namespace qneuron {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::string format_double_exact(double value) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

namespace {

nlohmann::json complex_to_json(const cdouble& z) {
  return nlohmann::json::array(
      {format_double_exact(z.real()), format_double_exact(z.imag())});
}

bool kind_has_phase(GateKind kind) {
  return kind == GateKind::Rz || kind == GateKind::CRz;
}

}  // namespace

nlohmann::json circuit_to_json(const Circuit& circuit) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& gate : circuit.gates()) {
    nlohmann::json g;
    g["kind"] = std::string(kind_name(gate.kind));
    g["targets"] = gate.targets;
    g["controls"] = gate.controls;
    if (kind_has_phase(gate.kind)) g["phase"] = format_double_exact(gate.phase);
    if (!gate.values.empty()) {
      nlohmann::json values = nlohmann::json::array();
      for (const cdouble& z : gate.values) values.push_back(complex_to_json(z));
      g["values"] = std::move(values);
    }
    gates.push_back(std::move(g));
  }
  nlohmann::json j;
  j["num_qubits"] = circuit.num_qubits();
  j["gate_count"] = circuit.gates().size();
  j["gates"] = std::move(gates);
  return j;
}

nlohmann::json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

namespace {

// Missing keys and wrong types both surface as invalid_argument with the
// key named, so CLI validation errors stay readable.
template <typename T>
T require(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) {
    throw std::invalid_argument(std::string("missing key '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("key '") + key +
                                "' has the wrong type");
  }
}

template <typename T>
T optional_or(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return require<T>(j, key);
}

// An activation entry is a known name or a truth-table path; paths resolve
// relative to the config file so configs stay relocatable.
BooleanTable resolve_activation(const std::string& entry,
                                const std::filesystem::path& base_dir,
                                NeuronType type, int m,
                                const FixedPointFormat& reg_fmt,
                                FixedPointFormat* out_fmt) {
  try {
    ActivationKind kind = parse_activation(entry);
    *out_fmt = reg_fmt;
    if (type == NeuronType::Basis) {
      return activation_table(ActivationSpec{kind, reg_fmt, reg_fmt});
    }
    return compose_activation_for_amplitude(
        [kind](double t) { return eval_activation(kind, t); }, m, reg_fmt);
  } catch (const std::invalid_argument&) {
    std::filesystem::path table_path(entry);
    if (table_path.is_relative()) table_path = base_dir / table_path;
    BooleanTable table = load_truth_table_file(table_path);
    if (table.n != m) {
      throw std::invalid_argument(
          "activation table input width must equal the register width m");
    }
    *out_fmt = FixedPointFormat{0, table.m, 0};
    return table;
  }
}

}  // namespace

NeuronConfig load_neuron_config(const std::filesystem::path& path) {
  nlohmann::json j = load_json_file(path);
  NeuronConfig cfg;
  std::string type = require<std::string>(j, "type");
  if (type != "basis" && type != "amplitude") {
    throw std::invalid_argument("type must be basis or amplitude");
  }
  cfg.type = type == "basis" ? NeuronType::Basis : NeuronType::Amplitude;
  int m = require<int>(j, "m");
  int fb = optional_or<int>(j, "fb", 0);
  auto weights = require<std::vector<double>>(j, "weights");
  std::string activation = require<std::string>(j, "activation");
  if (m < 1 || m > 12) {
    throw std::invalid_argument("register width m must be in [1, 12]");
  }
  if (fb < 0 || fb >= m) {
    throw std::invalid_argument("fraction bits must be in [0, m)");
  }
  FixedPointFormat reg_fmt{1, m - 1 - fb, fb};
  if (cfg.type == NeuronType::Basis) {
    cfg.basis.n = static_cast<int>(weights.size());
    cfg.basis.p = require<int>(j, "p");
    cfg.basis.sample_int_bits =
        optional_or<int>(j, "sample_int_bits", cfg.basis.p == 0 ? 1 : 0);
    cfg.basis.m = m;
    cfg.basis.fb = fb;
    cfg.basis.weights = std::move(weights);
    cfg.basis.activation = resolve_activation(
        activation, path.parent_path(), cfg.type, m, reg_fmt, &cfg.out_fmt);
    cfg.basis.validate();
  } else {
    cfg.amplitude.n = static_cast<int>(weights.size());
    cfg.amplitude.m = m;
    cfg.amplitude.weights = std::move(weights);
    cfg.amplitude.activation = resolve_activation(
        activation, path.parent_path(), cfg.type, m, reg_fmt, &cfg.out_fmt);
    cfg.amplitude.validate();
  }
  return cfg;
}

NoiseModel load_noise_model(const std::filesystem::path& path) {
  nlohmann::json j = load_json_file(path);
  NoiseModel model;
  model.p1 = require<double>(j, "p1");
  model.p2 = require<double>(j, "p2");
  model.r01 = require<double>(j, "r01");
  model.r10 = require<double>(j, "r10");
  model.validate();
  return model;
}

nlohmann::json neuron_output_to_json(const NeuronOutput& out,
                                     const FixedPointFormat& reg_fmt,
                                     const FixedPointFormat& out_fmt) {
  nlohmann::json distribution = nlohmann::json::object();
  for (const auto& [code, prob] : out.distribution) {
    distribution[bitstring(code, reg_fmt.total_bits())] = prob;
  }
  nlohmann::json j;
  j["register_value"] = out.register_value;
  j["register_bits"] = bitstring(out.register_value, reg_fmt.total_bits());
  j["pre_activation"] = out.decoded_pre_activation;
  j["activation_code"] = out.activation_code;
  j["activation_value"] = decode(out.activation_code, out_fmt);
  j["boundary"] = out.boundary;
  j["distribution"] = std::move(distribution);
  return j;
}

nlohmann::json resource_report_to_json(const ResourceReport& report) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [kind, count] : report.gate_counts) {
    counts[std::string(kind_name(kind))] = count;
  }
  nlohmann::json j;
  j["qubit_count"] = report.qubit_count;
  j["gate_counts"] = std::move(counts);
  j["total_gates"] = report.total_gates();
  j["multi_controlled_rz_count"] = report.multi_controlled_rz_count;
  j["elementary_estimate"] = report.elementary_estimate;
  j["decomposition"] =
      report.rule == DecompositionRule::NoAncilla ? "no_ancilla" : "one_ancilla";
  return j;
}

nlohmann::json qfnn_to_json(const QFNNConfig& net) {
  nlohmann::json j;
  j["layer_sizes"] = net.layer_sizes;
  j["weights"] = net.weights;
  j["m"] = net.m;
  j["fb"] = net.fb;
  j["activation"] = std::string(activation_name(net.activation));
  return j;
}

QFNNConfig qfnn_from_json(const nlohmann::json& j) {
  QFNNConfig net;
  net.layer_sizes = require<std::vector<int>>(j, "layer_sizes");
  net.weights = require<std::vector<std::vector<double>>>(j, "weights");
  net.m = require<int>(j, "m");
  net.fb = require<int>(j, "fb");
  net.activation = parse_activation(require<std::string>(j, "activation"));
  net.validate();
  return net;
}

void write_histogram_csv(std::ostream& os, const MeasurementHistogram& hist) {
  os << "bitstring,count\n";
  for (const auto& [bits, count] : hist.counts) {
    os << bits << ',' << count << '\n';
  }
}

void write_probability_csv(
    std::ostream& os, std::span<const std::pair<std::string, double>> rows) {
  os << "bitstring,probability\n";
  for (const auto& [bits, prob] : rows) {
    os << bits << ',' << format_double(prob) << '\n';
  }
}

void write_activation_csv(std::ostream& os, std::span<const CurvePoint> curve) {
  os << "input,exact,quantized\n";
  for (const CurvePoint& point : curve) {
    os << format_double(point.input) << ',' << format_double(point.exact)
       << ',' << format_double(point.quantized) << '\n';
  }
}

void write_loss_csv(std::ostream& os, std::span<const double> curve) {
  os << "epoch,loss\n";
  for (std::size_t epoch = 0; epoch < curve.size(); ++epoch) {
    os << epoch << ',' << format_double(curve[epoch]) << '\n';
  }
}

std::string iso_timestamp_utc() {
  std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

nlohmann::json manifest_to_json(const RunManifest& manifest) {
  nlohmann::json j;
  j["command"] = manifest.command;
  j["parameters"] = manifest.parameters;
  j["seed"] = manifest.seed;
  j["outputs"] = manifest.outputs;
  j["tool_version"] = manifest.tool_version;
  j["timestamp"] = manifest.timestamp;
  return j;
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  RunManifest manifest;
  manifest.command = require<std::string>(j, "command");
  if (!j.contains("parameters") || !j.at("parameters").is_object()) {
    throw std::invalid_argument("manifest parameters must be an object");
  }
  manifest.parameters = j.at("parameters");
  manifest.seed = require<std::uint64_t>(j, "seed");
  manifest.outputs = require<std::vector<std::string>>(j, "outputs");
  manifest.tool_version = require<std::string>(j, "tool_version");
  manifest.timestamp = require<std::string>(j, "timestamp");
  return manifest;
}

void save_manifest(const std::filesystem::path& path,
                   const RunManifest& manifest) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << manifest_to_json(manifest).dump(2) << '\n';
}

RunManifest load_manifest(const std::filesystem::path& path) {
  return manifest_from_json(load_json_file(path));
}

}  // namespace qneuron
