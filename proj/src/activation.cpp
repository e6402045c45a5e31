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

#include "qneuron/activation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qneuron {

namespace {

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

ActivationKind parse_activation(std::string_view name) {
  std::string key = lowercase(name);
  if (key == "sigmoid") return ActivationKind::Sigmoid;
  if (key == "relu") return ActivationKind::ReLU;
  if (key == "tanh") return ActivationKind::Tanh;
  if (key == "gelu") return ActivationKind::GELU;
  throw std::invalid_argument("unknown activation '" + std::string(name) +
                              "' (expected sigmoid, relu, tanh or gelu)");
}

std::string_view activation_name(ActivationKind kind) {
  switch (kind) {
    case ActivationKind::Sigmoid: return "sigmoid";
    case ActivationKind::ReLU: return "relu";
    case ActivationKind::Tanh: return "tanh";
    case ActivationKind::GELU: return "gelu";
  }
  return "?";
}

double eval_activation(ActivationKind kind, double t) {
  switch (kind) {
    case ActivationKind::Sigmoid: return 1.0 / (1.0 + std::exp(-t));
    case ActivationKind::ReLU: return t > 0.0 ? t : 0.0;
    case ActivationKind::Tanh: return std::tanh(t);
    case ActivationKind::GELU:
      return 0.5 * t * (1.0 + std::erf(t / std::numbers::sqrt2));
  }
  throw std::invalid_argument("unknown activation kind");
}

double eval_activation_derivative(ActivationKind kind, double t) {
  switch (kind) {
    case ActivationKind::Sigmoid: {
      double s = 1.0 / (1.0 + std::exp(-t));
      return s * (1.0 - s);
    }
    case ActivationKind::ReLU: return t > 0.0 ? 1.0 : 0.0;
    case ActivationKind::Tanh: {
      double th = std::tanh(t);
      return 1.0 - th * th;
    }
    case ActivationKind::GELU: {
      double cdf = 0.5 * (1.0 + std::erf(t / std::numbers::sqrt2));
      double pdf = std::exp(-0.5 * t * t) /
                   std::sqrt(2.0 * std::numbers::pi);
      return cdf + t * pdf;
    }
  }
  throw std::invalid_argument("unknown activation kind");
}

double eval_exact(const ActivationSpec& spec, double t) {
  return eval_activation(spec.name, t);
}

BooleanTable activation_table(const ActivationSpec& spec, Rounding rounding) {
  ActivationKind kind = spec.name;
  return tabulate_activation(
      [kind](double t) { return eval_activation(kind, t); }, spec.in_fmt,
      spec.out_fmt, rounding);
}

std::vector<CurvePoint> activation_curve(const ActivationSpec& spec) {
  BooleanTable table = activation_table(spec);
  std::vector<CurvePoint> rows;
  rows.reserve(table.table.size());
  for (std::size_t code = 0; code < table.table.size(); ++code) {
    CurvePoint point;
    point.input = decode(code, spec.in_fmt);
    point.exact = eval_activation(spec.name, point.input);
    point.quantized = decode(table.table[code], spec.out_fmt);
    rows.push_back(point);
  }
  std::sort(rows.begin(), rows.end(),
            [](const CurvePoint& a, const CurvePoint& b) {
              return a.input < b.input;
            });
  return rows;
}

}  // namespace qneuron
