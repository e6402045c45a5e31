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

#include <string_view>
#include <vector>

#include "qneuron/fixedpoint.hpp"
#include "qneuron/oracle.hpp"

namespace qneuron {

enum class ActivationKind { Sigmoid, ReLU, Tanh, GELU };

/// Case-insensitive name lookup ("sigmoid", "relu", "tanh", "gelu").
ActivationKind parse_activation(std::string_view name);
std::string_view activation_name(ActivationKind kind);

/// The real function: Sigmoid = 1/(1+e^-t), ReLU = max(0,t), Tanh = tanh(t),
/// GELU = 0.5*t*(1+erf(t/sqrt(2))) (exact erf form, not the tanh fit).
double eval_activation(ActivationKind kind, double t);
/// First derivative of the same function (smooth surrogate for training).
double eval_activation_derivative(ActivationKind kind, double t);

/// An activation with the register formats it is quantized between.
struct ActivationSpec {
  ActivationKind name = ActivationKind::Sigmoid;
  FixedPointFormat in_fmt;
  FixedPointFormat out_fmt;
};

double eval_exact(const ActivationSpec& spec, double t);

/// Truth table the activation oracle realizes for this spec.
BooleanTable activation_table(const ActivationSpec& spec,
                              Rounding rounding = Rounding::NearestEven);

struct CurvePoint {
  double input = 0.0;
  double exact = 0.0;
  double quantized = 0.0;
};

/// One row per representable input of in_fmt, ascending by value;
/// quantized = decode(table[code], out_fmt).
std::vector<CurvePoint> activation_curve(const ActivationSpec& spec);

}  // namespace qneuron
