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

#include <cstdint>
#include <functional>
#include <iosfwd>

#include "qneuron/circuit.hpp"
#include "qneuron/fixedpoint.hpp"

namespace qneuron {

/// Truth table of f: {0,1}^n -> {0,1}^m, entry order = ascending input code.
struct BooleanTable {
  int n = 0;
  int m = 0;
  std::vector<std::uint32_t> table;

  /// The single-bit constant-zero table, so configs embedding a table can
  /// default-construct before being filled in.
  BooleanTable() : BooleanTable(1, 1, {0, 0}) {}
  BooleanTable(int n, int m, std::vector<std::uint32_t> table);

  std::uint32_t operator()(std::uint32_t x) const {
    return table[static_cast<std::size_t>(x)];
  }
};

/// The oracle flavours a Boolean function can be packaged as: the reversible
/// XOR form, the two +-1 phase forms (single output bit), and the fractional
/// phase form whose m-bit value rides on e^{2*pi*i*f(x)/2^m}.
enum class OracleKind { Standard, Deutsch, Grover, GeneralPhase, MinimalPhase };

/// Reference oracle: permutes basis states |x>|y> -> |x>|y XOR f(x)> directly
/// on the amplitudes. Every circuit construction is tested against this.
void apply_standard_oracle(StateVector& state, const BooleanTable& f,
                           std::span<const int> input_qubits,
                           std::span<const int> output_qubits);

/// Diagonal phase-oracle matrix of dimension 2^n. Deutsch (n = m = 1) and
/// Grover (m = 1) imprint e^{pi*i*f(x)}; GeneralPhase imprints
/// e^{2*pi*i*f(x)/2^m}. Other kinds are rejected.
std::vector<cdouble> to_minimal_phase(const BooleanTable& f, OracleKind kind);

/// Function-assignment construction: for each input x and each set bit i of
/// f(x), a multi-controlled X on output qubit i with the full input pattern
/// as controls (0-controls via X-conjugation). Qubits [0, n) hold x,
/// [n, n+m) the output register. Requires n + m <= 20.
Circuit build_assignment_circuit(const BooleanTable& f);

/// Phase-estimation construction: Hadamards on the output register,
/// controlled powers of the GeneralPhase diagonal, then the inverse QFT on
/// the register. Same qubit layout and size cap as the assignment circuit;
/// acts identically on every basis input (integer phases make the
/// estimation exact).
Circuit build_phase_qft_circuit(const BooleanTable& f);

/// Samples g over every representable input of in_fmt: table[v] =
/// quantize(g(decode(v, in_fmt)), out_fmt), with out-of-range outputs
/// saturating. The result is the truth table a neuron's activation oracle
/// realizes.
BooleanTable tabulate_activation(const std::function<double(double)>& g,
                                 const FixedPointFormat& in_fmt,
                                 const FixedPointFormat& out_fmt,
                                 Rounding rounding = Rounding::NearestEven);

/// Plain-text truth table: first line "n m", then 2^n lines of m-bit output
/// strings in ascending input order.
BooleanTable load_truth_table(std::istream& in);
BooleanTable load_truth_table_file(const std::string& path);
void save_truth_table(std::ostream& out, const BooleanTable& f);

}  // namespace qneuron
