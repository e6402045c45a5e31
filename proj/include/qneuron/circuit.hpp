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

#include <map>
#include <string>

#include "qneuron/statevec.hpp"

namespace qneuron {

enum class GateKind { X, H, S, Rz, CRz, Mcx, DiagonalUnitary, GenericUnitary };

std::string_view kind_name(GateKind kind);

/// One gate. Rotation angles are stored as phase fractions: Rz(a) is
/// diag(1, e^{2*pi*i*a}) on its target, and CRz(a) applies that phase only
/// when its control is 1 (identity on the other three basis states).
///
/// Multi-qubit values read the target list first-listed-as-MSB. Only CRz,
/// MCX, DiagonalUnitary and GenericUnitary carry controls; the single-qubit
/// kinds are always uncontrolled (their controlled forms are expressed
/// through the value-carrying kinds).
struct Gate {
  GateKind kind;
  std::vector<int> targets;
  std::vector<int> controls;
  double phase = 0.0;
  /// DiagonalUnitary: 2^k entries; GenericUnitary: row-major 2^k x 2^k.
  std::vector<cdouble> values;

  static Gate x(int target);
  static Gate h(int target);
  static Gate s(int target);
  static Gate rz(double phase, int target);
  static Gate crz(double phase, int control, int target);
  static Gate mcx(std::vector<int> controls, int target);
  static Gate diagonal(std::vector<cdouble> entries, std::vector<int> targets,
                       std::vector<int> controls = {});
  static Gate unitary(std::vector<cdouble> matrix, std::vector<int> targets,
                      std::vector<int> controls = {});

  int span_width() const {
    return static_cast<int>(targets.size() + controls.size());
  }
};

void apply(const Gate& gate, StateVector& state);

/// Ordered gate list over a fixed qubit count. Built by appending, then
/// treated as immutable: the gate list is only exposed const, so a finished
/// circuit can be shared across threads and replayed against any state.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }

  void append(Gate gate);
  /// Splices `sub` in with qubit i of `sub` renamed to qubit_map[i].
  void append(const Circuit& sub, std::span<const int> qubit_map);

  void apply_to(StateVector& state) const;

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
};

/// Inverse Fourier transform on m qubits (H + CRz ladder, then explicit
/// bit-reversal swaps built from MCX pairs). Applying it to the state whose
/// branch |t> carries phase e^{2*pi*i*t*k/2^m} yields |k> exactly, which is
/// the phase-estimation readout this library leans on. Throws for m outside
/// [1, 12].
Circuit inverse_qft_circuit(int m);

/// Controlled-u^(2^s): phase scaling for the phase-carrying kinds (exact),
/// repeated squaring for dense blocks. Even powers of the involutions
/// (X/H/MCX) vanish, so the result may be empty. The control qubit must not
/// overlap u's operands.
std::vector<Gate> controlled_power(const Gate& u, int s, int control);

/// How multi-controlled rotations are priced in elementary-gate estimates:
/// a gate spanning d qubits costs d^2 without an ancilla or d with one.
enum class DecompositionRule { NoAncilla, OneAncilla };

struct ResourceReport {
  int qubit_count = 0;
  std::map<GateKind, long long> gate_counts;
  /// Multi-controlled rotations after expanding diagonal blocks (one
  /// rotation per diagonal entry when the expansion spans >= 2 qubits).
  long long multi_controlled_rz_count = 0;
  long long elementary_estimate = 0;
  DecompositionRule rule = DecompositionRule::NoAncilla;

  long long total_gates() const;
};

/// Exact per-kind counts plus an elementary-gate estimate: X/H/S/Rz cost 1;
/// CRz/MCX spanning d qubits cost d^2 (NoAncilla) or d (OneAncilla); a
/// diagonal on k targets with c controls expands to 2^k rotations spanning
/// k+c; a generic unitary spanning d qubits is priced 4^d.
ResourceReport count_resources(
    const Circuit& circuit,
    DecompositionRule rule = DecompositionRule::NoAncilla);

}  // namespace qneuron
