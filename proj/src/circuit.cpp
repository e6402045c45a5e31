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

#include "qneuron/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qneuron/linalg.hpp"

namespace qneuron {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

const std::vector<cdouble> kXMatrix{0.0, 1.0, 1.0, 0.0};
const std::vector<cdouble> kHMatrix{kInvSqrt2, kInvSqrt2, kInvSqrt2,
                                    -kInvSqrt2};

cdouble phase_factor(double alpha) {
  return std::polar(1.0, 2.0 * std::numbers::pi * alpha);
}

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

void check_distinct(const std::vector<int>& targets,
                    const std::vector<int>& controls) {
  std::vector<int> all(targets);
  all.insert(all.end(), controls.begin(), controls.end());
  for (int q : all) require(q >= 0, "gate qubit indices must be non-negative");
  std::sort(all.begin(), all.end());
  require(std::adjacent_find(all.begin(), all.end()) == all.end(),
          "gate operands repeat a qubit");
}

}  // namespace

std::string_view kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Rz: return "Rz";
    case GateKind::CRz: return "CRz";
    case GateKind::Mcx: return "MCX";
    case GateKind::DiagonalUnitary: return "DiagonalUnitary";
    case GateKind::GenericUnitary: return "GenericUnitary";
  }
  return "?";
}

Gate Gate::x(int target) { return Gate{GateKind::X, {target}, {}, 0.0, {}}; }

Gate Gate::h(int target) { return Gate{GateKind::H, {target}, {}, 0.0, {}}; }

Gate Gate::s(int target) { return Gate{GateKind::S, {target}, {}, 0.0, {}}; }

Gate Gate::rz(double phase, int target) {
  require(std::isfinite(phase), "rotation phase must be finite");
  return Gate{GateKind::Rz, {target}, {}, phase, {}};
}

Gate Gate::crz(double phase, int control, int target) {
  require(std::isfinite(phase), "rotation phase must be finite");
  Gate g{GateKind::CRz, {target}, {control}, phase, {}};
  check_distinct(g.targets, g.controls);
  return g;
}

Gate Gate::mcx(std::vector<int> controls, int target) {
  require(!controls.empty(), "MCX needs at least one control");
  Gate g{GateKind::Mcx, {target}, std::move(controls), 0.0, {}};
  check_distinct(g.targets, g.controls);
  return g;
}

Gate Gate::diagonal(std::vector<cdouble> entries, std::vector<int> targets,
                    std::vector<int> controls) {
  require(!targets.empty(), "diagonal gate needs at least one target");
  require(entries.size() == std::size_t{1} << targets.size(),
          "diagonal size does not match target count");
  for (const cdouble& d : entries) {
    require(std::abs(std::abs(d) - 1.0) <= kStateTolerance,
            "diagonal entries must have unit modulus");
  }
  Gate g{GateKind::DiagonalUnitary, std::move(targets), std::move(controls),
         0.0, std::move(entries)};
  check_distinct(g.targets, g.controls);
  return g;
}

Gate Gate::unitary(std::vector<cdouble> matrix, std::vector<int> targets,
                   std::vector<int> controls) {
  require(!targets.empty(), "unitary gate needs at least one target");
  std::size_t dim = std::size_t{1} << targets.size();
  require(linalg::is_unitary(matrix, dim, kStateTolerance),
          "matrix is not unitary within tolerance");
  Gate g{GateKind::GenericUnitary, std::move(targets), std::move(controls),
         0.0, std::move(matrix)};
  check_distinct(g.targets, g.controls);
  return g;
}

void apply(const Gate& gate, StateVector& state) {
  switch (gate.kind) {
    case GateKind::X:
      state.apply_unitary(kXMatrix, gate.targets, gate.controls);
      return;
    case GateKind::H:
      state.apply_unitary(kHMatrix, gate.targets, gate.controls);
      return;
    case GateKind::S: {
      const cdouble diag[2] = {1.0, {0.0, 1.0}};
      state.apply_diagonal({diag, 2}, gate.targets, gate.controls);
      return;
    }
    case GateKind::Rz:
    case GateKind::CRz: {
      const cdouble diag[2] = {1.0, phase_factor(gate.phase)};
      state.apply_diagonal({diag, 2}, gate.targets, gate.controls);
      return;
    }
    case GateKind::Mcx:
      state.apply_unitary(kXMatrix, gate.targets, gate.controls);
      return;
    case GateKind::DiagonalUnitary:
      state.apply_diagonal(gate.values, gate.targets, gate.controls);
      return;
    case GateKind::GenericUnitary:
      state.apply_unitary(gate.values, gate.targets, gate.controls);
      return;
  }
  throw std::invalid_argument("unknown gate kind");
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  require(num_qubits >= 1, "circuit needs at least one qubit");
}

void Circuit::append(Gate gate) {
  for (int q : gate.targets) {
    require(q >= 0 && q < num_qubits_, "gate target outside circuit");
  }
  for (int q : gate.controls) {
    require(q >= 0 && q < num_qubits_, "gate control outside circuit");
  }
  check_distinct(gate.targets, gate.controls);
  gates_.push_back(std::move(gate));
}

void Circuit::append(const Circuit& sub, std::span<const int> qubit_map) {
  require(static_cast<int>(qubit_map.size()) == sub.num_qubits(),
          "qubit map must cover the spliced circuit");
  for (const Gate& g : sub.gates()) {
    Gate mapped = g;
    for (int& q : mapped.targets) q = qubit_map[static_cast<std::size_t>(q)];
    for (int& q : mapped.controls) q = qubit_map[static_cast<std::size_t>(q)];
    append(std::move(mapped));
  }
}

void Circuit::apply_to(StateVector& state) const {
  require(state.num_qubits() == num_qubits_,
          "state size does not match circuit");
  for (const Gate& g : gates_) apply(g, state);
}

Circuit inverse_qft_circuit(int m) {
  if (m < 1 || m > 12) {
    throw std::invalid_argument("inverse QFT size must be in [1, 12]");
  }
  Circuit qft(m);
  // Peeling qubits top-down: after its CRz ladder, qubit j holds the
  // (m-1-j)-th output bit, so a bit-reversal pass restores ordering.
  for (int j = 0; j < m; ++j) {
    for (int l = 0; l < j; ++l) {
      qft.append(Gate::crz(-std::ldexp(1.0, -(j - l + 1)), l, j));
    }
    qft.append(Gate::h(j));
  }
  for (int j = 0; j < m / 2; ++j) {
    int k = m - 1 - j;
    qft.append(Gate::mcx({j}, k));
    qft.append(Gate::mcx({k}, j));
    qft.append(Gate::mcx({j}, k));
  }
  return qft;
}

std::vector<Gate> controlled_power(const Gate& u, int s, int control) {
  require(s >= 0, "power exponent must be >= 0");
  require(std::find(u.targets.begin(), u.targets.end(), control) ==
                  u.targets.end() &&
              std::find(u.controls.begin(), u.controls.end(), control) ==
                  u.controls.end(),
          "control overlaps the powered gate's operands");
  double scale = std::ldexp(1.0, s);
  switch (u.kind) {
    case GateKind::Rz:
      return {Gate::crz(u.phase * scale, control, u.targets[0])};
    case GateKind::S:
      return {Gate::crz(0.25 * scale, control, u.targets[0])};
    case GateKind::CRz: {
      std::vector<cdouble> entries{1.0, std::polar(1.0, 2.0 * std::numbers::pi *
                                                            u.phase * scale)};
      return {Gate::diagonal(std::move(entries), u.targets,
                             {u.controls[0], control})};
    }
    case GateKind::X:
    case GateKind::Mcx: {
      if (s > 0) return {};
      std::vector<int> controls = u.controls;
      controls.push_back(control);
      return {Gate::mcx(std::move(controls), u.targets[0])};
    }
    case GateKind::H: {
      if (s > 0) return {};
      return {Gate::unitary(kHMatrix, u.targets, {control})};
    }
    case GateKind::DiagonalUnitary: {
      std::vector<cdouble> entries = u.values;
      for (int i = 0; i < s; ++i) {
        for (cdouble& d : entries) d *= d;
      }
      std::vector<int> controls = u.controls;
      controls.push_back(control);
      return {Gate::diagonal(std::move(entries), u.targets,
                             std::move(controls))};
    }
    case GateKind::GenericUnitary: {
      std::size_t dim = std::size_t{1} << u.targets.size();
      std::vector<int> controls = u.controls;
      controls.push_back(control);
      return {Gate::unitary(linalg::mat_power_pow2(u.values, dim, s),
                            u.targets, std::move(controls))};
    }
  }
  throw std::invalid_argument("unknown gate kind");
}

long long ResourceReport::total_gates() const {
  long long total = 0;
  for (const auto& [kind, count] : gate_counts) total += count;
  return total;
}

ResourceReport count_resources(const Circuit& circuit,
                               DecompositionRule rule) {
  ResourceReport report;
  report.qubit_count = circuit.num_qubits();
  report.rule = rule;
  auto span_cost = [rule](long long d) {
    return rule == DecompositionRule::NoAncilla ? d * d : d;
  };
  for (const Gate& g : circuit.gates()) {
    ++report.gate_counts[g.kind];
    long long d = g.span_width();
    switch (g.kind) {
      case GateKind::X:
      case GateKind::H:
      case GateKind::S:
      case GateKind::Rz:
        report.elementary_estimate += 1;
        break;
      case GateKind::CRz:
      case GateKind::Mcx:
        report.elementary_estimate += span_cost(d);
        if (g.kind == GateKind::CRz) report.multi_controlled_rz_count += 1;
        break;
      case GateKind::DiagonalUnitary: {
        long long entries = static_cast<long long>(g.values.size());
        if (d >= 2) {
          report.elementary_estimate += entries * span_cost(d);
          report.multi_controlled_rz_count += entries;
        } else {
          report.elementary_estimate += entries;
        }
        break;
      }
      case GateKind::GenericUnitary: {
        long long cost = 1;
        for (long long i = 0; i < d; ++i) cost *= 4;
        report.elementary_estimate += cost;
        break;
      }
    }
  }
  return report;
}

}  // namespace qneuron
