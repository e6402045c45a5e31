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

#include "qneuron/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qneuron {

namespace {

void check_table_shape(const BooleanTable& f) {
  if (f.n < 1 || f.m < 1) {
    throw std::invalid_argument("truth table needs n >= 1 and m >= 1");
  }
  if (f.n > 24 || f.m > 24) {
    throw std::invalid_argument("truth table register too wide");
  }
  if (f.table.size() != std::size_t{1} << f.n) {
    throw std::invalid_argument("truth table must list 2^n entries");
  }
  for (std::uint32_t v : f.table) {
    if (v >= (std::uint32_t{1} << f.m)) {
      throw std::invalid_argument("truth table entry exceeds m output bits");
    }
  }
}

}  // namespace

BooleanTable::BooleanTable(int n_in, int m_in, std::vector<std::uint32_t> t)
    : n(n_in), m(m_in), table(std::move(t)) {
  check_table_shape(*this);
}

void apply_standard_oracle(StateVector& state, const BooleanTable& f,
                           std::span<const int> input_qubits,
                           std::span<const int> output_qubits) {
  if (static_cast<int>(input_qubits.size()) != f.n ||
      static_cast<int>(output_qubits.size()) != f.m) {
    throw std::invalid_argument("oracle register sizes do not match the table");
  }
  int q = state.num_qubits();
  auto amps = state.raw_amplitudes();
  // |x>|y> -> |x>|y ^ f(x)| pairs indices; swapping each pair once applies
  // the permutation in place.
  for (std::size_t i = 0; i < amps.size(); ++i) {
    std::uint32_t x = 0;
    for (int qb : input_qubits) x = (x << 1) | ((i >> (q - 1 - qb)) & 1);
    std::uint32_t fx = f(x);
    if (fx == 0) continue;
    std::size_t j = i;
    for (int b = 0; b < f.m; ++b) {
      if ((fx >> (f.m - 1 - b)) & 1) {
        j ^= std::size_t{1} << (q - 1 - output_qubits[b]);
      }
    }
    if (j > i) std::swap(amps[i], amps[j]);
  }
}

std::vector<cdouble> to_minimal_phase(const BooleanTable& f, OracleKind kind) {
  switch (kind) {
    case OracleKind::Deutsch:
      if (f.n != 1 || f.m != 1) {
        throw std::invalid_argument("Deutsch oracle needs n = m = 1");
      }
      break;
    case OracleKind::Grover:
      if (f.m != 1) {
        throw std::invalid_argument("Grover oracle needs a single output bit");
      }
      break;
    case OracleKind::GeneralPhase:
      break;
    default:
      throw std::invalid_argument(
          "only Deutsch, Grover and GeneralPhase have a diagonal form");
  }
  double denom = kind == OracleKind::GeneralPhase
                     ? std::ldexp(1.0, f.m)  // phase fraction f(x)/2^m
                     : 2.0;                  // e^{pi i f(x)} = +-1
  std::vector<cdouble> diag(f.table.size());
  for (std::size_t x = 0; x < f.table.size(); ++x) {
    diag[x] = std::polar(
        1.0, 2.0 * std::numbers::pi * static_cast<double>(f.table[x]) / denom);
  }
  return diag;
}

Circuit build_assignment_circuit(const BooleanTable& f) {
  if (f.n + f.m > 20) {
    throw std::invalid_argument("assignment circuit capped at 20 qubits");
  }
  Circuit circuit(f.n + f.m);
  std::vector<int> controls(static_cast<std::size_t>(f.n));
  for (int i = 0; i < f.n; ++i) controls[static_cast<std::size_t>(i)] = i;
  for (std::uint32_t x = 0; x < f.table.size(); ++x) {
    std::uint32_t fx = f(x);
    if (fx == 0) continue;
    auto conjugate_zeros = [&] {
      for (int b = 0; b < f.n; ++b) {
        if (!((x >> (f.n - 1 - b)) & 1)) circuit.append(Gate::x(b));
      }
    };
    conjugate_zeros();
    for (int b = 0; b < f.m; ++b) {
      if ((fx >> (f.m - 1 - b)) & 1) {
        circuit.append(Gate::mcx(controls, f.n + b));
      }
    }
    conjugate_zeros();
  }
  return circuit;
}

Circuit build_phase_qft_circuit(const BooleanTable& f) {
  if (f.n + f.m > 20) {
    throw std::invalid_argument("phase construction capped at 20 qubits");
  }
  Circuit circuit(f.n + f.m);
  for (int j = 0; j < f.m; ++j) circuit.append(Gate::h(f.n + j));
  std::vector<int> inputs(static_cast<std::size_t>(f.n));
  for (int i = 0; i < f.n; ++i) inputs[static_cast<std::size_t>(i)] = i;
  Gate oracle =
      Gate::diagonal(to_minimal_phase(f, OracleKind::GeneralPhase), inputs);
  // Register qubit n+j is the weight-2^(m-1-j) bit of the readout, so it
  // controls the 2^(m-1-j)-th oracle power.
  for (int j = 0; j < f.m; ++j) {
    for (Gate& g : controlled_power(oracle, f.m - 1 - j, f.n + j)) {
      circuit.append(std::move(g));
    }
  }
  Circuit iqft = inverse_qft_circuit(f.m);
  std::vector<int> map(static_cast<std::size_t>(f.m));
  for (int j = 0; j < f.m; ++j) map[static_cast<std::size_t>(j)] = f.n + j;
  circuit.append(iqft, map);
  return circuit;
}

BooleanTable tabulate_activation(const std::function<double(double)>& g,
                                 const FixedPointFormat& in_fmt,
                                 const FixedPointFormat& out_fmt,
                                 Rounding rounding) {
  in_fmt.validate();
  out_fmt.validate();
  if (in_fmt.total_bits() > 24 || out_fmt.total_bits() > 24) {
    throw std::invalid_argument("activation table register too wide");
  }
  std::size_t rows = std::size_t{1} << in_fmt.total_bits();
  std::vector<std::uint32_t> table(rows);
  for (std::size_t v = 0; v < rows; ++v) {
    // Out-of-range activation values saturate instead of raising the
    // overflow error that a bare quantize would.
    double out = std::clamp(g(decode(v, in_fmt)), out_fmt.min_value(),
                            out_fmt.max_value());
    table[v] = static_cast<std::uint32_t>(quantize(out, out_fmt, rounding));
  }
  return BooleanTable(in_fmt.total_bits(), out_fmt.total_bits(),
                      std::move(table));
}

BooleanTable load_truth_table(std::istream& in) {
  int n = 0;
  int m = 0;
  if (!(in >> n >> m)) {
    throw std::invalid_argument("truth table header must be 'n m'");
  }
  if (n < 1 || n > 24 || m < 1 || m > 24) {
    throw std::invalid_argument("truth table header out of range");
  }
  std::size_t rows = std::size_t{1} << n;
  std::vector<std::uint32_t> table(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string row;
    if (!(in >> row)) {
      throw std::invalid_argument("truth table ends before 2^n rows");
    }
    if (static_cast<int>(row.size()) != m) {
      throw std::invalid_argument("truth table row must have m bits");
    }
    std::uint32_t value = 0;
    for (char c : row) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("truth table rows are binary strings");
      }
      value = (value << 1) | static_cast<std::uint32_t>(c == '1');
    }
    table[r] = value;
  }
  return BooleanTable(n, m, std::move(table));
}

BooleanTable load_truth_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open truth table file: " + path);
  }
  return load_truth_table(in);
}

void save_truth_table(std::ostream& out, const BooleanTable& f) {
  out << f.n << ' ' << f.m << '\n';
  for (std::uint32_t value : f.table) {
    out << bitstring(value, f.m) << '\n';
  }
}

}  // namespace qneuron
