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
#include <complex>
#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "qneuron/activation.hpp"
#include "qneuron/oracle.hpp"
#include "qneuron/statevec.hpp"
#include "test_helpers.hpp"

namespace qn = qneuron;
using qn::cdouble;

namespace {

std::vector<int> iota_qubits(int first, int count) {
  std::vector<int> q(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) q[static_cast<std::size_t>(i)] = first + i;
  return q;
}

// |x>|0...0> on n + m qubits.
qn::StateVector basis_input(const qn::BooleanTable& f, std::uint32_t x) {
  qn::StateVector s(f.n + f.m);
  s.set_basis_state(qn::bitstring(x, f.n) + std::string(f.m, '0'));
  return s;
}

}  // namespace

TEST_CASE("truth table validation") {
  CHECK_THROWS_AS(qn::BooleanTable(1, 1, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(qn::BooleanTable(2, 1, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(qn::BooleanTable(0, 1, {0}), std::invalid_argument);
  qn::BooleanTable f(1, 2, {1, 3});
  CHECK(f(0) == 1);
  CHECK(f(1) == 3);
}

TEST_CASE("standard oracle is the XOR permutation") {
  // f = identity on one bit: acting on |1>|0> flips the output to |11>.
  qn::BooleanTable f(1, 1, {0, 1});
  qn::StateVector s = basis_input(f, 1);
  auto in = iota_qubits(0, 1);
  auto out = iota_qubits(1, 1);
  qn::apply_standard_oracle(s, f, in, out);
  CHECK(std::abs(s.amplitudes()[3] - cdouble(1.0)) < 1e-12);

  // XOR semantics on a set output register: |1>|1> -> |1>|0>.
  s.set_basis_state("11");
  qn::apply_standard_oracle(s, f, in, out);
  CHECK(std::abs(s.amplitudes()[2] - cdouble(1.0)) < 1e-12);

  // Applying it twice is the identity on a random state.
  std::mt19937_64 rng(3);
  qn::BooleanTable g = qn::testing::random_table(2, 2, rng);
  auto amps = qn::testing::random_state(4, rng);
  qn::StateVector t(4);
  t.set_amplitudes(amps);
  auto gin = iota_qubits(0, 2);
  auto gout = iota_qubits(2, 2);
  qn::apply_standard_oracle(t, g, gin, gout);
  qn::apply_standard_oracle(t, g, gin, gout);
  std::vector<cdouble> after(t.amplitudes().begin(), t.amplitudes().end());
  CHECK(qn::testing::max_abs_diff(after, amps) < 1e-12);
}

TEST_CASE("constant-zero oracle acts as the identity") {
  qn::BooleanTable f(2, 1, {0, 0, 0, 0});
  std::mt19937_64 rng(5);
  auto amps = qn::testing::random_state(3, rng);
  qn::StateVector s(3);
  s.set_amplitudes(amps);
  qn::apply_standard_oracle(s, f, iota_qubits(0, 2), iota_qubits(2, 1));
  std::vector<cdouble> after(s.amplitudes().begin(), s.amplitudes().end());
  CHECK(qn::testing::max_abs_diff(after, amps) == 0.0);

  // The assignment construction of a constant-zero table has no gates.
  CHECK(qn::build_assignment_circuit(f).gates().empty());
}

TEST_CASE("phase oracle diagonals") {
  // Grover form of AND: -1 only on the all-ones input.
  qn::BooleanTable and_f(2, 1, {0, 0, 0, 1});
  auto grover = qn::to_minimal_phase(and_f, qn::OracleKind::Grover);
  REQUIRE(grover.size() == 4);
  CHECK(std::abs(grover[0] - cdouble(1.0)) < 1e-12);
  CHECK(std::abs(grover[1] - cdouble(1.0)) < 1e-12);
  CHECK(std::abs(grover[2] - cdouble(1.0)) < 1e-12);
  CHECK(std::abs(grover[3] - cdouble(-1.0)) < 1e-12);

  // General phase of the 2-bit identity: entries e^{2 pi i x / 4}.
  qn::BooleanTable id2(2, 2, {0, 1, 2, 3});
  auto phase = qn::to_minimal_phase(id2, qn::OracleKind::GeneralPhase);
  CHECK(std::abs(phase[0] - cdouble(1.0)) < 1e-12);
  CHECK(std::abs(phase[1] - cdouble(0.0, 1.0)) < 1e-12);
  CHECK(std::abs(phase[2] - cdouble(-1.0)) < 1e-12);
  CHECK(std::abs(phase[3] - cdouble(0.0, -1.0)) < 1e-12);

  // Deutsch is the single-input single-output special case.
  qn::BooleanTable not1(1, 1, {1, 0});
  auto deutsch = qn::to_minimal_phase(not1, qn::OracleKind::Deutsch);
  CHECK(std::abs(deutsch[0] - cdouble(-1.0)) < 1e-12);
  CHECK(std::abs(deutsch[1] - cdouble(1.0)) < 1e-12);

  CHECK_THROWS_AS(qn::to_minimal_phase(and_f, qn::OracleKind::Standard),
                  std::invalid_argument);
  CHECK_THROWS_AS(qn::to_minimal_phase(id2, qn::OracleKind::Grover),
                  std::invalid_argument);
}

TEST_CASE("assignment construction of the identity is one CNOT") {
  qn::BooleanTable f(1, 1, {0, 1});
  qn::Circuit c = qn::build_assignment_circuit(f);
  REQUIRE(c.gates().size() == 1);
  CHECK(c.gates()[0].kind == qn::GateKind::Mcx);
  CHECK(c.gates()[0].controls == std::vector<int>{0});
  CHECK(c.gates()[0].targets == std::vector<int>{1});
}

TEST_CASE("phase construction computes the function on a basis input") {
  qn::BooleanTable f(2, 2, {3, 1, 2, 0});
  qn::Circuit c = qn::build_phase_qft_circuit(f);
  for (std::uint32_t x = 0; x < 4; ++x) {
    qn::StateVector s = basis_input(f, x);
    c.apply_to(s);
    auto probs = s.probabilities(iota_qubits(2, 2));
    CHECK(probs[f(x)] >= 1.0 - 1e-9);
  }
}

TEST_CASE("both constructions match the standard oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    int m = 1 + static_cast<int>(rng() % 3);
    qn::BooleanTable f = qn::testing::random_table(n, m, rng);
    qn::Circuit assign = qn::build_assignment_circuit(f);
    qn::Circuit phase = qn::build_phase_qft_circuit(f);
    auto in = iota_qubits(0, n);
    auto out = iota_qubits(n, m);

    // Random input-register superposition with the output register clear.
    auto head = qn::testing::random_state(n, rng);
    std::vector<cdouble> amps(std::size_t{1} << (n + m), 0.0);
    for (std::size_t x = 0; x < head.size(); ++x) {
      amps[x << m] = head[x];
    }
    qn::StateVector expected(n + m);
    expected.set_amplitudes(amps);
    qn::apply_standard_oracle(expected, f, in, out);

    for (const qn::Circuit* c : {&assign, &phase}) {
      qn::StateVector got(n + m);
      got.set_amplitudes(amps);
      c->apply_to(got);
      // Phases may differ gate by gate; distributions must not.
      auto pe = expected.probabilities(iota_qubits(0, n + m));
      auto pg = got.probabilities(iota_qubits(0, n + m));
      for (std::size_t i = 0; i < pe.size(); ++i) {
        CHECK(std::abs(pe[i] - pg[i]) < 1e-9);
      }
    }
  }
}

TEST_CASE("assignment circuits are involutions") {
  std::mt19937_64 rng(11);
  qn::BooleanTable f = qn::testing::random_table(2, 2, rng);
  qn::Circuit c = qn::build_assignment_circuit(f);
  auto amps = qn::testing::random_state(4, rng);
  qn::StateVector s(4);
  s.set_amplitudes(amps);
  c.apply_to(s);
  c.apply_to(s);
  std::vector<cdouble> after(s.amplitudes().begin(), s.amplitudes().end());
  CHECK(qn::testing::max_abs_diff(after, amps) < 1e-9);
}

TEST_CASE("activation tabulation") {
  auto fmt = qn::FixedPointFormat::signed_format(3, 4);
  qn::BooleanTable sig = qn::tabulate_activation(
      [](double t) { return 1.0 / (1.0 + std::exp(-t)); }, fmt, fmt);
  REQUIRE(sig.table.size() == 256);
  // Input 0 -> 0.5 -> code 8; input 1.0 (code 16) -> 0.7310... -> code 12.
  CHECK(sig(0) == 8);
  CHECK(sig(16) == 12);

  // Out-of-range outputs saturate at the format endpoints.
  qn::BooleanTable big = qn::tabulate_activation(
      [](double t) { return 100.0 * t; }, fmt, fmt);
  CHECK(big(16) == 127);
  CHECK(big(static_cast<std::uint32_t>(qn::quantize(-1.0, fmt))) == 128);
}

TEST_CASE("truth table file round-trip") {
  qn::BooleanTable f(2, 2, {0, 1, 0, 0});
  std::stringstream ss;
  qn::save_truth_table(ss, f);
  qn::BooleanTable back = qn::load_truth_table(ss);
  CHECK(back.n == f.n);
  CHECK(back.m == f.m);
  CHECK(back.table == f.table);
}

TEST_CASE("truth table parser rejects malformed input") {
  std::stringstream missing("2 2\n00\n01\n");
  CHECK_THROWS_AS(qn::load_truth_table(missing), std::invalid_argument);
  std::stringstream wrong_width("1 2\n000\n01\n");
  CHECK_THROWS_AS(qn::load_truth_table(wrong_width), std::invalid_argument);
  std::stringstream bad_digit("1 1\n0\nx\n");
  CHECK_THROWS_AS(qn::load_truth_table(bad_digit), std::invalid_argument);
  std::stringstream bad_header("0 1\n");
  CHECK_THROWS_AS(qn::load_truth_table(bad_header), std::invalid_argument);
  CHECK_THROWS_AS(qn::load_truth_table_file("/nonexistent/table.txt"),
                  std::invalid_argument);
}
