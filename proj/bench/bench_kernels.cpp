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

// Times the serial reference kernels against the OpenMP path on the sweeps
// the simulator actually spends its cycles in: single-qubit dense updates,
// controlled diagonals, a wide dense block, marginals, and the norm.

#include <omp.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qneuron/kernels.hpp"

namespace qn = qneuron;
namespace qk = qneuron::kernels;
using qneuron::cdouble;

namespace {

std::vector<cdouble> random_state(int num_qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cdouble> amps(std::size_t{1} << num_qubits);
  double norm2 = 0.0;
  for (cdouble& a : amps) {
    a = {gauss(rng), gauss(rng)};
    norm2 += std::norm(a);
  }
  double inv = 1.0 / std::sqrt(norm2);
  for (cdouble& a : amps) a *= inv;
  return amps;
}

// Repeats `body` until at least ~50 ms elapsed and reports seconds per call.
double time_per_call(const std::function<void()>& body, int min_reps) {
  body();  // warm-up, also faults the pages in
  int reps = 0;
  double start = omp_get_wtime();
  double elapsed = 0.0;
  while (reps < min_reps || elapsed < 0.05) {
    body();
    ++reps;
    elapsed = omp_get_wtime() - start;
  }
  return elapsed / reps;
}

struct Row {
  std::string name;
  double serial_s = 0.0;
  double parallel_s = 0.0;
};

void print_row(int q, const Row& row) {
  std::printf("%-24s %2d  %10.3f  %10.3f  %6.2fx\n", row.name.c_str(), q,
              row.serial_s * 1e3, row.parallel_s * 1e3,
              row.serial_s / row.parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP kernel timings"};
  std::vector<int> sizes = {16, 20, 22};
  int min_reps = 3;
  app.add_option("--qubits", sizes, "Register sizes to sweep");
  app.add_option("--min-reps", min_reps, "Repetitions per measurement");
  CLI11_PARSE(app, argc, argv);

  const cdouble inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const std::vector<cdouble> h2 = {inv_sqrt2, inv_sqrt2, inv_sqrt2,
                                   -inv_sqrt2};
  const std::vector<cdouble> phase2 = {1.0, std::polar(1.0, 0.7)};
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::printf("threads: %d (OMP_NUM_THREADS governs the parallel path)\n",
              omp_get_max_threads());
  std::printf("%-24s  q  serial ms  parallel ms  speedup\n", "kernel");

  for (int q : sizes) {
    std::vector<cdouble> amps = random_state(q, 11);

    // One H on every qubit, the L1-unfriendly strided sweep.
    auto bench_unitary = [&](qn::Execution exec) {
      for (int t = 0; t < q; ++t) {
        std::vector<int> targets = {t};
        if (exec == qn::Execution::Serial) {
          qk::apply_controlled_unitary_serial(amps, q, h2, targets, {});
        } else {
          qk::apply_controlled_unitary_parallel(amps, q, h2, targets, {});
        }
      }
    };

    // Controlled phases along a chain, the inner-product comb shape.
    auto bench_diagonal = [&](qn::Execution exec) {
      for (int t = 1; t < q; ++t) {
        std::vector<int> targets = {t};
        std::vector<int> controls = {t - 1};
        if (exec == qn::Execution::Serial) {
          qk::apply_controlled_diagonal_serial(amps, q, phase2, targets,
                                               controls);
        } else {
          qk::apply_controlled_diagonal_parallel(amps, q, phase2, targets,
                                                 controls);
        }
      }
    };

    // A dense two-qubit block across distant qubits.
    std::vector<cdouble> u4 = {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
    auto bench_block = [&](qn::Execution exec) {
      std::vector<int> targets = {0, q / 2};
      if (exec == qn::Execution::Serial) {
        qk::apply_controlled_unitary_serial(amps, q, u4, targets, {});
      } else {
        qk::apply_controlled_unitary_parallel(amps, q, u4, targets, {});
      }
    };

    std::vector<int> marginal_qubits = {0, 1, 2, 3, 4, 5, 6, 7};
    auto bench_marginal = [&](qn::Execution exec) {
      volatile double sink;
      if (exec == qn::Execution::Serial) {
        sink = qk::marginal_probabilities_serial(amps, q, marginal_qubits)[0];
      } else {
        sink =
            qk::marginal_probabilities_parallel(amps, q, marginal_qubits)[0];
      }
      (void)sink;
    };

    auto bench_norm = [&](qn::Execution exec) {
      volatile double sink;
      if (exec == qn::Execution::Serial) {
        sink = qk::norm_squared_serial(amps);
      } else {
        sink = qk::norm_squared_parallel(amps);
      }
      (void)sink;
    };

    struct Case {
      const char* name;
      std::function<void(qn::Execution)> body;
    };
    const Case cases[] = {
        {"h sweep (all qubits)", bench_unitary},
        {"crz chain", bench_diagonal},
        {"two-qubit block", bench_block},
        {"8-qubit marginal", bench_marginal},
        {"norm", bench_norm},
    };
    for (const Case& c : cases) {
      Row row;
      row.name = c.name;
      row.serial_s =
          time_per_call([&] { c.body(qn::Execution::Serial); }, min_reps);
      row.parallel_s =
          time_per_call([&] { c.body(qn::Execution::Parallel); }, min_reps);
      print_row(q, row);
    }
  }
  return 0;
}
