// Copyright 2026 The fockwitness Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "fockwitness/entangle.hpp"
#include "fockwitness/permanent.hpp"
#include "fockwitness/unitary.hpp"
#include "fockwitness/witness.hpp"

namespace {

using namespace fockwitness;

Eigen::MatrixXcd random_matrix(int n) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return m;
}

void bm_permanent(benchmark::State& state) {
  const Eigen::MatrixXcd a = random_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(permanent(a));
  }
}
BENCHMARK(bm_permanent)->DenseRange(4, 16, 4);

void bm_dft_lift(benchmark::State& state) {
  const int modes = static_cast<int>(state.range(0));
  const int photons = static_cast<int>(state.range(1));
  const FockBasis basis(modes, photons);
  const ModeUnitary f = ModeUnitary::dft(modes);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lift(f, basis).matrix().sum());
  }
}
BENCHMARK(bm_dft_lift)->Args({4, 2})->Args({5, 3})->Args({6, 3});

void bm_witness_pipeline(benchmark::State& state) {
  const int modes = static_cast<int>(state.range(0));
  const int photons = modes / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(phi_partition(modes, photons)).witness_value);
  }
}
BENCHMARK(bm_witness_pipeline)->DenseRange(2, 6, 1);

void bm_witness_operator_spectrum(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_witness_eigenvalue(4, 2));
  }
}
BENCHMARK(bm_witness_operator_spectrum);

}  // namespace

BENCHMARK_MAIN();
