// Copyright 2026 The qutrit-se Authors
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


#include <benchmark/benchmark.h>

#include <random>

#include "qutrit/bipartite.hpp"
#include "qutrit/bloch.hpp"
#include "qutrit/channel.hpp"

namespace {

using namespace qutrit;

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::normal_distribution<double> d;
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = d(g);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex(d(g), d(g));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

void BM_HermitianEigenvalues(benchmark::State& state) {
  const ComplexMatrix h = random_hermitian(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(h));
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(3)->Arg(4)->Arg(9);

void BM_PartialTranspose(benchmark::State& state) {
  const ComplexMatrix h = random_hermitian(9, 2);
  for (auto _ : state) benchmark::DoNotOptimize(partial_transpose(h, {3, 3}));
}
BENCHMARK(BM_PartialTranspose);

void BM_IsCptpQutrit(benchmark::State& state) {
  const KrausChannel ch = se_qutrit_kraus({2.0, 4.0, 0.0}, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(is_cptp(ch, 1e-12));
}
BENCHMARK(BM_IsCptpQutrit);

void BM_AffineFromKraus(benchmark::State& state) {
  const KrausChannel ch = se_qutrit_kraus({2.0, 4.0, 0.0}, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(affine_from_kraus(ch));
}
BENCHMARK(BM_AffineFromKraus);

void BM_WitnessPipeline(benchmark::State& state) {
  const SystemKind kind = state.range(0) == 3 ? SystemKind::qutrit : SystemKind::qubit;
  for (auto _ : state) {
    benchmark::DoNotOptimize(witness_pipeline(kind, 1.0, {2.0, 4.0, 2.0}, 0.5));
  }
}
BENCHMARK(BM_WitnessPipeline)->Arg(2)->Arg(3);

void BM_SeparabilityTime(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(separability_time(SystemKind::qutrit, 1.0, {2.0, 4.0, 0.0}));
  }
}
BENCHMARK(BM_SeparabilityTime);

void BM_PptSeparabilityTime(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ppt_separability_time(SystemKind::qubit, 0.4, {0.0, 0.0, 2.0}));
  }
}
BENCHMARK(BM_PptSeparabilityTime)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
