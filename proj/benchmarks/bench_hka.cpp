// Copyright 2026 The hka Authors
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

#include "hka/gf2.hpp"
#include "hka/hankel.hpp"
#include "hka/oracle.hpp"
#include "hka/pipeline.hpp"

namespace {

hka::gf2::Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  hka::gf2::Matrix m(n, hka::gf2::BitVector(n));
  for (auto& row : m) {
    for (auto& w : row.words()) w = rng();
    // clear padding bits
    for (std::size_t j = n; j < row.words().size() * 64; ++j) {
      row.words()[j >> 6] &= ~(std::uint64_t{1} << (j & 63));
    }
  }
  return m;
}

void BM_Gf2Determinant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hka::gf2::determinant(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Gf2Determinant)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

void BM_BerlekampMasseyTable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const hka::JKClassifier c(hka::PatternVector({1, 1, -1, -1, 1}));
  const auto ind = c.j_indicator(2 * n + 1);
  hka::gf2::BitVector s(2 * n + 1);
  for (std::size_t i = 0; i < s.size(); ++i) s.set(i, ind[i]);
  for (auto _ : state) benchmark::DoNotOptimize(hka::gf2::hankel_determinants(s, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BerlekampMasseyTable)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_KernelTable(benchmark::State& state) {
  const hka::JKClassifier c(hka::PatternVector({1, 1, -1, -1}));
  for (auto _ : state) benchmark::DoNotOptimize(hka::KernelTable::compute(c, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_KernelTable)->Arg(1 << 12)->Arg(1 << 15);

void BM_ReferenceSextuple(benchmark::State& state) {
  const hka::JKClassifier c(hka::PatternVector({1, 1, -1, -1}));
  for (auto _ : state) benchmark::DoNotOptimize(hka::sextuple(c, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ReferenceSextuple)->Arg(64)->Arg(256);

void BM_ExactHankel(benchmark::State& state) {
  const hka::PatternVector p({1, 1, -1, -1, 1});
  const auto f = hka::f_prefix(p, 2 * static_cast<std::size_t>(state.range(0))).terms;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hka::hankel_exact(std::span<const hka::Sign>(f), static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_ExactHankel)->Arg(16)->Arg(64)->Arg(128);

void BM_Pipeline(benchmark::State& state) {
  const hka::PatternVector p({1, 1, -1, -1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(hka::run_pipeline(p));
}
BENCHMARK(BM_Pipeline)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
