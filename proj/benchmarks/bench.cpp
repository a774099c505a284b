// Copyright 2026 The lattice-orbit Authors
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

#include "lattice_orbit/builtins.hpp"
#include "lattice_orbit/classify.hpp"
#include "lattice_orbit/enumerate.hpp"
#include "lattice_orbit/oracle.hpp"

namespace lattice_orbit {
namespace {

std::vector<LatticeVector> random_primitive(std::size_t count) {
  std::mt19937_64 rng(1);
  std::vector<LatticeVector> out;
  while (out.size() < count) {
    Coords c(12);
    for (Int& x : c) x = static_cast<Int>(draw_below(rng, 13)) - 6;
    LatticeVector v(builtin::lminus(), c);
    if (!v.is_zero() && is_primitive(v)) out.push_back(std::move(v));
  }
  return out;
}

void BM_Classify(benchmark::State& state) {
  const auto vs = random_primitive(1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(vs[i++ % vs.size()]));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_Classify);

void BM_VectorType(benchmark::State& state) {
  const auto vs = random_primitive(1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(vector_type(vs[i++ % vs.size()]));
}
BENCHMARK(BM_VectorType);

void BM_EnumeratePrimitive(benchmark::State& state) {
  const Int bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_primitive(builtin::u2u(), bound, 0));
}
BENCHMARK(BM_EnumeratePrimitive)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SampleWord(benchmark::State& state) {
  const auto gens = GeneratorSet::for_lattice(builtin::lminus());
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gens.sample_word(seed++, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SampleWord)->Arg(1)->Arg(8)->Arg(12);

void BM_GeneratorSet(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(GeneratorSet::for_lattice(builtin::lminus()));
}
BENCHMARK(BM_GeneratorSet)->Unit(benchmark::kMillisecond);

void BM_E8ShortVectors(benchmark::State& state) {
  const auto e8 = make_E8();
  for (auto _ : state) benchmark::DoNotOptimize(short_vectors(*e8, state.range(0)));
}
BENCHMARK(BM_E8ShortVectors)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_InvarianceSuite(benchmark::State& state) {
  oracle::InvarianceOptions opts;
  opts.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::invariance_suite(builtin::lminus(), opts));
}
BENCHMARK(BM_InvarianceSuite)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace lattice_orbit

BENCHMARK_MAIN();
