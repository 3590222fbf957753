// Copyright 2026 The cayspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against the OpenMP kernels. Arg 0 is the worker
// count for the parallel variants.

#include <benchmark/benchmark.h>

#include "cayspec/cayley.hpp"
#include "cayspec/cheeger.hpp"
#include "cayspec/group.hpp"
#include "cayspec/spectral.hpp"

namespace {

cayspec::CayleyGraph graph(const std::string& group, const std::string& gens) {
  const auto spec = cayspec::GroupSpec::parse(group);
  auto g = spec.build();
  auto s = cayspec::parse_generators(g, spec, gens);
  return cayspec::CayleyGraph::build(std::move(g), cayspec::GeneratingSet(std::move(s)));
}

const cayspec::CayleyGraph& s4() {
  static const auto g = graph("symmetric:4", "default");
  return g;
}

const cayspec::CayleyGraph& c24() {
  static const auto g = graph("cyclic:24", "±1,±5");
  return g;
}

const cayspec::CayleyGraph& d6() {
  static const auto g = graph("dihedral:6", "r,r^-1,s");
  return g;
}

void BM_VertexSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(cayspec::serial::vertex_cheeger(c24().neighbor_table()));
}
BENCHMARK(BM_VertexSerial)->Unit(benchmark::kMillisecond);

void BM_VertexParallel(benchmark::State& state) {
  cayspec::SearchOptions o;
  o.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cayspec::vertex_cheeger(c24(), o));
}
BENCHMARK(BM_VertexParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EdgeSerialS4(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(cayspec::serial::edge_cheeger(s4().neighbor_table()));
}
BENCHMARK(BM_EdgeSerialS4)->Unit(benchmark::kMillisecond);

void BM_EdgeParallelS4(benchmark::State& state) {
  cayspec::SearchOptions o;
  o.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cayspec::edge_cheeger(s4(), o));
}
BENCHMARK(BM_EdgeParallelS4)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DualSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(cayspec::serial::dual_cheeger(d6().neighbor_table()));
}
BENCHMARK(BM_DualSerial)->Unit(benchmark::kMillisecond);

void BM_DualParallel(benchmark::State& state) {
  cayspec::SearchOptions o;
  o.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cayspec::dual_cheeger(d6(), o));
}
BENCHMARK(BM_DualParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SpectrumS4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cayspec::spectrum(s4()));
}
BENCHMARK(BM_SpectrumS4)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
