// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "motifqc/certify.h"
#include "motifqc/counting.h"
#include "motifqc/models.h"

namespace motifqc {
namespace {

Exec ExecArg(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::kSerial : Exec::kParallel;
}

const Graph& Fixture(int n, double p) {
  static const Graph* g = nullptr;
  static int cached_n = -1;
  if (cached_n != n) {
    delete g;
    g = new Graph(*Sample({Gnp{n, p}, 42}, Exec::kParallel));
    cached_n = n;
  }
  return *g;
}

void BM_CountTriangles(benchmark::State& state) {
  const Graph& g = Fixture(static_cast<int>(state.range(1)), 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(*CountCliques(g, 3, ExecArg(state)));
  }
}
BENCHMARK(BM_CountTriangles)->ArgsProduct({{0, 1}, {500, 1000}})->Unit(benchmark::kMillisecond);

void BM_CountInducedP4(benchmark::State& state) {
  const Graph& g = Fixture(static_cast<int>(state.range(1)), 0.3);
  const Motif h = Motif::Path(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(*CountLabeledInduced(g, h, ExecArg(state)));
  }
}
BENCHMARK(BM_CountInducedP4)->ArgsProduct({{0, 1}, {200, 400}})->Unit(benchmark::kMillisecond);

void BM_SampleGnp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Sample({Gnp{n, 0.3}, seed++}, ExecArg(state))->NumEdges());
  }
}
BENCHMARK(BM_SampleGnp)->ArgsProduct({{0, 1}, {1000, 4000}})->Unit(benchmark::kMillisecond);

void BM_DegCodeg(benchmark::State& state) {
  const Graph& g = Fixture(static_cast<int>(state.range(1)), 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(JumblednessDegCodeg(g, 0.3, 0.5, ExecArg(state)).passed);
  }
}
BENCHMARK(BM_DegCodeg)->ArgsProduct({{0, 1}, {1000, 2000}})->Unit(benchmark::kMillisecond);

void BM_MultisetTrials(benchmark::State& state) {
  const Graph& g = Fixture(1000, 0.3);
  const Motif h = Motif::Complete(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        SampleMultisetCounts(g, h, 100, static_cast<int>(state.range(1)), 7, true,
                             ExecArg(state)));
  }
}
BENCHMARK(BM_MultisetTrials)->ArgsProduct({{0, 1}, {200}})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace motifqc

BENCHMARK_MAIN();
