#include "parind/fingrp.hpp"

#include <benchmark/benchmark.h>

using namespace parind::fingrp;

static void BM_BuildGU2(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_group(FormSpec{FormKind::gu, 1, 3}));
  }
}
BENCHMARK(BM_BuildGU2);

static void BM_BuildSp4(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_group(FormSpec{FormKind::sp, 2, 3}));
  }
}
BENCHMARK(BM_BuildSp4)->Unit(benchmark::kMillisecond);

static void BM_SiegelSweepSp4(benchmark::State& state) {
  FiniteGroup G = build_group(FormSpec{FormKind::sp, 2, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(siegel_parabolic(G));
  }
}
BENCHMARK(BM_SiegelSweepSp4)->Unit(benchmark::kMillisecond);
