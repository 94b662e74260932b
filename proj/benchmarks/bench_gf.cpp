#include "parind/gf.hpp"

#include <benchmark/benchmark.h>

using namespace parind::gf;

static void BM_BuildField(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_field(3, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BuildField)->Arg(2)->Arg(6)->Arg(8);

static void BM_DiscreteLog(benchmark::State& state) {
  FieldDescriptor f = build_field(3, static_cast<int>(state.range(0)));
  FieldElement g = primitive_generator(f);
  FieldElement x = pow(f, g, parind::BigInt(f.order() / 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(discrete_log(f, x, g));
  }
}
BENCHMARK(BM_DiscreteLog)->Arg(4)->Arg(8);
