#include "parind/dihecke.hpp"

#include <benchmark/benchmark.h>

using namespace parind;
using namespace parind::dihecke;

static void BM_LaurentPower(benchmark::State& state) {
  QScalar gamma = QScalar::sqrt_q(3);
  long k = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(laurent_embed(gamma, -k));
  }
}
BENCHMARK(BM_LaurentPower)->Arg(3)->Arg(6)->Arg(10);

static void BM_GammaSetOracle(benchmark::State& state) {
  QScalar gamma = QScalar::sqrt_q(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_set_oracle(gamma, 7));
  }
}
BENCHMARK(BM_GammaSetOracle);

static void BM_InducedModuleFloat(benchmark::State& state) {
  std::complex<double> gamma = std::sqrt(3.0);
  double nu = 1.0;
  for (auto _ : state) {
    nu += 0.001;
    benchmark::DoNotOptimize(induced_module<std::complex<double>>({nu, 0.0}, gamma));
  }
}
BENCHMARK(BM_InducedModuleFloat);
