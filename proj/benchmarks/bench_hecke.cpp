#include "parind/finhecke.hpp"

#include <benchmark/benchmark.h>

using namespace parind;

namespace {

struct Sp4Data {
  fingrp::FiniteGroup G;
  fingrp::FiniteGroup gl;
  fingrp::ParabolicData pd;
  finrep::MatrixRep rep;
  finrep::ParabolicRep prep;
  uint32_t weyl;
};

Sp4Data* sp4() {
  static Sp4Data* d = [] {
    auto* data = new Sp4Data;
    data->G = fingrp::build_group(fingrp::FormSpec{fingrp::FormKind::sp, 2, 3});
    data->gl = fingrp::build_group(fingrp::FormSpec{fingrp::FormKind::gl, 2, 3});
    data->pd = fingrp::siegel_parabolic(data->G);
    data->rep = finrep::realize_cuspidal_gl2(
        data->gl, chars::make_char(3, 2, chars::Case::ramified, 2));
    data->prep = finrep::inflate_to_parabolic(data->rep, data->pd);
    data->weyl =
        data->pd.coset_id[data->G.index_of(fingrp::form_matrix(data->G.form, *data->G.field))];
    return data;
  }();
  return d;
}

}  // namespace

static void BM_Sp4HeckeDimension(benchmark::State& state) {
  auto* d = sp4();
  for (auto _ : state) {
    benchmark::DoNotOptimize(finhecke::hecke_dimension(d->prep));
  }
}
BENCHMARK(BM_Sp4HeckeDimension)->Unit(benchmark::kMillisecond);

static void BM_Sp4QuadraticRelation(benchmark::State& state) {
  auto* d = sp4();
  for (auto _ : state) {
    benchmark::DoNotOptimize(finhecke::quadratic_relation(d->prep, d->weyl, 3.0));
  }
}
BENCHMARK(BM_Sp4QuadraticRelation)->Unit(benchmark::kMillisecond);
