#include <benchmark/benchmark.h>

#include "aarf/toric.hpp"

using namespace aarf;

static void BM_SemigroupConstruction(benchmark::State& state) {
  for (auto _ : state) {
    NumericalSemigroup H({14, 17, 20, 21, 23, 26});
    benchmark::DoNotOptimize(H.conductor());
  }
}
BENCHMARK(BM_SemigroupConstruction);

static void BM_StructureConstants(benchmark::State& state) {
  AAPresentation pres(14, 3, 4, 21);
  for (auto _ : state) {
    StructureConstants sc = structure_constants(pres);
    benchmark::DoNotOptimize(sc.nu);
  }
}
BENCHMARK(BM_StructureConstants);

static void BM_Factorizations(benchmark::State& state) {
  NumericalSemigroup H({14, 17, 20, 21, 23, 26});
  const Int x = state.range(0);
  for (auto _ : state) {
    auto fs = enumerate_factorizations(H.generators(), x);
    benchmark::DoNotOptimize(fs.size());
  }
}
BENCHMARK(BM_Factorizations)->Arg(64)->Arg(128)->Arg(256);

static void BM_RFEnumerate(benchmark::State& state) {
  AAPresentation pres(14, 3, 4, 21);
  for (auto _ : state) {
    RFEnumerator e(pres.semigroup(), pres.columns(), 53);
    Int count = 0;
    while (auto m = e.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_RFEnumerate);

static void BM_AllRFRelations(benchmark::State& state) {
  AAPresentation pres(14, 3, 4, 21);
  for (auto _ : state) {
    auto rs = all_rf_relations(pres, 50);
    benchmark::DoNotOptimize(rs.relations.size());
  }
}
BENCHMARK(BM_AllRFRelations);

static void BM_MinimalGeneratingSet(benchmark::State& state) {
  AAPresentation pres(10, 9, 3, 35);
  for (auto _ : state) {
    auto mp = minimal_generating_set(pres.semigroup(), pres.columns());
    benchmark::DoNotOptimize(mp.count);
  }
}
BENCHMARK(BM_MinimalGeneratingSet);

static void BM_TheoremVerdict(benchmark::State& state) {
  AAPresentation pres(10, 9, 3, 35);
  for (auto _ : state) {
    auto v = is_minimally_generated_by_rf_relations(pres);
    benchmark::DoNotOptimize(v.holds);
  }
}
BENCHMARK(BM_TheoremVerdict);

BENCHMARK_MAIN();
