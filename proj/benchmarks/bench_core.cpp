#include <benchmark/benchmark.h>

#include "ebi/constructions.hpp"
#include "ebi/search.hpp"

namespace {

void BM_evaluate(benchmark::State& state) {
  const ebi::Labeling lab = ebi::build_two_diff_max(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ebi::evaluate(lab));
  }
}
BENCHMARK(BM_evaluate)->Arg(7)->Arg(13)->Arg(25);

void BM_build_general(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ebi::build_general(int(state.range(0)), 2, 4));
  }
}
BENCHMARK(BM_build_general)->Arg(11)->Arg(17);

void BM_oracle_plain(benchmark::State& state) {
  const ebi::Shape shape{3, int(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ebi::ebi_exhaustive(shape));
  }
}
BENCHMARK(BM_oracle_plain)->Arg(3)->Arg(5);

void BM_oracle_symmetric(benchmark::State& state) {
  ebi::SearchOptions opts;
  opts.use_symmetry = true;
  const ebi::Shape shape{4, 4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ebi::ebi_exhaustive(shape, opts));
  }
}
BENCHMARK(BM_oracle_symmetric);

void BM_canonical_key(benchmark::State& state) {
  const ebi::Labeling lab = ebi::fixture_k35('a');
  for (auto _ : state) {
    benchmark::DoNotOptimize(ebi::canonical_key(lab));
  }
}
BENCHMARK(BM_canonical_key);

void BM_local_search(benchmark::State& state) {
  ebi::SearchOptions opts;
  opts.budget = 10'000;
  opts.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ebi::local_search(ebi::Shape{3, 5}, 2, opts));
  }
}
BENCHMARK(BM_local_search);

}  // namespace

BENCHMARK_MAIN();
