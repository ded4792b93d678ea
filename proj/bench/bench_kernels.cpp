// Parallel kernels against their serial references. On a single-core machine the two
// columns should match; the gap shows up with OMP_NUM_THREADS > 1.

#include <benchmark/benchmark.h>

#include "partasym/asymptotics/estimate.hpp"
#include "partasym/oracle/count_table.hpp"
#include "partasym/oracle/table_cache.hpp"

using namespace partasym;

namespace {

FamilySpec family_at(int64_t i) {
  switch (i) {
    case 0: return FamilySpec::nsp(12);
    case 1: return FamilySpec::of(Family::basic);
    case 2: return FamilySpec::of(Family::prings);
    default: return FamilySpec::of(Family::concave);
  }
}

void BM_count_table(benchmark::State& state) {
  const FamilySpec f = family_at(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::count_table(f, state.range(1)));
  state.SetLabel(f.name());
}

void BM_count_table_serial(benchmark::State& state) {
  const FamilySpec f = family_at(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::count_table_serial(f, state.range(1)));
  state.SetLabel(f.name());
}

// Oracle off so that only the Φ evaluation is timed.
asymptotics::EstimateConfig no_oracle() {
  asymptotics::EstimateConfig c;
  c.oracle = asymptotics::OracleMode::never;
  return c;
}

void BM_estimate(benchmark::State& state) {
  const FamilySpec f = family_at(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asymptotics::estimate(f, state.range(1), no_oracle()));
  state.SetLabel(f.name());
}

void BM_estimate_serial(benchmark::State& state) {
  const FamilySpec f = family_at(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asymptotics::estimate_serial(f, state.range(1), no_oracle()));
  state.SetLabel(f.name());
}

}  // namespace

BENCHMARK(BM_count_table)->Args({0, 2000})->Args({1, 2000})->Args({2, 2000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_table_serial)->Args({0, 2000})->Args({1, 2000})->Args({2, 2000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_estimate)->Args({0, 1200})->Args({1, 1000})->Args({3, 2000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_estimate_serial)->Args({0, 1200})->Args({1, 1000})->Args({3, 2000})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
