#include "phirep/analyses.hpp"
#include "phirep/sweep.hpp"
#include "phirep/zphi.hpp"

#include <benchmark/benchmark.h>

using namespace phirep;

namespace {

bool zeck_le_phi(long long n) { return zeck_encode(n).count_ones() <= phi_canonical(n).count_ones(); }

void BM_failures_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(find_failures_serial(0, st.range(0), zeck_le_phi));
}

void BM_failures_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(find_failures(0, st.range(0), zeck_le_phi));
}

void BM_census_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(rep_census_serial(0, st.range(0), 14, 14, filters::knott()));
}

void BM_census_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(rep_census(0, st.range(0), 14, 14, filters::knott()));
}

void BM_count_serial(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(count_where_serial(0, st.range(0), [](long long n) { return phi_digit(n, -1) == 1; }));
}

void BM_count_parallel(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(count_where(0, st.range(0), [](long long n) { return phi_digit(n, -1) == 1; }));
}

}  // namespace

BENCHMARK(BM_failures_serial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_failures_parallel)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_census_serial)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_census_parallel)->Arg(300)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_count_serial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_parallel)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
