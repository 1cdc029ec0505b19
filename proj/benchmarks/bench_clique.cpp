#include <benchmark/benchmark.h>
static void BM_placeholder(benchmark::State& s){for(auto _ : s){benchmark::DoNotOptimize(_);}}
BENCHMARK(BM_placeholder);
BENCHMARK_MAIN();
