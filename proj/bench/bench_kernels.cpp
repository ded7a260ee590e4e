// Serial reference vs OpenMP kernels.
//
//   ./severi_bench --benchmark_filter=Table
//   OMP_NUM_THREADS=8 ./severi_bench

#include <benchmark/benchmark.h>

#include "severi/invariants.hpp"
#include "severi/kernels.hpp"
#include "severi/table.hpp"

using namespace severi;

namespace {

// One T(3d1 - 2) style convolution at degree d over a warm engine.
void run_split_sum(benchmark::State& state, kernels::Policy policy) {
    const int d = static_cast<int>(state.range(0));
    Engine engine;
    engine.prefill(d);
    const kernels::SplitTerm term = [&](int d1, int d2) {
        return ExactScalar(3 * d1 - 2) * ExactScalar(d1 * d2) * binom(3L * d - 1, 3L * d1 - 1) *
               engine.n0(Degree{d1}) * engine.n1(Degree{d2});
    };
    for (auto _ : state) {
        auto value = policy == kernels::Policy::Serial ? kernels::split_sum_serial(d, term)
                                                       : kernels::split_sum_parallel(d, term);
        benchmark::DoNotOptimize(value);
    }
}

void BM_SplitSumSerial(benchmark::State& state) { run_split_sum(state, kernels::Policy::Serial); }
void BM_SplitSumParallel(benchmark::State& state) { run_split_sum(state, kernels::Policy::Parallel); }

// Full table from a cold cache.
void run_table(benchmark::State& state, bool parallel) {
    const int d_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Engine engine(parallel ? kernels::Policy::Parallel : kernels::Policy::Serial);
        auto records = parallel ? build_table_parallel(engine, d_max, kAllKinds)
                                : build_table_serial(engine, d_max, kAllKinds);
        benchmark::DoNotOptimize(records);
    }
    state.counters["threads"] = kernels::max_threads();
}

void BM_TableSerial(benchmark::State& state) { run_table(state, false); }
void BM_TableParallel(benchmark::State& state) { run_table(state, true); }

}  // namespace

BENCHMARK(BM_SplitSumSerial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SplitSumParallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TableSerial)->Arg(12)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->Arg(12)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
