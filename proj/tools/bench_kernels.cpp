#include <benchmark/benchmark.h>

#include "swc/characters.hpp"
#include "swc/cycles.hpp"
#include "swc/resolution.hpp"

using namespace swc;

static void BM_ResolveSerial(benchmark::State& st) {
    const CyclicModule M{{T::YZ, T::YZ}, 3};
    for (auto _ : st) benchmark::DoNotOptimize(resolve_serial(M, 4, 10));
}
BENCHMARK(BM_ResolveSerial)->Unit(benchmark::kMillisecond);

static void BM_ResolveParallel(benchmark::State& st) {
    const CyclicModule M{{T::YZ, T::YZ}, 3};
    const int jobs = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(resolve(M, 4, 10, 32003, jobs));
}
BENCHMARK(BM_ResolveParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_MultAddSweep(benchmark::State& st) {
    const int f = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(mult_add_sweep(f, full_set(f), 1));
}
BENCHMARK(BM_MultAddSweep)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_MultAddSweepSerial(benchmark::State& st) {
    const int f = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(mult_add_sweep_serial(f, full_set(f)));
}
BENCHMARK(BM_MultAddSweepSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_CollisionScan(benchmark::State& st) {
    const Params P{2, 61, 3, {20, 20}};
    const auto pset = enumerate_p(2, 3);
    const int m = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(collision_scan_serial(pset, m, P));
}
BENCHMARK(BM_CollisionScan)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
