// Serial reference vs OpenMP kernels on the enumeration workloads.

#include <benchmark/benchmark.h>

#include "locmem/localmem.hpp"
#include "locmem/matspace.hpp"

using namespace locmem;

namespace {

kernels::Execution mode(const benchmark::State& state) {
    return state.range(0) == 0 ? kernels::Execution::serial : kernels::Execution::parallel;
}

void BM_PointEnumeration(benchmark::State& state) {
    // holds, so every point is visited
    auto v = example_family(5, 4).reduced_mod(7);
    for (auto _ : state) benchmark::DoNotOptimize(ylocal_points(v, 100'000'000, mode(state)).holds);
    state.SetLabel(state.range(0) == 0 ? "serial" : "omp");
}

void BM_IdempotentSearch(benchmark::State& state) {
    auto w = perp(flat(example_family(4, 3))).reduced_mod(5);
    for (auto _ : state) benchmark::DoNotOptimize(find_rank1_idempotent_bruteforce(w, 100'000'000, mode(state)));
    state.SetLabel(state.range(0) == 0 ? "serial" : "omp");
}

void BM_AugmentedMinors(benchmark::State& state) {
    auto v = example_family(5, 4);
    PolyMatrix c = v.augmented(coordinate_vector(v.field(), 5));
    for (auto _ : state) benchmark::DoNotOptimize(minors(c, static_cast<std::size_t>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_PointEnumeration)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdempotentSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AugmentedMinors)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
