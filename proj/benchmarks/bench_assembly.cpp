#include <benchmark/benchmark.h>

#include <smoothpatch/bspline.hpp>

namespace {

void bm_mixed_1d(benchmark::State& state) {
    for (auto _ : state) {
        auto b = smoothpatch::build_mixed_1d(2, 3, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(b.mu);
    }
}
BENCHMARK(bm_mixed_1d)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
