#include <benchmark/benchmark.h>

#include "cyclotomo/crossratio.hpp"

using namespace cyclotomo;

namespace {

void BM_ForbiddenSet(benchmark::State& state) {
    const auto tag = FieldTag::for_symmetry(static_cast<unsigned long>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(forbidden_cross_ratios(tag));
}
BENCHMARK(BM_ForbiddenSet)->Arg(12)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
