#include <benchmark/benchmark.h>

#include "cyclotomo/cyclotomic.hpp"

using namespace cyclotomo;

namespace {

CycNum sample(unsigned long m) {
    std::vector<Rational> c(totient(m));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rational(long(i) % 7 - 3, long(i) % 4 + 1);
    return CycNum(m, std::move(c));
}

void BM_CycMul(benchmark::State& state) {
    const unsigned long m = static_cast<unsigned long>(state.range(0));
    const CycNum a = sample(m), b = sample(m) + CycNum(1);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMul)->Arg(24)->Arg(60)->Arg(120);

void BM_CycInverse(benchmark::State& state) {
    const unsigned long m = static_cast<unsigned long>(state.range(0));
    const CycNum a = sample(m) + CycNum(1);
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CycInverse)->Arg(24)->Arg(60)->Arg(120);

void BM_RealSign(benchmark::State& state) {
    const CycNum sqrt3 = CycNum::zeta(12) + CycNum::zeta(12, 11);
    const CycNum x = sqrt3 - CycNum(Rational(17320508, 10000000));
    for (auto _ : state) benchmark::DoNotOptimize(x.sign());
}
BENCHMARK(BM_RealSign);

} // namespace
