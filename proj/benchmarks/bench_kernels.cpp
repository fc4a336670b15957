#include <benchmark/benchmark.h>

#include <numbers>

#include "topocs/coherent.hpp"
#include "topocs/entanglement.hpp"
#include "topocs/theta.hpp"

namespace {

void BM_Theta3(benchmark::State& state) {
    const topocs::Complex tau(0.0, 1.0 / std::numbers::pi);
    const topocs::Complex v(0.37, 0.11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(topocs::theta3({v, tau}));
    }
}
BENCHMARK(BM_Theta3);

void BM_TorusCoherent(benchmark::State& state) {
    const topocs::TorusLabel label{{0.3, 1.1}, {-0.2, 2.4}};
    const int cutoff = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(topocs::torus_coherent(label, cutoff));
    }
}
BENCHMARK(BM_TorusCoherent)->Arg(8)->Arg(12)->Arg(16);

void BM_OverlapBruteforce(benchmark::State& state) {
    const int cutoff = static_cast<int>(state.range(0));
    const topocs::LatticeState a = topocs::torus_coherent({{0.3, 1.1}, {-0.2, 2.4}}, cutoff);
    const topocs::LatticeState b = topocs::torus_coherent({{-0.1, 0.4}, {0.2, 0.9}}, cutoff);
    for (auto _ : state) {
        benchmark::DoNotOptimize(topocs::overlap_bruteforce(a, b));
    }
}
BENCHMARK(BM_OverlapBruteforce)->Arg(8)->Arg(12)->Arg(16);

void BM_Schmidt(benchmark::State& state) {
    const int cutoff = static_cast<int>(state.range(0));
    const topocs::TwoModeState s = topocs::two_mode_coherent(
        {{0.3, 1.1}, {0.0, 0.0}}, {{-0.1, 0.4}, {0.0, 0.0}}, cutoff);
    const topocs::TwoModeState acted = topocs::apply_M_ss(+1, -1, s);
    for (auto _ : state) {
        benchmark::DoNotOptimize(topocs::schmidt(acted));
    }
}
BENCHMARK(BM_Schmidt)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
