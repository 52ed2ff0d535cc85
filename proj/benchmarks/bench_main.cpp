#include <csecs/fock_oracle.hpp>
#include <csecs/state.hpp>
#include <csecs/sweep.hpp>
#include <csecs/teleportation.hpp>

#include <benchmark/benchmark.h>

using namespace csecs;

static void BM_OverlapQuartet(benchmark::State& state) {
    const auto p = CsEcsParams::with_r({1.0, 0.3}, static_cast<int>(state.range(0)), 2, 0.6, 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(overlap_quartet(p));
}
BENCHMARK(BM_OverlapQuartet)->Arg(1)->Arg(4)->Arg(8);

static void BM_FidelityClosed(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto p = CsEcsParams::symmetric(0.8, k, k, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(fidelity_closed(p));
}
BENCHMARK(BM_FidelityClosed)->Arg(1)->Arg(2)->Arg(3);

static void BM_FidelityFallback(benchmark::State& state) {
    const auto p = CsEcsParams::symmetric(0.8, 1, 1, 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(fidelity_closed(p));
}
BENCHMARK(BM_FidelityFallback)->Unit(benchmark::kMillisecond);

static void BM_BuildState(benchmark::State& state) {
    TruncationConfig cfg;
    cfg.n_max = static_cast<int>(state.range(0));
    const auto p = CsEcsParams::symmetric(1.0, 2, 2, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(build_cs_eecs(p, cfg));
}
BENCHMARK(BM_BuildState)->Arg(40)->Arg(80);

static void BM_FidelityByQuadrature(benchmark::State& state) {
    TruncationConfig cfg;
    cfg.n_max = 40;
    const auto s = build_cs_eecs(CsEcsParams::symmetric(1.0, 1, 1, 0.5), cfg);
    for (auto _ : state) benchmark::DoNotOptimize(fidelity_by_quadrature(s));
}
BENCHMARK(BM_FidelityByQuadrature)->Unit(benchmark::kMillisecond);

static void BM_Figure6(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_figure(FigureId::Fig6));
}
BENCHMARK(BM_Figure6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
