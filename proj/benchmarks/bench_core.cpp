#include <benchmark/benchmark.h>

#include "lvgame/equilibria.hpp"
#include "lvgame/simulate.hpp"

using namespace lvgame;

static void BM_IntegrateCompetitive(benchmark::State& state) {
    const auto m = validate(NondimParams{0.5, 0.5, 1.0, Interaction::competitive});
    IntegrationConfig cfg;
    cfg.t_end = static_cast<double>(state.range(0));
    const State x0{0.3, 0.8};
    for (auto _ : state) benchmark::DoNotOptimize(integrate(m, x0, cfg));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(cfg.t_end / cfg.step));
}
BENCHMARK(BM_IntegrateCompetitive)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_PhasePortrait(benchmark::State& state) {
    const auto m = validate(NondimParams{2.0, 1.5, 1.0, Interaction::competitive});
    PortraitGrid grid;
    grid.axes = {{0.3, 1.5, 5}, {0.3, 1.5, 5}};
    IntegrationConfig cfg;
    cfg.t_end = 20.0;
    for (auto _ : state) benchmark::DoNotOptimize(phase_portrait(m, grid, cfg, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_PhasePortrait)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_NPlayerSolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    NPlayerParams p;
    p.rho.assign(n, 1.0);
    p.K.assign(n, 1.0);
    p.C = Matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) p.C(i, j) = 0.5 / static_cast<double>(n);
    const auto m = validate(p);
    for (auto _ : state) benchmark::DoNotOptimize(interior_equilibrium_nplayer(m));
}
BENCHMARK(BM_NPlayerSolve)->Arg(3)->Arg(10)->Arg(50);
BENCHMARK_MAIN();
