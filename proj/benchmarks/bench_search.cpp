#include <rcl/freeness.hpp>
#include <rcl/ramsey.hpp>

#include <benchmark/benchmark.h>

using namespace rcl;

static void BM_is_ramsey_K6(benchmark::State & state)
{
    auto k6 = complete_graph(6);
    auto k3 = complete_graph(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_ramsey(k6, {k3, k3}).is_ramsey);
}
BENCHMARK(BM_is_ramsey_K6);

static void BM_ex2_K3K3(benchmark::State & state)
{
    auto k3 = complete_graph(3);
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ex_r(n, {k3, k3}).ex_value);
}
BENCHMARK(BM_ex2_K3K3)->Arg(5)->Arg(6);

static void BM_mu_schur(benchmark::State & state)
{
    auto schur = schur_system();
    int n = static_cast<int>(state.range(0));
    std::vector<LinearSystem> systems(2, schur);
    for (auto _ : state)
        benchmark::DoNotOptimize(mu(n, systems, SolutionMode::Strong).lower);
}
BENCHMARK(BM_mu_schur)->Arg(10)->Arg(15);

static void BM_schur_f3(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(schur_f(3));
}
BENCHMARK(BM_schur_f3);
