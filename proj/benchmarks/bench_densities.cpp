#include <rcl/copies.hpp>
#include <rcl/densities.hpp>

#include <benchmark/benchmark.h>

using namespace rcl;

static void BM_mk_K6(benchmark::State & state)
{
    auto g = complete_graph(6);
    for (auto _ : state)
        benchmark::DoNotOptimize(m_k(g).m_k);
}
BENCHMARK(BM_mk_K6);

static void BM_asymmetric_K4_K3(benchmark::State & state)
{
    auto k4 = complete_graph(4);
    auto k3 = complete_graph(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(asymmetric_m_k(k4, k3).value);
}
BENCHMARK(BM_asymmetric_K4_K3);

static void BM_copies_hypergraph(benchmark::State & state)
{
    auto k3 = complete_graph(3);
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_copies_hypergraph(k3, n).derived.edge_count());
}
BENCHMARK(BM_copies_hypergraph)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
