#include <rcl/containers.hpp>

#include <benchmark/benchmark.h>

using namespace rcl;

static void BM_build_schur_family(benchmark::State & state)
{
    auto base = solution_khypergraph(schur_system(), static_cast<int>(state.range(0)));
    ContainerParams params;
    for (auto _ : state)
        benchmark::DoNotOptimize(build_single(base, params).fingerprints.size());
}
BENCHMARK(BM_build_schur_family)->Arg(12)->Arg(15)->Arg(18);

static void BM_assign_schur(benchmark::State & state)
{
    auto base = solution_khypergraph(schur_system(), 15);
    ContainerParams params;
    auto fam = build_single(base, params);
    auto independents = enumerate_independent_sets(base);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(assign_single(fam, independents[i]).first.count());
        i = (i + 1) % independents.size();
    }
}
BENCHMARK(BM_assign_schur);

static void BM_verify_schur_r2(benchmark::State & state)
{
    auto schur = schur_system();
    auto base = solution_khypergraph(schur, 12);
    ContainerParams params;
    auto fam = lift_tuple({base, base}, params);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_matcontainer({schur, schur}, 12, frac(1, 2), fam).all_hold);
}
BENCHMARK(BM_verify_schur_r2);
