#include <splitirr/colorings.hpp>
#include <splitirr/decomposer.hpp>
#include <splitirr/oracle.hpp>

#include <benchmark/benchmark.h>

#include <numeric>

using namespace splitirr;

namespace
{
    std::vector<int> head(std::vector<int> d, int n)
    {
        d.resize(n, 0);
        return d;
    }
}

static void BM_OracleSmallClique(benchmark::State & state)
{
    const int n = static_cast<int>(state.range(0));
    auto g = gen_split_graph(n, head({1, 1}, n), {1, 1}, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_chi(g, 4, 40));
}
BENCHMARK(BM_OracleSmallClique)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_DecomposeHeavy(benchmark::State & state)
{
    const int n = static_cast<int>(state.range(0));
    std::vector<int> d(n, 2);
    auto g = gen_split_graph(n, d, std::vector<int>(n, 2), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose_graph(g));
}
BENCHMARK(BM_DecomposeHeavy)->Arg(20)->Arg(40)->Arg(80);

static void BM_DecomposeLight(benchmark::State & state)
{
    const int n = static_cast<int>(state.range(0));
    auto g = gen_split_graph(n, head({n / 2 - 1, n / 2 - 2}, n), std::vector<int>(n - 3, 1), 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose_graph(g));
}
BENCHMARK(BM_DecomposeLight)->Arg(20)->Arg(40);

static void BM_DecomposeThreeColours(benchmark::State & state)
{
    const int n = static_cast<int>(state.range(0));
    auto g = gen_split_graph(n, head({2}, n), {1, 1}, 9);
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose_graph(g));
}
BENCHMARK(BM_DecomposeThreeColours)->Arg(40)->Arg(160);

static void BM_StrangePattern(benchmark::State & state)
{
    const int n = static_cast<int>(state.range(0));
    auto seq = strange_reference_sequence(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(strange_coloring(seq));
}
BENCHMARK(BM_StrangePattern)->Arg(40)->Arg(200);

BENCHMARK_MAIN();
