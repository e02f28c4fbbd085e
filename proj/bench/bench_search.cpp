// Serial reference paths against their OpenMP counterparts.

#include <hypemb/engine.hpp>
#include <hypemb/partial_order.hpp>
#include <hypemb/witness_search.hpp>

#include <benchmark/benchmark.h>

using namespace hypemb;

namespace {

struct SearchCase {
    int n;
    DegreeTuple source, target;
};

// An infeasible search that has to exhaust its whole grid, and a feasible one.
auto search_case(std::int64_t which) -> SearchCase
{
    if (which == 0)
        return {2, DegreeTuple{2, 2}, DegreeTuple{3, 2, 1}};
    return {3, DegreeTuple{2, 2}, DegreeTuple{3, 3, 1}};
}

auto budget(int threads) -> SearchBudget
{
    SearchBudget b;
    b.call_cap = 20'000;
    b.threads = threads;
    return b;
}

void bm_witness_search_serial(benchmark::State & state)
{
    auto c = search_case(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(witness_search_serial(c.n, c.source, c.target, budget(1)));
}

void bm_witness_search(benchmark::State & state)
{
    auto c = search_case(state.range(0));
    auto threads = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(witness_search(c.n, c.source, c.target, budget(threads)));
}

auto grid_queries() -> std::vector<Query>
{
    std::vector<Query> out;
    for (int n = 1; n <= 3; ++n)
        for (std::int64_t s = n + 1; s <= 6; ++s)
            for (std::int64_t t = n + 1; t <= 6; ++t)
                for (auto & d : tuples_with_sum(s))
                    for (auto & e : tuples_with_sum(t))
                        out.push_back({n, d, e, Mode::Liouville});
    return out;
}

void bm_decide_batch_serial(benchmark::State & state)
{
    auto queries = grid_queries();
    DecideOptions options;
    options.budget = budget(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(decide_batch_serial(queries, options));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(queries.size()));
}

void bm_decide_batch(benchmark::State & state)
{
    auto queries = grid_queries();
    DecideOptions options;
    options.budget = budget(1);
    auto threads = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(decide_batch(queries, options, threads));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(queries.size()));
}

}  // namespace

BENCHMARK(bm_witness_search_serial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_witness_search)->ArgsProduct({{0, 1}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(bm_decide_batch_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_decide_batch)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
