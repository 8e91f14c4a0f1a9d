#include <benchmark/benchmark.h>

#include "reltune/field_index.hpp"
#include "reltune/metrics.hpp"
#include "reltune/optimizer.hpp"
#include "reltune/param_space.hpp"
#include "reltune/search_engine.hpp"
#include "reltune/synth.hpp"

namespace {

using namespace reltune;

SynthDataset dataset(std::size_t n_docs, std::size_t n_queries) {
    SynthSpec spec;
    spec.n_docs = n_docs;
    spec.n_queries = n_queries;
    spec.seed = 9001;
    return generate_synthetic(spec);
}

void BM_BuildIndex(benchmark::State& state) {
    const SynthDataset data = dataset(static_cast<std::size_t>(state.range(0)), 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_index(data.corpus));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildIndex)->Arg(200)->Arg(1000)->Arg(4000);

void BM_Search(benchmark::State& state) {
    const SynthDataset data = dataset(static_cast<std::size_t>(state.range(0)), 50);
    const SearchEngine engine(data.corpus);
    const auto queries = data.table.queries();
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            engine.search(queries[i++ % queries.size()], data.hidden_config, 20));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Search)->Arg(200)->Arg(1000)->Arg(4000);

void BM_AggregateNdcg(benchmark::State& state) {
    const SynthDataset data = dataset(static_cast<std::size_t>(state.range(0)), 50);
    const SearchEngine engine(data.corpus);
    const auto queries = data.table.queries();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            aggregate_ndcg(engine, data.hidden_config, queries, data.table, 20));
    }
    state.SetItemsProcessed(state.iterations() * queries.size());
}
BENCHMARK(BM_AggregateNdcg)->Arg(200)->Arg(1000);

void BM_TpeSuggest(benchmark::State& state) {
    const SynthDataset data = dataset(100, 20);
    const ParameterSpace space = weight_space(data.corpus);
    Rng rng(5);
    std::vector<Trial> history;
    for (std::size_t i = 0; i < static_cast<std::size_t>(state.range(0)); ++i) {
        history.push_back(Trial{i, sample_random(space, rng), rng.uniform01()});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(tpe_suggest(space, history, rng));
    }
}
BENCHMARK(BM_TpeSuggest)->Arg(50)->Arg(300)->Arg(1000);

void BM_TuneObjective(benchmark::State& state) {
    // One full objective evaluation: the per-trial cost of tuning.
    const SynthDataset data = dataset(200, 50);
    const SearchEngine engine(data.corpus);
    const auto queries = data.table.queries();
    const ParameterSpace space = weight_space(data.corpus);
    Rng rng(5);
    for (auto _ : state) {
        const auto values = sample_random(space, rng);
        benchmark::DoNotOptimize(aggregate_ndcg(engine, decode_weights(space, values), queries,
                                                data.table, 20));
    }
}
BENCHMARK(BM_TuneObjective);

} // namespace

BENCHMARK_MAIN();
