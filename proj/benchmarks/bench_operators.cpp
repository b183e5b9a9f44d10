#include <birank/operators.hpp>
#include <birank/rankers.hpp>
#include <birank/synth.hpp>

#include <benchmark/benchmark.h>

#include <map>

namespace {

const birank::BipartiteGraph& graph_for(std::int64_t scale) {
    static std::map<std::int64_t, birank::BipartiteGraph> cache;
    auto it = cache.find(scale);
    if (it == cache.end()) {
        birank::SyntheticSpec spec;
        spec.m = static_cast<std::size_t>(500 * scale);
        spec.n = static_cast<std::size_t>(700 * scale);
        it = cache.emplace(scale, birank::generate_bipartite(spec).graph).first;
    }
    return it->second;
}

void BM_HMatvec(benchmark::State& state) {
    const auto& g = graph_for(state.range(0));
    const birank::TransitionOperator h(g, birank::HMode::Uniform);
    const auto pi = birank::RankVector::uniform(g.size());
    std::vector<double> out(g.size());
    for (auto _ : state) {
        h.apply_left(pi.values(), out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * g.nnz()));
}
BENCHMARK(BM_HMatvec)->Arg(1)->Arg(10)->Arg(100);

void BM_MMatvec(benchmark::State& state) {
    const auto& g = graph_for(state.range(0));
    const auto sides = birank::side_partition(g);
    const birank::BlockTeleport m(sides);
    const auto pi = birank::RankVector::uniform(g.size());
    std::vector<double> out(g.size());
    for (auto _ : state) {
        m.apply(pi.values(), out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_MMatvec)->Arg(1)->Arg(10)->Arg(100);

void BM_Rank(benchmark::State& state, birank::Algorithm algorithm) {
    const auto& g = graph_for(state.range(0));
    birank::RankParams params;
    std::size_t iterations = 0;
    for (auto _ : state) {
        const auto r = birank::rank(g, algorithm, params);
        iterations = r.report.iterations;
        benchmark::DoNotOptimize(r.pi.values().data());
    }
    state.counters["iterations"] = static_cast<double>(iterations);
}
BENCHMARK_CAPTURE(BM_Rank, bipartite, birank::Algorithm::BipartiteRank)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Rank, pagerank, birank::Algorithm::PageRank)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Rank, ncdaware, birank::Algorithm::NcdAwareRank)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
