#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "generators.hpp"
#include "olsembed/completion.hpp"
#include "olsembed/pipeline.hpp"
#include "olsembed/product.hpp"
#include "olsembed/verify.hpp"

using namespace olsembed;

namespace {

gen::EntryPair dense_pair(Index n) {
    gen::Rng rng(n);
    return gen::random_orthogonal_pair(rng, n, 0.8);
}

void BM_ProductRow(benchmark::State& state) {
    const auto big_m = static_cast<unsigned>(state.range(0));
    const Index side = Index{1} << big_m;
    std::vector<Symbol> ids(std::size_t{side} * side);
    std::iota(ids.begin(), ids.end(), 0u);
    ProductSquarePair pair(SymbolArray(big_m, ids), LatinSquare::xor_square(big_m));
    std::vector<Symbol> row(pair.order());
    Index r = 0;
    for (auto _ : state) {
        pair.row_a(r, row);
        pair.row_b(r, row);
        benchmark::DoNotOptimize(row.data());
        r = (r + 1) % pair.order();
    }
    state.SetItemsProcessed(state.iterations() * 2 * pair.order());
}
BENCHMARK(BM_ProductRow)->DenseRange(2, 8, 2);

void BM_EmbedPair(benchmark::State& state) {
    const auto n = static_cast<Index>(state.range(0));
    const auto pair = dense_pair(n);
    const auto p = gen::square(n, pair.p);
    const auto q = gen::square(n, pair.q);
    for (auto _ : state) {
        benchmark::DoNotOptimize(embed_pair(p, q));
    }
}
BENCHMARK(BM_EmbedPair)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_VerifyEmbedding(benchmark::State& state) {
    const auto n = static_cast<Index>(state.range(0));
    const auto pair = dense_pair(n);
    const auto e = embed_pair(gen::square(n, pair.p), gen::square(n, pair.q));
    const auto p = gen::triples(pair.p);
    const auto q = gen::triples(pair.q);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_embedding(e, p, q).ok());
    }
    state.SetItemsProcessed(state.iterations() * std::int64_t{e.order()} * e.order());
}
BENCHMARK(BM_VerifyEmbedding)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EmbedPls(benchmark::State& state) {
    const auto n = static_cast<Index>(state.range(0));
    gen::Rng rng(n);
    const auto p = gen::square(n, gen::random_partial(rng, n, 0.6));
    for (auto _ : state) {
        benchmark::DoNotOptimize(embed_pls(p, 2 * n));
    }
}
BENCHMARK(BM_EmbedPls)->RangeMultiplier(2)->Range(4, 64);

void BM_MaxMatching(benchmark::State& state) {
    const auto size = static_cast<Index>(state.range(0));
    gen::Rng rng(size);
    std::bernoulli_distribution edge(0.1);
    std::vector<std::vector<Index>> adj(size);
    for (Index l = 0; l < size; ++l) {
        for (Index r = 0; r < size; ++r) {
            if (edge(rng)) {
                adj[l].push_back(r);
            }
        }
    }
    const BipartiteInstance graph(size, size, adj);
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_matching(graph).size);
    }
}
BENCHMARK(BM_MaxMatching)->RangeMultiplier(4)->Range(16, 1024);

} // namespace

BENCHMARK_MAIN();
