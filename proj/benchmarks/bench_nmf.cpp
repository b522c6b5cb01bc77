#include <benchmark/benchmark.h>

#include "topiclab/nmf.hpp"
#include "topiclab/rng.hpp"

using namespace topiclab;

namespace {

DocTermMatrix synthetic_matrix(int n, int m, double density) {
    Rng rng(5);
    std::vector<DocTermMatrix::Entry> entries;
    for (int d = 0; d < n; ++d) {
        for (int t = 0; t < m; ++t) {
            if (rng.uniform() < density) entries.push_back({d, t, rng.uniform(0.05, 1.0)});
        }
    }
    return DocTermMatrix(n, m, Weighting::tfidf, std::move(entries));
}

}  // namespace

static void BM_UpdateStep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const DocTermMatrix V = synthetic_matrix(n, 300, 0.02);
    auto [W, H] = nmf::init_factors(n, 300, k, 1, 1.0);
    for (auto _ : state) {
        nmf::update_step(V, W, H);
        benchmark::DoNotOptimize(W.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(V.nnz()));
}
BENCHMARK(BM_UpdateStep)->Args({2000, 8})->Args({10000, 40});

static void BM_ReconstructionError(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DocTermMatrix V = synthetic_matrix(n, 300, 0.02);
    auto [W, H] = nmf::init_factors(n, 300, 20, 1, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nmf::reconstruction_error(V, W, H));
    }
}
BENCHMARK(BM_ReconstructionError)->Arg(2000)->Arg(10000);

BENCHMARK_MAIN();
