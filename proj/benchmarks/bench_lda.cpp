#include <benchmark/benchmark.h>

#include "topiclab/corpus.hpp"
#include "topiclab/lda.hpp"
#include "topiclab/synth.hpp"
#include "topiclab/vectorize.hpp"

using namespace topiclab;

namespace {

DocTermMatrix synthetic_counts(int docs, int topics) {
    SynthOptions opt;
    opt.n_docs = docs;
    opt.n_topics = topics;
    opt.seed = 3;
    RawCorpus raw;
    int id = 0;
    for (const auto& line : synth_corpus_lines(opt)) raw.docs.push_back({id++, line});
    const Corpus corpus = preprocess(raw, PreprocessConfig::defaults());
    const Vocabulary vocab = build_vocabulary(corpus, 2, 1.0);
    return count_matrix(corpus, vocab);
}

}  // namespace

static void BM_GibbsSweep(benchmark::State& state) {
    const int docs = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const DocTermMatrix counts = synthetic_counts(docs, std::min(k, 40));
    lda::GibbsState st = lda::init_state(counts, k, 50.0 / k, 0.01, 7);
    for (auto _ : state) {
        lda::gibbs_sweep(st);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(st.z.size()));
}
BENCHMARK(BM_GibbsSweep)->Args({2000, 8})->Args({10000, 40});

static void BM_ThetaPhiEstimate(benchmark::State& state) {
    const DocTermMatrix counts = synthetic_counts(static_cast<int>(state.range(0)), 8);
    lda::GibbsState st = lda::init_state(counts, 8, 50.0 / 8, 0.01, 7);
    lda::gibbs_sweep(st);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lda::to_factor_model(st).W.data());
    }
}
BENCHMARK(BM_ThetaPhiEstimate)->Arg(2000)->Arg(10000);

BENCHMARK_MAIN();
