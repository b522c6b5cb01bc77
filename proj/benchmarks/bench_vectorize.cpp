#include <benchmark/benchmark.h>

#include "topiclab/corpus.hpp"
#include "topiclab/synth.hpp"
#include "topiclab/vectorize.hpp"

using namespace topiclab;

namespace {

Corpus synthetic_corpus(int docs) {
    SynthOptions opt;
    opt.n_docs = docs;
    opt.n_topics = 20;
    opt.seed = 9;
    RawCorpus raw;
    int id = 0;
    for (const auto& line : synth_corpus_lines(opt)) raw.docs.push_back({id++, line});
    return preprocess(raw, PreprocessConfig::defaults());
}

}  // namespace

static void BM_Preprocess(benchmark::State& state) {
    SynthOptions opt;
    opt.n_docs = static_cast<int>(state.range(0));
    opt.n_topics = 20;
    opt.seed = 9;
    RawCorpus raw;
    int id = 0;
    for (const auto& line : synth_corpus_lines(opt)) raw.docs.push_back({id++, line});
    const auto cfg = PreprocessConfig::defaults();
    for (auto _ : state) {
        benchmark::DoNotOptimize(preprocess(raw, cfg).snippets.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Preprocess)->Arg(2000)->Arg(10000);

static void BM_TfidfMatrix(benchmark::State& state) {
    const Corpus corpus = synthetic_corpus(static_cast<int>(state.range(0)));
    const Vocabulary vocab = build_vocabulary(corpus, 2, 1.0);
    const DocTermMatrix counts = count_matrix(corpus, vocab);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tfidf_matrix(counts).nnz());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(counts.nnz()));
}
BENCHMARK(BM_TfidfMatrix)->Arg(2000)->Arg(10000);

BENCHMARK_MAIN();
