#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "oracles.hpp"
#include "test_util.hpp"
#include "topiclab/error.hpp"
#include "topiclab/lda.hpp"
#include "topiclab/synth.hpp"
#include "topiclab/vectorize.hpp"

using namespace topiclab;
using test_util::make_corpus;

namespace {

void check_count_invariants(const lda::GibbsState& st) {
    std::size_t total = 0;
    for (int d = 0; d < st.n_docs; ++d) {
        int row_sum = 0;
        for (int t = 0; t < st.n_topics; ++t) row_sum += st.doc_topic(d, t);
        CHECK(row_sum == st.doc_len[static_cast<std::size_t>(d)]);
    }
    for (int t = 0; t < st.n_topics; ++t) {
        int term_sum = 0;
        for (int w = 0; w < st.n_terms; ++w) term_sum += st.topic_term(t, w);
        CHECK(term_sum == st.nk[static_cast<std::size_t>(t)]);
        CHECK(st.nk[static_cast<std::size_t>(t)] >= 0);
        total += static_cast<std::size_t>(st.nk[static_cast<std::size_t>(t)]);
    }
    CHECK(total == st.z.size());
}

DocTermMatrix two_block_counts(int n_docs, std::uint64_t seed) {
    SynthOptions opt;
    opt.n_docs = n_docs;
    opt.n_topics = 2;
    opt.seed = seed;
    RawCorpus raw;
    int id = 0;
    for (const auto& line : synth_corpus_lines(opt)) raw.docs.push_back({id++, line});
    const Corpus corpus = preprocess(raw, PreprocessConfig::defaults());
    const Vocabulary vocab = build_vocabulary(corpus, 1, 1.0);
    return count_matrix(corpus, vocab);
}

}  // namespace

TEST_CASE("a single token with one topic is forced") {
    Corpus corpus;
    corpus.snippets.push_back({0, {"a"}, "a"});
    const Vocabulary vocab = build_vocabulary(corpus, 1, 1.0);
    const DocTermMatrix counts = count_matrix(corpus, vocab);
    lda::Options opt;
    opt.alpha = 0.5;
    opt.beta = 0.1;
    opt.sweeps = 5;
    opt.burn_in = 1;
    const FactorModel model = lda::fit(counts, 1, opt);
    CHECK(model.W(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    // phi[0, a] = (1 + beta) / (1 + m*beta) with m = 1
    CHECK(model.H(0, 0) == doctest::Approx((1.0 + 0.1) / (1.0 + 0.1)).epsilon(1e-12));
}

TEST_CASE("lda rejects tf-idf input") {
    const DocTermMatrix tfidf(1, 1, Weighting::tfidf, {{0, 0, 1.0}});
    CHECK_THROWS_AS(lda::fit(tfidf, 1, {}), WeightingError);
}

TEST_CASE("gibbs_sweep with one topic leaves the counts unchanged") {
    const Corpus corpus = make_corpus({{"a", "b"}, {"b", "c"}});
    const Vocabulary vocab = build_vocabulary(corpus, 1, 1.0);
    const DocTermMatrix counts = count_matrix(corpus, vocab);
    lda::GibbsState st = lda::init_state(counts, 1, 1.0, 0.1, 5);
    const auto ndk = st.ndk;
    const auto nkw = st.nkw;
    lda::gibbs_sweep(st);
    CHECK(st.ndk == ndk);
    CHECK(st.nkw == nkw);
    CHECK(st.sweep == 1);
}

TEST_CASE("count invariants hold after every sweep") {
    const DocTermMatrix counts = two_block_counts(60, 3);
    lda::GibbsState st = lda::init_state(counts, 3, 0.5, 0.01, 11);
    check_count_invariants(st);
    for (int s = 0; s < 20; ++s) {
        lda::gibbs_sweep(st);
        check_count_invariants(st);
    }
}

TEST_CASE("gibbs trajectories are reproducible bitwise") {
    const DocTermMatrix counts = two_block_counts(40, 9);
    lda::Options opt;
    opt.alpha = 0.1;
    opt.beta = 0.01;
    opt.sweeps = 30;
    opt.burn_in = 5;
    opt.seed = 42;
    const FactorModel a = lda::fit(counts, 2, opt);
    const FactorModel b = lda::fit(counts, 2, opt);
    CHECK(a.W == b.W);
    CHECK(a.H == b.H);

    opt.seed = 43;
    const FactorModel c = lda::fit(counts, 2, opt);
    CHECK(a.W != c.W);
}

TEST_CASE("a two-block corpus separates into its blocks") {
    // docs 0..19 draw from one vocabulary block, docs 20..39 from the other
    const DocTermMatrix counts = two_block_counts(40, 1);
    Corpus corpus;  // rebuild vocab to map columns back to terms
    {
        SynthOptions opt;
        opt.n_docs = 40;
        opt.n_topics = 2;
        opt.seed = 1;
        RawCorpus raw;
        int id = 0;
        for (const auto& line : synth_corpus_lines(opt)) {
            raw.docs.push_back({id++, line});
        }
        corpus = preprocess(raw, PreprocessConfig::defaults());
    }
    const Vocabulary vocab = build_vocabulary(corpus, 1, 1.0);

    lda::Options opt;
    opt.alpha = 0.1;
    opt.beta = 0.01;
    opt.sweeps = 200;
    opt.burn_in = 50;
    opt.seed = 7;
    const FactorModel model = lda::fit(counts, 2, opt);

    const auto& blocks = synth_topic_blocks();
    for (int topic = 0; topic < 2; ++topic) {
        // top 3 phi terms of the topic
        std::vector<int> order(static_cast<std::size_t>(vocab.size()));
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::partial_sort(order.begin(), order.begin() + 3, order.end(),
                          [&](int a, int b) {
                              return model.H(topic, a) > model.H(topic, b);
                          });
        int in_first = 0, in_second = 0;
        for (int i = 0; i < 3; ++i) {
            const std::string& term = vocab.terms[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
            const auto& b0 = blocks[0];
            const auto& b1 = blocks[1];
            if (std::find(b0.begin(), b0.end(), term) != b0.end()) ++in_first;
            if (std::find(b1.begin(), b1.end(), term) != b1.end()) ++in_second;
        }
        CHECK((in_first == 3 || in_second == 3));
    }
}

TEST_CASE("empirical assignment frequencies match the enumeration oracle") {
    // one document ["a", "b"], k = 2, alpha = beta = 1
    Corpus corpus;
    corpus.snippets.push_back({0, {"a", "b"}, "a b"});
    const Vocabulary vocab = build_vocabulary(corpus, 1, 1.0);
    const DocTermMatrix counts = count_matrix(corpus, vocab);

    const auto posterior = oracles::lda_enumerate({{0, 1}}, 2, 2, 1.0, 1.0);
    // exact values: P(same topic) = 2/7 each, P(split) = 3/14 each
    CHECK(posterior.at({0, 0}) == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
    CHECK(posterior.at({0, 1}) == doctest::Approx(3.0 / 14.0).epsilon(1e-12));

    lda::GibbsState st = lda::init_state(counts, 2, 1.0, 1.0, 123);
    const int burn_in = 500;
    const int kept_sweeps = 20000;
    for (int s = 0; s < burn_in; ++s) lda::gibbs_sweep(st);
    std::map<std::vector<int>, int> freq;
    for (int s = 0; s < kept_sweeps; ++s) {
        lda::gibbs_sweep(st);
        ++freq[st.z];
    }
    for (const auto& [assignment, probability] : posterior) {
        const double empirical =
            static_cast<double>(freq[assignment]) / kept_sweeps;
        CHECK(std::abs(empirical - probability) <= 0.02);
    }
}

TEST_CASE("to_factor_model turns counts into row-stochastic estimates") {
    const Corpus corpus = make_corpus({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    const Vocabulary vocab = build_vocabulary(corpus, 1, 1.0);
    const DocTermMatrix counts = count_matrix(corpus, vocab);
    lda::GibbsState st = lda::init_state(counts, 3, 0.7, 0.05, 2);
    for (int s = 0; s < 10; ++s) lda::gibbs_sweep(st);
    const FactorModel model = lda::to_factor_model(st);
    for (int d = 0; d < model.n_docs(); ++d) {
        CHECK(model.W.row(d).sum() == doctest::Approx(1.0).epsilon(1e-9));
    }
    for (int t = 0; t < model.k(); ++t) {
        CHECK(model.H.row(t).sum() == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("to_factor_model with k=1 gives a column of ones") {
    const Corpus corpus = make_corpus({{"a"}, {"a", "b"}});
    const Vocabulary vocab = build_vocabulary(corpus, 1, 1.0);
    const lda::GibbsState st =
        lda::init_state(count_matrix(corpus, vocab), 1, 0.3, 0.1, 0);
    const FactorModel model = lda::to_factor_model(st);
    CHECK(model.W(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(model.W(1, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("uniform document-topic counts give a uniform theta row") {
    // hand-built state: one document of 4 tokens spread evenly over 2 topics
    Corpus corpus;
    corpus.snippets.push_back({0, {"a", "b", "c", "d"}, "a b c d"});
    const Vocabulary vocab = build_vocabulary(corpus, 1, 1.0);
    lda::GibbsState st = lda::init_state(count_matrix(corpus, vocab), 2, 0.5, 0.1, 1);
    // overwrite the random assignment with an even split: a,b -> 0 and c,d -> 1
    for (std::size_t i = 0; i < st.z.size(); ++i) {
        const int t = st.token_term[i] < 2 ? 0 : 1;
        --st.doc_topic(0, st.z[i]);
        --st.topic_term(st.z[i], st.token_term[i]);
        --st.nk[static_cast<std::size_t>(st.z[i])];
        st.z[i] = t;
        ++st.doc_topic(0, t);
        ++st.topic_term(t, st.token_term[i]);
        ++st.nk[static_cast<std::size_t>(t)];
    }
    const FactorModel model = lda::to_factor_model(st);
    CHECK(model.W(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(model.W(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("theta matches hand arithmetic on a toy state") {
    // two docs: doc0 = [a, b] assigned topics (0, 1); doc1 = [b] assigned 1
    // alpha = 0.5, k = 2:
    //   theta0 = (1+0.5)/(2+1), (1+0.5)/(2+1) = 0.5, 0.5
    //   theta1 = (0+0.5)/(1+1), (1+0.5)/(1+1) = 0.25, 0.75
    const Corpus corpus = make_corpus({{"a", "b"}, {"b"}});
    const Vocabulary vocab = build_vocabulary(corpus, 1, 1.0);
    lda::GibbsState st = lda::init_state(count_matrix(corpus, vocab), 2, 0.5, 0.1, 4);
    const std::vector<int> forced{0, 1, 1};  // tokens in (doc, column) order
    for (std::size_t i = 0; i < st.z.size(); ++i) {
        --st.doc_topic(st.token_doc[i], st.z[i]);
        --st.topic_term(st.z[i], st.token_term[i]);
        --st.nk[static_cast<std::size_t>(st.z[i])];
        st.z[i] = forced[i];
        ++st.doc_topic(st.token_doc[i], forced[i]);
        ++st.topic_term(forced[i], st.token_term[i]);
        ++st.nk[static_cast<std::size_t>(forced[i])];
    }
    const FactorModel model = lda::to_factor_model(st);
    CHECK(model.W(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(model.W(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(model.W(1, 0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(model.W(1, 1) == doctest::Approx(0.75).epsilon(1e-12));

    // phi spot check: phi[1, b] = (nkw + beta) / (nk + m*beta) = (2+0.1)/(2+0.2)
    const int col_b = vocab.find("b");
    CHECK(model.H(1, col_b) == doctest::Approx(2.1 / 2.2).epsilon(1e-12));
}

TEST_CASE("empty documents get uniform rows and are flagged") {
    Corpus corpus = make_corpus({{"a", "b"}, {"zzz"}, {"a"}});
    const Vocabulary vocab = build_vocabulary(make_corpus({{"a", "b"}}), 1, 1.0);
    const DocTermMatrix counts = count_matrix(corpus, vocab);
    REQUIRE(counts.empty_rows() == std::vector<int>{1});
    lda::Options opt;
    opt.alpha = 0.5;
    opt.beta = 0.1;
    opt.sweeps = 10;
    opt.burn_in = 2;
    const FactorModel model = lda::fit(counts, 2, opt);
    CHECK(model.uniform_theta_rows == std::vector<int>{1});
    CHECK(model.W(1, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(model.W(1, 1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fit validates its options") {
    const Corpus corpus = make_corpus({{"a", "b"}});
    const DocTermMatrix counts =
        count_matrix(corpus, build_vocabulary(corpus, 1, 1.0));
    lda::Options opt;
    opt.sweeps = 5;
    opt.burn_in = 5;
    CHECK_THROWS_AS(lda::fit(counts, 1, opt), Error);
    opt.burn_in = -1;
    CHECK_THROWS_AS(lda::fit(counts, 1, opt), Error);
    opt.burn_in = 0;
    opt.beta = 0.0;
    CHECK_THROWS_AS(lda::fit(counts, 1, opt), Error);
}
