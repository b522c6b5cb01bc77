#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "topiclab/descriptors.hpp"
#include "topiclab/error.hpp"
#include "topiclab/io.hpp"
#include "topiclab/vectorize.hpp"

using namespace topiclab;
using test_util::make_corpus;

namespace {

FactorModel model_with_h(const std::vector<std::vector<double>>& h,
                         Method method = Method::nmf) {
    FactorModel model;
    model.method = method;
    const auto k = static_cast<Eigen::Index>(h.size());
    const auto m = static_cast<Eigen::Index>(h.empty() ? 0 : h[0].size());
    model.H.resize(k, m);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            model.H(i, j) = h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    model.W = Eigen::MatrixXd::Zero(1, k);
    return model;
}

Vocabulary vocab_of(const std::vector<std::vector<std::string>>& docs) {
    return build_vocabulary(make_corpus(docs), 1, 1.0);
}

}  // namespace

TEST_CASE("top_terms ranks by weight") {
    const Vocabulary vocab = vocab_of({{"a", "b", "c"}});
    const FactorModel model = model_with_h({{0.9, 0.1, 0.0}});
    const auto descriptors = top_terms(model, vocab, 2);
    REQUIRE(descriptors.size() == 1);
    REQUIRE(descriptors[0].terms.size() == 2);
    CHECK(descriptors[0].terms[0] == std::pair<std::string, double>{"a", 0.9});
    CHECK(descriptors[0].terms[1] == std::pair<std::string, double>{"b", 0.1});
}

TEST_CASE("top_terms breaks ties lexicographically") {
    // vocabulary columns are sorted (a, b, c); equal weights must come out
    // in term order regardless of column values
    const Vocabulary vocab = vocab_of({{"b", "a", "c"}});
    const FactorModel model = model_with_h({{0.5, 0.5, 0.5}});
    const auto descriptors = top_terms(model, vocab, 2);
    CHECK(descriptors[0].terms[0].first == "a");
    CHECK(descriptors[0].terms[1].first == "b");
}

TEST_CASE("top_terms truncates when t exceeds the vocabulary") {
    const Vocabulary vocab = vocab_of({{"a", "b"}});
    const FactorModel model = model_with_h({{0.2, 0.8}});
    const auto descriptors = top_terms(model, vocab, 10);
    CHECK(descriptors[0].terms.size() == 2);
}

TEST_CASE("top_terms depends only on the term-to-weight mapping") {
    // renaming terms permutes the sorted column order; rankings must follow
    // the terms, not the columns
    const Vocabulary vocab1 = vocab_of({{"apple", "mango", "zebra"}});
    const FactorModel m1 = model_with_h({{0.7, 0.2, 0.4}});

    const auto rename = [](const std::string& t) -> std::string {
        if (t == "apple") return "zz_apple";
        if (t == "mango") return "aa_mango";
        return "mm_zebra";
    };
    const Vocabulary vocab2 = vocab_of({{"zz_apple", "aa_mango", "mm_zebra"}});
    std::vector<double> h2(3, 0.0);
    for (int col = 0; col < 3; ++col) {
        const auto& term = vocab1.terms[static_cast<std::size_t>(col)];
        h2[static_cast<std::size_t>(vocab2.find(rename(term)))] = m1.H(0, col);
    }
    const FactorModel m2 = model_with_h({h2});

    const auto d1 = top_terms(m1, vocab1, 3);
    const auto d2 = top_terms(m2, vocab2, 3);
    REQUIRE(d1[0].terms.size() == d2[0].terms.size());
    for (std::size_t i = 0; i < d1[0].terms.size(); ++i) {
        CHECK(rename(d1[0].terms[i].first) == d2[0].terms[i].first);
        CHECK(d1[0].terms[i].second == d2[0].terms[i].second);
    }
}

TEST_CASE("normalize_for_plot max mode peaks at exactly 1") {
    TopicDescriptors td;
    td.terms = {{"a", 4.0}, {"b", 2.0}, {"c", 2.0}};
    const auto series = normalize_for_plot(td, NormalizeMode::max);
    CHECK(series[0].second == 1.0);
    CHECK(series[1].second == 0.5);
    CHECK(series[2].second == 0.5);
}

TEST_CASE("normalize_for_plot sum mode sums to 1") {
    TopicDescriptors td;
    td.terms = {{"a", 4.0}, {"b", 2.0}, {"c", 2.0}};
    const auto series = normalize_for_plot(td, NormalizeMode::sum);
    CHECK(series[0].second == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(series[1].second == doctest::Approx(0.25).epsilon(1e-12));
    double sum = 0.0;
    for (const auto& [term, w] : series) sum += w;
    CHECK(std::abs(sum - 1.0) <= 1e-12);
}

TEST_CASE("normalize_for_plot of a singleton is 1 in both modes") {
    TopicDescriptors td;
    td.terms = {{"a", 0.37}};
    CHECK(normalize_for_plot(td, NormalizeMode::max)[0].second == 1.0);
    CHECK(normalize_for_plot(td, NormalizeMode::sum)[0].second == 1.0);
}

TEST_CASE("normalize_for_plot rejects dead topics") {
    TopicDescriptors td;
    td.terms = {{"a", 0.0}, {"b", 0.0}};
    CHECK_THROWS_AS(normalize_for_plot(td, NormalizeMode::max), AllZeroTopic);
}

TEST_CASE("normalize_for_plot preserves rank order") {
    TopicDescriptors td;
    td.terms = {{"a", 5.0}, {"b", 3.0}, {"c", 1.0}};
    for (const auto mode : {NormalizeMode::max, NormalizeMode::sum}) {
        const auto series = normalize_for_plot(td, mode);
        for (std::size_t i = 0; i + 1 < series.size(); ++i) {
            CHECK(series[i].second >= series[i + 1].second);
            CHECK(series[i].first == td.terms[i].first);
        }
    }
}

TEST_CASE("default modes follow the method") {
    CHECK(default_normalize_mode(Method::nmf) == NormalizeMode::max);
    CHECK(default_normalize_mode(Method::lda) == NormalizeMode::sum);
}

TEST_CASE("dead topics are reported") {
    const FactorModel model = model_with_h({{0.1, 0.2}, {0.0, 0.0}, {0.3, 0.0}});
    CHECK(dead_topics(model) == std::vector<int>{1});
}

TEST_CASE("pair_topics matches topics by H-row cosine") {
    const FactorModel a = model_with_h({{1.0, 0.0, 0.0}, {0.0, 1.0, 1.0}});
    const FactorModel b = model_with_h({{0.0, 0.9, 0.8}, {0.9, 0.1, 0.0}});
    const auto pairs = pair_topics(a, b);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].topic_b == 1);
    CHECK(pairs[1].topic_b == 0);
    CHECK(pairs[0].cosine > 0.9);
}

TEST_CASE("descriptor and plot CSV exports carry the meta header") {
    test_util::TempDir tmp("descriptors_io");
    const Vocabulary vocab = vocab_of({{"a", "b", "c"}});
    const FactorModel model = model_with_h({{0.9, 0.3, 0.1}});
    const auto descriptors = top_terms(model, vocab, 3);

    save_descriptor_csv(descriptors, {}, tmp.file("descriptors.csv"),
                        {"cafecafecafecafe", 5});
    const std::string csv = read_file(tmp.file("descriptors.csv"));
    CHECK(csv.find("cafecafecafecafe") != std::string::npos);
    CHECK(csv.find("method,topic_id,rank,term,weight,normalized_weight") !=
          std::string::npos);
    CHECK(csv.find("nmf,0,1,a,0.9,1\n") != std::string::npos);

    save_plot_csv(descriptors[0], NormalizeMode::max, tmp.file("plot.csv"),
                  {"cafecafecafecafe", 5});
    const std::string plot = read_file(tmp.file("plot.csv"));
    CHECK(plot.find("rank,term,normalized_weight") != std::string::npos);
    CHECK(plot.find("1,a,1\n") != std::string::npos);
}
