// Acceptance suite: one check per release criterion, each printed as a
// single PASS/FAIL line. Exits nonzero when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "test_util.hpp"
#include "topiclab/descriptors.hpp"
#include "topiclab/evaluate.hpp"
#include "topiclab/labelling.hpp"
#include "topiclab/lda.hpp"
#include "topiclab/nmf.hpp"
#include "topiclab/pipeline.hpp"
#include "topiclab/rng.hpp"
#include "topiclab/synth.hpp"
#include "topiclab/vectorize.hpp"

using namespace topiclab;

namespace {

struct CriterionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CriterionFailure(what);
}

struct Runner {
    int index = 0;
    int failed = 0;

    void run(const std::string& name, const std::function<void()>& body) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (error.empty()) {
            std::printf("[%2d/11] PASS %s (%.2f s)\n", index, name.c_str(), seconds);
        } else {
            ++failed;
            std::printf("[%2d/11] FAIL %s (%.2f s): %s\n", index, name.c_str(),
                        seconds, error.c_str());
        }
        std::fflush(stdout);
    }
};

void require_runtime(double seconds, double budget) {
    std::ostringstream msg;
    msg << "runtime " << seconds << " s exceeded the " << budget << " s budget";
    require(seconds <= budget, msg.str());
}

double elapsed_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

Corpus synth_corpus(int docs, int topics, std::uint64_t seed) {
    SynthOptions opt;
    opt.n_docs = docs;
    opt.n_topics = topics;
    opt.seed = seed;
    RawCorpus raw;
    int id = 0;
    for (const auto& line : synth_corpus_lines(opt)) raw.docs.push_back({id++, line});
    return preprocess(raw, PreprocessConfig::defaults());
}

// random row-normalized sparse matrix tagged tfidf
DocTermMatrix random_unit_matrix(int n, int m, std::uint64_t seed, double density) {
    Rng rng(seed);
    std::vector<DocTermMatrix::Entry> entries;
    for (int d = 0; d < n; ++d) {
        std::vector<DocTermMatrix::Entry> row;
        for (int t = 0; t < m; ++t) {
            if (rng.uniform() < density) row.push_back({d, t, rng.uniform(0.05, 1.0)});
        }
        if (row.empty()) row.push_back({d, rng.uniform_int(m), 1.0});
        double sq = 0.0;
        for (const auto& e : row) sq += e.value * e.value;
        for (auto& e : row) {
            e.value /= std::sqrt(sq);
            entries.push_back(e);
        }
    }
    return DocTermMatrix(n, m, Weighting::tfidf, std::move(entries));
}

void criterion_tfidf_oracle() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + rng.uniform_int(8);
        const int m = 1 + rng.uniform_int(15);
        std::vector<std::vector<int>> dense(
            static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m), 0));
        std::vector<DocTermMatrix::Entry> entries;
        for (int d = 0; d < n; ++d) {
            for (int t = 0; t < m; ++t) {
                if (rng.uniform() < 0.45) {
                    const int c = 1 + rng.uniform_int(4);
                    dense[static_cast<std::size_t>(d)][static_cast<std::size_t>(t)] = c;
                    entries.push_back({d, t, static_cast<double>(c)});
                }
            }
        }
        const DocTermMatrix tfidf =
            tfidf_matrix(DocTermMatrix(n, m, Weighting::count, entries));
        const auto expected = oracles::dense_tfidf(dense);
        for (int d = 0; d < n; ++d) {
            std::vector<double> got(static_cast<std::size_t>(m), 0.0);
            const auto row = tfidf.row(d);
            for (std::size_t i = 0; i < row.size(); ++i) {
                got[static_cast<std::size_t>(row.cols[i])] = row.vals[i];
            }
            for (int t = 0; t < m; ++t) {
                const double delta =
                    std::abs(got[static_cast<std::size_t>(t)] -
                             expected[static_cast<std::size_t>(d)]
                                     [static_cast<std::size_t>(t)]);
                require(delta <= 1e-12, "entry deviates by " + std::to_string(delta));
            }
        }
    }
    require_runtime(elapsed_since(start), 1.0);
}

void criterion_nmf_monotone() {
    const auto start = std::chrono::steady_clock::now();
    for (int trial = 0; trial < 10; ++trial) {
        const DocTermMatrix V =
            random_unit_matrix(50, 30, 200 + static_cast<std::uint64_t>(trial), 0.35);
        nmf::Options opt;
        opt.max_iter = 200;
        opt.tol = 0.0;
        opt.seed = static_cast<std::uint64_t>(trial);
        const FactorModel model = nmf::fit(V, 5, opt);
        require(model.objective_trace.size() == 201, "expected 200 recorded steps");
        for (std::size_t i = 1; i < model.objective_trace.size(); ++i) {
            require(model.objective_trace[i] <=
                        model.objective_trace[i - 1] + 1e-9,
                    "objective increased at step " + std::to_string(i));
        }
        require(model.W.minCoeff() >= 0.0, "negative entry in W");
        require(model.H.minCoeff() >= 0.0, "negative entry in H");
    }
    require_runtime(elapsed_since(start), 5.0);
}

void criterion_nmf_rank1() {
    Rng rng(77);
    std::vector<double> u, v;
    for (int i = 0; i < 20; ++i) u.push_back(rng.uniform(0.2, 2.0));
    for (int j = 0; j < 10; ++j) v.push_back(rng.uniform(0.2, 2.0));
    std::vector<DocTermMatrix::Entry> entries;
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 10; ++j) {
            entries.push_back({i, j, u[static_cast<std::size_t>(i)] *
                                         v[static_cast<std::size_t>(j)]});
        }
    }
    const DocTermMatrix V(20, 10, Weighting::tfidf, std::move(entries));
    nmf::Options opt;
    opt.max_iter = 500;
    opt.tol = 0.0;
    opt.seed = 1;
    const FactorModel model = nmf::fit(V, 1, opt);
    const double err = model.objective_trace.back();
    require(err <= 1e-6,
            "rank-1 error " + std::to_string(err) + " above 1e-6");
}

void criterion_lda_conservation() {
    const auto start = std::chrono::steady_clock::now();
    const Corpus corpus = synth_corpus(400, 4, 19);
    const Vocabulary vocab = build_vocabulary(corpus, 2, 1.0);
    const DocTermMatrix counts = count_matrix(corpus, vocab);
    lda::GibbsState st = lda::init_state(counts, 4, 50.0 / 4.0, 0.01, 19);

    const auto check_invariants = [&] {
        std::size_t total = 0;
        for (int d = 0; d < st.n_docs; ++d) {
            int row = 0;
            for (int t = 0; t < st.n_topics; ++t) row += st.doc_topic(d, t);
            require(row == st.doc_len[static_cast<std::size_t>(d)],
                    "doc-topic counts lost tokens");
        }
        for (int t = 0; t < st.n_topics; ++t) {
            int sum = 0;
            for (int w = 0; w < st.n_terms; ++w) sum += st.topic_term(t, w);
            require(sum == st.nk[static_cast<std::size_t>(t)],
                    "topic-term counts disagree with topic totals");
            total += static_cast<std::size_t>(st.nk[static_cast<std::size_t>(t)]);
        }
        require(total == st.z.size(), "topic totals lost tokens");
    };

    check_invariants();
    for (int sweep = 0; sweep < 200; ++sweep) {
        lda::gibbs_sweep(st);
        check_invariants();
    }
    require_runtime(elapsed_since(start), 10.0);
}

void criterion_lda_posterior() {
    Corpus corpus;
    corpus.snippets.push_back({0, {"a", "b"}, "a b"});
    const Vocabulary vocab = build_vocabulary(corpus, 1, 1.0);
    const DocTermMatrix counts = count_matrix(corpus, vocab);
    const auto posterior = oracles::lda_enumerate({{0, 1}}, 2, 2, 1.0, 1.0);

    lda::GibbsState st = lda::init_state(counts, 2, 1.0, 1.0, 2024);
    for (int s = 0; s < 1000; ++s) lda::gibbs_sweep(st);  // burn in
    std::map<std::vector<int>, int> freq;
    const int kept = 20000;
    for (int s = 0; s < kept; ++s) {
        lda::gibbs_sweep(st);
        ++freq[st.z];
    }
    for (const auto& [assignment, probability] : posterior) {
        const double empirical = static_cast<double>(freq[assignment]) / kept;
        const double delta = std::abs(empirical - probability);
        require(delta <= 0.02, "assignment frequency off by " + std::to_string(delta));
    }
}

void criterion_lda_separation() {
    const auto& blocks = synth_topic_blocks();
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Corpus corpus = synth_corpus(400, 2, seed);
        const Vocabulary vocab = build_vocabulary(corpus, 2, 1.0);
        const DocTermMatrix counts = count_matrix(corpus, vocab);
        lda::Options opt;
        opt.alpha = 0.1;
        opt.beta = 0.01;
        opt.sweeps = 200;
        opt.burn_in = 50;
        opt.seed = seed;
        const FactorModel model = lda::fit(counts, 2, opt);
        for (int topic = 0; topic < 2; ++topic) {
            std::vector<int> order(static_cast<std::size_t>(vocab.size()));
            for (std::size_t i = 0; i < order.size(); ++i) {
                order[i] = static_cast<int>(i);
            }
            std::partial_sort(order.begin(), order.begin() + 3, order.end(),
                              [&](int a, int b) {
                                  return model.H(topic, a) > model.H(topic, b);
                              });
            int in_block[2] = {0, 0};
            for (int i = 0; i < 3; ++i) {
                const auto& term =
                    vocab.terms[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
                for (int b = 0; b < 2; ++b) {
                    const auto& block = blocks[static_cast<std::size_t>(b)];
                    if (std::find(block.begin(), block.end(), term) != block.end()) {
                        ++in_block[b];
                    }
                }
            }
            require(in_block[0] == 3 || in_block[1] == 3,
                    "seed " + std::to_string(seed) + ": top-3 terms straddle blocks");
        }
    }
}

void criterion_lexrank_oracle() {
    Rng rng(404);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + rng.uniform_int(10);
        const int m = 4 + rng.uniform_int(5);
        const DocTermMatrix vectors =
            random_unit_matrix(n, m, 500 + static_cast<std::uint64_t>(trial), 0.5);
        std::vector<LabelCandidate> candidates;
        for (int i = 0; i < n; ++i) candidates.push_back({i, i, "", 0.0, 0.0});
        const double threshold = 0.2 + 0.4 * rng.uniform();
        const auto scores = lexrank(candidates, vectors, threshold, 0.85, 1e-12);

        oracles::Dense dense(static_cast<std::size_t>(n),
                             std::vector<double>(static_cast<std::size_t>(m), 0.0));
        for (int d = 0; d < n; ++d) {
            const auto row = vectors.row(d);
            for (std::size_t i = 0; i < row.size(); ++i) {
                dense[static_cast<std::size_t>(d)][static_cast<std::size_t>(row.cols[i])] =
                    row.vals[i];
            }
        }
        const auto expected = oracles::dense_lexrank(dense, threshold, 0.85);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double delta =
                std::abs(scores[static_cast<std::size_t>(i)] -
                         expected[static_cast<std::size_t>(i)]);
            require(delta <= 1e-6, "score deviates by " + std::to_string(delta));
            sum += scores[static_cast<std::size_t>(i)];
        }
        require(std::abs(sum - 1.0) <= 1e-9, "scores do not sum to 1");
    }
}

PipelineConfig label_run_config(const std::filesystem::path& out) {
    PipelineConfig cfg;
    cfg.output_dir = out.string();
    cfg.k = 8;
    cfg.seed = 23;
    cfg.synth_docs = 2000;
    cfg.min_df = 3;
    cfg.nmf_max_iter = 80;
    cfg.lda_sweeps = 150;
    cfg.lda_burn_in = 30;
    cfg.validation_size = 1000;
    return cfg;
}

void run_label_stages(const PipelineConfig& cfg) {
    stages::synth(cfg);
    stages::preprocess(cfg);
    stages::vectorize(cfg);
    for (const Method method : {Method::nmf, Method::lda}) {
        stages::fit(cfg, method);
        stages::describe(cfg, method);
        stages::label(cfg, method);
    }
}

void criterion_label_containment(const std::filesystem::path& scratch) {
    const PipelineConfig one = label_run_config(scratch / "labels_one");
    const PipelineConfig two = label_run_config(scratch / "labels_two");
    run_label_stages(one);
    run_label_stages(two);

    const Corpus corpus = load_corpus(artifact::corpus(one));
    std::set<std::string> texts;
    for (const auto& snippet : corpus.snippets) texts.insert(snippet.source_text);

    for (const Method method : {Method::nmf, Method::lda}) {
        const auto labels = load_label_report(artifact::labels(one, method));
        require(labels.size() == 8, "expected 8 label records");
        int non_null = 0;
        for (const auto& label : labels) {
            if (!label.label) continue;
            ++non_null;
            require(texts.count(*label.label) == 1,
                    "label is not a verbatim snippet: " + *label.label);
        }
        require(non_null > 0, "every label came out null");
        const std::string bytes_one = read_file(artifact::labels(one, method));
        const std::string bytes_two = read_file(artifact::labels(two, method));
        require(bytes_one == bytes_two, "label reports differ between reruns");
    }
}

void criterion_hit_monotonicity(const std::filesystem::path& scratch) {
    const PipelineConfig cfg = label_run_config(scratch / "labels_one");
    const Corpus corpus = load_corpus(artifact::corpus(cfg));
    const Vocabulary vocab = load_vocabulary(artifact::vocabulary(cfg)).vocab;
    const DocTermMatrix counts = load_matrix(artifact::counts(cfg));
    const TfidfScheme scheme = TfidfScheme::from_counts(counts);
    const auto validation = sample_validation(corpus, 1000, cfg.seed);
    require(validation.size() == 1000, "validation sample is not 1000 snippets");
    const auto pc = cfg.preprocess_config();

    for (const Method method : {Method::nmf, Method::lda}) {
        const auto labels = load_label_report(artifact::labels(cfg, method));
        for (const auto& label : labels) {
            if (!label.label) continue;
            const int h3 =
                hit_count(*label.label, validation, vocab, scheme, pc, 0.3).hits;
            const int h5 =
                hit_count(*label.label, validation, vocab, scheme, pc, 0.5).hits;
            const int h7 =
                hit_count(*label.label, validation, vocab, scheme, pc, 0.7).hits;
            require(h7 <= h5 && h5 <= h3,
                    "hits not monotone for label: " + *label.label);
        }
    }
}

void criterion_full_scale(const std::filesystem::path& scratch,
                           PipelineConfig& out_cfg) {
    const auto start = std::chrono::steady_clock::now();
    PipelineConfig cfg;
    cfg.output_dir = (scratch / "full").string();
    cfg.k = 40;
    cfg.seed = 7;
    cfg.synth_docs = 40000;
    cfg.validation_size = 1000;
    stages::synth(cfg);
    run_pipeline(cfg);
    out_cfg = cfg;

    for (const Method method : {Method::nmf, Method::lda}) {
        const auto labels = load_label_report(artifact::labels(cfg, method));
        require(labels.size() == 40, "expected 40 label records per method");
        const FactorModel model = load_model(artifact::model(cfg, method));
        const auto dead = dead_topics(model);
        int plots = 0;
        for (int topic = 0; topic < 40; ++topic) {
            if (std::filesystem::exists(artifact::plot(cfg, method, topic))) ++plots;
        }
        require(plots == 40 - static_cast<int>(dead.size()),
                "every live topic needs a plot series");
        require(plots > 0, "no plot series were exported");
    }
    require(std::filesystem::exists(artifact::compare_csv(cfg)),
            "missing comparison table");
    require(std::filesystem::exists(artifact::compare_json(cfg)),
            "missing comparison summary");
    require_runtime(elapsed_since(start), 600.0);
}

void criterion_normalization(const PipelineConfig& cfg) {
    require(!cfg.output_dir.empty(), "full-scale run did not complete");
    int checked = 0;
    for (const Method method : {Method::nmf, Method::lda}) {
        for (int topic = 0; topic < cfg.k; ++topic) {
            const auto path = artifact::plot(cfg, method, topic);
            if (!std::filesystem::exists(path)) continue;
            const std::string content = read_file(path);
            std::istringstream in(content);
            std::string line;
            double max_w = 0.0, sum_w = 0.0;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#' || line[0] == 'r') continue;
                const auto last_comma = line.rfind(',');
                const double w = std::stod(line.substr(last_comma + 1));
                max_w = std::max(max_w, w);
                sum_w += w;
            }
            if (method == Method::nmf) {
                require(max_w == 1.0, "NMF plot series max is not exactly 1");
            } else {
                require(std::abs(sum_w - 1.0) <= 1e-12,
                        "LDA plot series does not sum to 1");
            }
            ++checked;
        }
    }
    require(checked > 0, "no plot series found to check");
}

}  // namespace

int main() {
    test_util::TempDir scratch("acceptance");
    Runner runner;
    PipelineConfig full_cfg;  // filled by the full-scale run

    runner.run("tf-idf equals a dense independent oracle on 25 random corpora",
               [] { criterion_tfidf_oracle(); });
    runner.run("NMF objective is monotone and factors stay non-negative",
               [] { criterion_nmf_monotone(); });
    runner.run("NMF recovers a rank-1 matrix to 1e-6",
               [] { criterion_nmf_rank1(); });
    runner.run("LDA count invariants hold across 200 sweeps",
               [] { criterion_lda_conservation(); });
    runner.run("LDA matches the exact enumerated posterior within 0.02",
               [] { criterion_lda_posterior(); });
    runner.run("LDA separates the two-block corpus for 5 seeds",
               [] { criterion_lda_separation(); });
    runner.run("LexRank equals the dense power-iteration oracle",
               [] { criterion_lexrank_oracle(); });
    runner.run("labels are verbatim snippets and reruns are byte-identical",
               [&] { criterion_label_containment(scratch.path()); });
    runner.run("hit counts fall monotonically with the threshold",
               [&] { criterion_hit_monotonicity(scratch.path()); });
    runner.run("full pipeline at k=40 over 40k snippets inside 10 minutes",
               [&] { criterion_full_scale(scratch.path(), full_cfg); });
    runner.run("plot normalization: NMF peaks at 1, LDA sums to 1",
               [&] { criterion_normalization(full_cfg); });

    if (runner.failed == 0) {
        std::printf("acceptance: all 11 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d of 11 criteria FAILED\n", runner.failed);
    return 1;
}
