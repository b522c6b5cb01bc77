#include "topiclab/pipeline.hpp"

#include <algorithm>
#include <string>

#include "topiclab/descriptors.hpp"
#include "topiclab/error.hpp"
#include "topiclab/evaluate.hpp"
#include "topiclab/labelling.hpp"
#include "topiclab/lda.hpp"
#include "topiclab/nmf.hpp"
#include "topiclab/synth.hpp"
#include "topiclab/vectorize.hpp"

namespace topiclab {

namespace artifact {

namespace fs = std::filesystem;

namespace {
fs::path out(const PipelineConfig& cfg) {
    if (cfg.output_dir.empty()) throw Error("output_dir is required");
    return fs::path(cfg.output_dir);
}

std::string tag(Method method) { return std::string(method_name(method)); }
}  // namespace

fs::path raw(const PipelineConfig& cfg) { return out(cfg) / "raw.txt"; }
fs::path corpus(const PipelineConfig& cfg) { return out(cfg) / "corpus.jsonl"; }
fs::path vocabulary(const PipelineConfig& cfg) { return out(cfg) / "vocabulary.tsv"; }
fs::path counts(const PipelineConfig& cfg) { return out(cfg) / "counts.mtx"; }
fs::path tfidf(const PipelineConfig& cfg) { return out(cfg) / "tfidf.mtx"; }
fs::path model(const PipelineConfig& cfg, Method method) {
    return out(cfg) / ("model_" + tag(method) + ".txt");
}
fs::path trace(const PipelineConfig& cfg, Method method) {
    return out(cfg) / ("model_" + tag(method) + "_trace.csv");
}
fs::path descriptors(const PipelineConfig& cfg, Method method) {
    return out(cfg) / ("descriptors_" + tag(method) + ".csv");
}
fs::path plots_dir(const PipelineConfig& cfg) { return out(cfg) / "plots"; }
fs::path plot(const PipelineConfig& cfg, Method method, int topic) {
    std::string name = std::to_string(topic);
    if (name.size() < 2) name.insert(name.begin(), '0');
    return plots_dir(cfg) / (tag(method) + "_topic_" + name + ".csv");
}
fs::path labels(const PipelineConfig& cfg, Method method) {
    return out(cfg) / ("labels_" + tag(method) + ".jsonl");
}
fs::path eval(const PipelineConfig& cfg, Method method) {
    return out(cfg) / ("eval_" + tag(method) + ".csv");
}
fs::path compare_csv(const PipelineConfig& cfg) { return out(cfg) / "compare.csv"; }
fs::path compare_json(const PipelineConfig& cfg) { return out(cfg) / "compare.json"; }
fs::path effective_config(const PipelineConfig& cfg) {
    return out(cfg) / "effective_config.json";
}

}  // namespace artifact

namespace stages {

namespace {

void record_config(const PipelineConfig& cfg) {
    save_config(cfg, artifact::effective_config(cfg));
}

std::filesystem::path input_path(const PipelineConfig& cfg) {
    return cfg.input.empty() ? artifact::raw(cfg) : std::filesystem::path(cfg.input);
}

IngestFormat input_format(const PipelineConfig& cfg) {
    if (cfg.input_format == "lines") return IngestFormat::lines;
    if (cfg.input_format == "jsonl") return IngestFormat::jsonl;
    throw Error("input_format must be \"lines\" or \"jsonl\"");
}

struct VectorSpace {
    Corpus corpus;
    Vocabulary vocab;
    DocTermMatrix counts;
};

VectorSpace load_space(const PipelineConfig& cfg) {
    VectorSpace space;
    space.corpus = load_corpus(artifact::corpus(cfg));
    space.vocab = load_vocabulary(artifact::vocabulary(cfg)).vocab;
    space.counts = load_matrix(artifact::counts(cfg));
    return space;
}

}  // namespace

void synth(const PipelineConfig& cfg) {
    record_config(cfg);
    SynthOptions opt;
    opt.n_docs = cfg.synth_docs;
    opt.n_topics = cfg.k;
    opt.seed = cfg.seed;
    const auto lines = synth_corpus_lines(opt);
    std::string out;
    for (const auto& line : lines) {
        out += line;
        out += '\n';
    }
    atomic_write(artifact::raw(cfg), out);
}

void preprocess(const PipelineConfig& cfg) {
    record_config(cfg);
    const auto path = input_path(cfg);
    if (!std::filesystem::exists(path)) {
        throw MissingArtifact("missing input corpus: " + path.string());
    }
    const RawCorpus raw = ingest(path, input_format(cfg));
    const Corpus corpus = topiclab::preprocess(raw, cfg.preprocess_config());
    save_corpus(corpus, artifact::corpus(cfg), cfg.meta());
}

void vectorize(const PipelineConfig& cfg) {
    record_config(cfg);
    const Corpus corpus = load_corpus(artifact::corpus(cfg));
    const Vocabulary vocab = build_vocabulary(corpus, cfg.min_df, cfg.max_df_ratio);
    const DocTermMatrix counts = count_matrix(corpus, vocab);
    const DocTermMatrix tfidf = tfidf_matrix(counts);
    save_vocabulary(vocab, static_cast<int>(corpus.size()),
                    artifact::vocabulary(cfg), cfg.meta());
    save_matrix(counts, artifact::counts(cfg), cfg.meta());
    save_matrix(tfidf, artifact::tfidf(cfg), cfg.meta());
}

void fit(const PipelineConfig& cfg, Method method) {
    record_config(cfg);
    const std::filesystem::path default_matrix = method == Method::nmf
                                                     ? artifact::tfidf(cfg)
                                                     : artifact::counts(cfg);
    const std::filesystem::path matrix_path =
        cfg.fit_matrix.empty() ? default_matrix : std::filesystem::path(cfg.fit_matrix);
    const DocTermMatrix V = load_matrix(matrix_path);

    FactorModel model;
    if (method == Method::nmf) {
        model = nmf::fit(V, cfg.k, cfg.nmf_options());
        save_trace_csv(model, artifact::trace(cfg, method), cfg.meta());
    } else {
        model = lda::fit(V, cfg.k, cfg.lda_options());
    }
    save_model(model, artifact::model(cfg, method), cfg.meta());
}

void describe(const PipelineConfig& cfg, Method method) {
    record_config(cfg);
    const FactorModel model = load_model(artifact::model(cfg, method));
    const Vocabulary vocab = load_vocabulary(artifact::vocabulary(cfg)).vocab;
    const auto descriptors = top_terms(model, vocab, cfg.descriptor_count);
    const auto dead = dead_topics(model);
    save_descriptor_csv(descriptors, dead, artifact::descriptors(cfg, method),
                        cfg.meta());
    const auto mode = default_normalize_mode(method);
    for (const auto& td : descriptors) {
        const bool is_dead =
            std::find(dead.begin(), dead.end(), td.topic_id) != dead.end();
        if (is_dead) continue;  // dead topics have no plot series
        save_plot_csv(td, mode, artifact::plot(cfg, method, td.topic_id), cfg.meta());
    }
}

void label(const PipelineConfig& cfg, Method method) {
    record_config(cfg);
    const FactorModel model = load_model(artifact::model(cfg, method));
    const VectorSpace space = load_space(cfg);
    const DocTermMatrix tfidf = load_matrix(artifact::tfidf(cfg));
    const auto labels = generate_labels(model, space.corpus, space.vocab, tfidf,
                                        cfg.pos_lexicon(), cfg.label_options());
    save_label_report(labels, artifact::labels(cfg, method), cfg.meta());
}

void evaluate(const PipelineConfig& cfg, Method method) {
    record_config(cfg);
    const VectorSpace space = load_space(cfg);
    const auto labels = load_label_report(artifact::labels(cfg, method));
    const TfidfScheme scheme = TfidfScheme::from_counts(space.counts);
    const auto validation =
        sample_validation(space.corpus, cfg.validation_size, cfg.seed);
    const EvalReport report =
        evaluate_labels(labels, validation, space.vocab, scheme,
                        cfg.preprocess_config(), cfg.eval_threshold);
    save_eval_csv(report, artifact::eval(cfg, method), cfg.meta());
}

void compare(const PipelineConfig& cfg) {
    record_config(cfg);
    const EvalReport nmf_report = load_eval_csv(artifact::eval(cfg, Method::nmf));
    const EvalReport lda_report = load_eval_csv(artifact::eval(cfg, Method::lda));
    const ComparisonReport report = compare_models(nmf_report, lda_report);
    save_comparison_csv(report, artifact::compare_csv(cfg), cfg.meta());
    save_comparison_json(report, artifact::compare_json(cfg), cfg.meta());
}

}  // namespace stages

void run_pipeline(const PipelineConfig& cfg) {
    stages::preprocess(cfg);
    stages::vectorize(cfg);
    for (const Method method : {Method::nmf, Method::lda}) {
        stages::fit(cfg, method);
        stages::describe(cfg, method);
        stages::label(cfg, method);
        stages::evaluate(cfg, method);
    }
    stages::compare(cfg);
}

}  // namespace topiclab
