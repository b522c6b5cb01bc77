// topiclab: mines topics from short inquiry logs with NMF and LDA, labels
// them with snippet extraction, and compares the two models by hit counts.
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "topiclab/config.hpp"
#include "topiclab/error.hpp"
#include "topiclab/pipeline.hpp"

namespace {

using topiclab::Method;
using topiclab::PipelineConfig;

struct Invocation {
    PipelineConfig cfg;
    Method method = Method::nmf;
    std::function<void(const Invocation&)> run;
};

// Flags override config-file values, which override built-in defaults. The
// config file is applied before CLI11 parses, so binding flags directly onto
// the struct gives exactly that precedence.
PipelineConfig initial_config(int argc, char** argv) {
    std::string config_path;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) {
            config_path = argv[i + 1];
        } else if (arg.rfind("--config=", 0) == 0) {
            config_path = arg.substr(9);
        }
    }
    if (config_path.empty()) return {};
    return topiclab::load_config(config_path);
}

// Every stage accepts the full parameter set, so a stage-by-stage run can
// record exactly the same effective config (and hash) as a pipeline run.
void add_stage_options(CLI::App* sub, PipelineConfig& cfg) {
    sub->add_option("--config", "JSON config file; flags override its values")
        ->expected(1);
    sub->add_option("--output-dir", cfg.output_dir, "artifact directory")
        ->required();
    sub->add_option("--seed", cfg.seed, "seed for every random draw");
    sub->add_option("--k", cfg.k, "number of topics");

    sub->add_option("--input", cfg.input,
                    "raw corpus file (default <output-dir>/raw.txt)");
    sub->add_option("--input-format", cfg.input_format, "lines or jsonl")
        ->check(CLI::IsMember({"lines", "jsonl"}));

    sub->add_option("--min-tokens", cfg.min_tokens,
                    "drop snippets with fewer tokens");
    sub->add_flag("--no-lemmatize{false}", cfg.lemmatize, "disable lemmatization");
    sub->add_flag("--keep-duplicate-snippets{false}", cfg.drop_duplicate_snippets,
                  "keep snippets with repeated token sequences");
    sub->add_option("--stopwords", cfg.stopwords_file,
                    "stopword list replacing the built-in one");
    sub->add_option("--domain-stopwords", cfg.domain_stopwords_file,
                    "domain stopword list replacing the built-in one");
    sub->add_option("--lemma-lexicon", cfg.lemma_file,
                    "token<TAB>lemma file replacing the built-in pins");
    sub->add_option("--pos-lexicon", cfg.pos_file,
                    "lemma<TAB>{N|V|A|O} file replacing the built-in tags");

    sub->add_option("--min-df", cfg.min_df, "minimum document frequency");
    sub->add_option("--max-df-ratio", cfg.max_df_ratio,
                    "maximum document frequency as a fraction of the corpus");

    sub->add_option("--nmf-max-iter", cfg.nmf_max_iter, "NMF update rounds");
    sub->add_option("--nmf-tol", cfg.nmf_tol,
                    "relative objective decrease that stops NMF");
    sub->add_option("--lda-alpha", cfg.lda_alpha,
                    "document-topic prior (<= 0 selects 50/k)");
    sub->add_option("--lda-beta", cfg.lda_beta, "topic-term prior");
    sub->add_option("--lda-sweeps", cfg.lda_sweeps, "Gibbs sweeps");
    sub->add_option("--lda-burn-in", cfg.lda_burn_in,
                    "sweeps discarded before averaging");

    sub->add_option("--descriptors", cfg.descriptor_count,
                    "descriptor terms per topic");
    sub->add_option("--top-n", cfg.label_top_n, "label candidate pool size");
    sub->add_option("--sim-threshold", cfg.lexrank_threshold,
                    "LexRank edge threshold");
    sub->add_option("--damping", cfg.lexrank_damping, "LexRank damping factor");

    sub->add_option("--threshold", cfg.eval_threshold, "hit-count cosine threshold");
    sub->add_option("--validation-size", cfg.validation_size,
                    "validation sample size");
    sub->add_option("--docs", cfg.synth_docs,
                    "number of raw documents generated by synth");
}

void add_method_option(CLI::App* sub, Method& method, bool required) {
    static const std::map<std::string, Method> names{{"nmf", Method::nmf},
                                                     {"lda", Method::lda}};
    auto* opt = sub->add_option("--method", method, "nmf or lda")
                    ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
    if (required) opt->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "topic mining and automatic topic labelling for short inquiry logs"};
    app.require_subcommand(1);

    Invocation inv;
    try {
        inv.cfg = initial_config(argc, argv);
    } catch (const topiclab::Error& e) {
        std::cerr << "[config] error: " << e.what() << "\n";
        return 1;
    }
    PipelineConfig& cfg = inv.cfg;

    const auto stage = [&](const char* name, const char* help, auto fn,
                           bool with_method = false,
                           bool method_required = false) {
        auto* sub = app.add_subcommand(name, help);
        add_stage_options(sub, cfg);
        if (with_method) add_method_option(sub, inv.method, method_required);
        sub->callback([&inv, fn] { inv.run = fn; });
        return sub;
    };

    stage("synth", "generate the seeded synthetic inquiry corpus",
          [](const Invocation& i) { topiclab::stages::synth(i.cfg); });
    stage("preprocess", "cleanse the raw corpus into snippets",
          [](const Invocation& i) { topiclab::stages::preprocess(i.cfg); });
    stage("vectorize", "build the vocabulary, count matrix and tf-idf matrix",
          [](const Invocation& i) { topiclab::stages::vectorize(i.cfg); });
    auto* fit = stage(
        "fit", "factor the matrix into a topic model",
        [](const Invocation& i) { topiclab::stages::fit(i.cfg, i.method); },
        /*with_method=*/true, /*method_required=*/true);
    fit->add_option("--matrix", cfg.fit_matrix,
                    "matrix artifact overriding the method's default input");
    stage(
        "describe", "export ranked descriptors and plot series per topic",
        [](const Invocation& i) { topiclab::stages::describe(i.cfg, i.method); },
        /*with_method=*/true);
    stage(
        "label", "generate one extractive label per topic",
        [](const Invocation& i) { topiclab::stages::label(i.cfg, i.method); },
        /*with_method=*/true);
    stage(
        "evaluate", "count label hits against a validation sample",
        [](const Invocation& i) { topiclab::stages::evaluate(i.cfg, i.method); },
        /*with_method=*/true);
    stage("compare", "emit the side-by-side NMF vs LDA hit report",
          [](const Invocation& i) { topiclab::stages::compare(i.cfg); });
    stage("pipeline", "run every stage for both methods",
          [](const Invocation& i) { topiclab::run_pipeline(i.cfg); });

    std::string stage_name = "cli";
    try {
        app.parse(argc, argv);
        stage_name = app.get_subcommands().front()->get_name();
        inv.run(inv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const topiclab::MissingArtifact& e) {
        std::cerr << "[" << stage_name << "] error: " << e.what() << "\n";
        return 1;
    } catch (const topiclab::IoError& e) {
        std::cerr << "[" << stage_name << "] error: " << e.what() << "\n";
        return 1;
    } catch (const topiclab::Error& e) {
        std::cerr << "[" << stage_name << "] error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
