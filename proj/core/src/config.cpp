#include "topiclab/config.hpp"

#include <json.hpp>

#include "artifact_json.hpp"
#include "topiclab/error.hpp"
#include "topiclab/lexicon.hpp"

namespace topiclab {

namespace {

nlohmann::json params_json(const PipelineConfig& cfg) {
    nlohmann::json j;
    j["descriptor_count"] = cfg.descriptor_count;
    j["drop_duplicate_snippets"] = cfg.drop_duplicate_snippets;
    j["eval_threshold"] = cfg.eval_threshold;
    j["input_format"] = cfg.input_format;
    j["k"] = cfg.k;
    j["label_top_n"] = cfg.label_top_n;
    j["lda_alpha"] = cfg.lda_alpha;
    j["lda_beta"] = cfg.lda_beta;
    j["lda_burn_in"] = cfg.lda_burn_in;
    j["lda_sweeps"] = cfg.lda_sweeps;
    j["lemmatize"] = cfg.lemmatize;
    j["lexrank_damping"] = cfg.lexrank_damping;
    j["lexrank_threshold"] = cfg.lexrank_threshold;
    j["lexrank_tol"] = cfg.lexrank_tol;
    j["max_df_ratio"] = cfg.max_df_ratio;
    j["min_df"] = cfg.min_df;
    j["min_tokens"] = cfg.min_tokens;
    j["nmf_max_iter"] = cfg.nmf_max_iter;
    j["nmf_tol"] = cfg.nmf_tol;
    j["seed"] = cfg.seed;
    j["synth_docs"] = cfg.synth_docs;
    j["validation_size"] = cfg.validation_size;
    return j;
}

void apply_params(PipelineConfig& cfg, const nlohmann::json& j) {
    cfg.descriptor_count = j.value("descriptor_count", cfg.descriptor_count);
    cfg.drop_duplicate_snippets =
        j.value("drop_duplicate_snippets", cfg.drop_duplicate_snippets);
    cfg.eval_threshold = j.value("eval_threshold", cfg.eval_threshold);
    cfg.input_format = j.value("input_format", cfg.input_format);
    cfg.k = j.value("k", cfg.k);
    cfg.label_top_n = j.value("label_top_n", cfg.label_top_n);
    cfg.lda_alpha = j.value("lda_alpha", cfg.lda_alpha);
    cfg.lda_beta = j.value("lda_beta", cfg.lda_beta);
    cfg.lda_burn_in = j.value("lda_burn_in", cfg.lda_burn_in);
    cfg.lda_sweeps = j.value("lda_sweeps", cfg.lda_sweeps);
    cfg.lemmatize = j.value("lemmatize", cfg.lemmatize);
    cfg.lexrank_damping = j.value("lexrank_damping", cfg.lexrank_damping);
    cfg.lexrank_threshold = j.value("lexrank_threshold", cfg.lexrank_threshold);
    cfg.lexrank_tol = j.value("lexrank_tol", cfg.lexrank_tol);
    cfg.max_df_ratio = j.value("max_df_ratio", cfg.max_df_ratio);
    cfg.min_df = j.value("min_df", cfg.min_df);
    cfg.min_tokens = j.value("min_tokens", cfg.min_tokens);
    cfg.nmf_max_iter = j.value("nmf_max_iter", cfg.nmf_max_iter);
    cfg.nmf_tol = j.value("nmf_tol", cfg.nmf_tol);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.synth_docs = j.value("synth_docs", cfg.synth_docs);
    cfg.validation_size = j.value("validation_size", cfg.validation_size);

    cfg.input = j.value("input", cfg.input);
    cfg.output_dir = j.value("output_dir", cfg.output_dir);
    cfg.fit_matrix = j.value("fit_matrix", cfg.fit_matrix);
    cfg.stopwords_file = j.value("stopwords_file", cfg.stopwords_file);
    cfg.domain_stopwords_file =
        j.value("domain_stopwords_file", cfg.domain_stopwords_file);
    cfg.lemma_file = j.value("lemma_file", cfg.lemma_file);
    cfg.pos_file = j.value("pos_file", cfg.pos_file);
}

}  // namespace

PreprocessConfig PipelineConfig::preprocess_config() const {
    PreprocessConfig pc = PreprocessConfig::defaults();
    if (!stopwords_file.empty()) pc.stopwords = load_wordlist(stopwords_file);
    if (!domain_stopwords_file.empty()) {
        pc.domain_stopwords = load_wordlist(domain_stopwords_file);
    }
    if (!lemma_file.empty()) pc.lemma_lexicon = load_lemma_lexicon(lemma_file);
    pc.min_tokens = min_tokens;
    pc.lemmatize = lemmatize;
    pc.drop_duplicate_snippets = drop_duplicate_snippets;
    return pc;
}

PosLexicon PipelineConfig::pos_lexicon() const {
    if (!pos_file.empty()) return load_pos_lexicon(pos_file);
    return default_pos_lexicon();
}

nmf::Options PipelineConfig::nmf_options() const {
    nmf::Options opt;
    opt.max_iter = nmf_max_iter;
    opt.tol = nmf_tol;
    opt.seed = seed;
    return opt;
}

lda::Options PipelineConfig::lda_options() const {
    lda::Options opt;
    opt.alpha = lda_alpha;
    opt.beta = lda_beta;
    opt.sweeps = lda_sweeps;
    opt.burn_in = lda_burn_in;
    opt.seed = seed;
    return opt;
}

LabelOptions PipelineConfig::label_options() const {
    LabelOptions opt;
    opt.descriptor_count = descriptor_count;
    opt.top_n = label_top_n;
    opt.sim_threshold = lexrank_threshold;
    opt.damping = lexrank_damping;
    opt.tol = lexrank_tol;
    return opt;
}

std::string PipelineConfig::canonical_json() const {
    return params_json(*this).dump();
}

std::string PipelineConfig::config_hash() const {
    return to_hex(fnv1a64(canonical_json()));
}

PipelineConfig load_config(const std::filesystem::path& path) {
    nlohmann::json j = detail::parse_json(read_file(path), path.string());
    if (!j.is_object()) throw FormatError(path.string() + ": config must be an object");
    PipelineConfig cfg;
    apply_params(cfg, j.contains("config") ? j["config"] : j);
    return cfg;
}

void save_config(const PipelineConfig& cfg, const std::filesystem::path& path) {
    nlohmann::json j;
    j["config"] = params_json(cfg);
    j["config_hash"] = cfg.config_hash();
    atomic_write(path, j.dump(2) + "\n");
}

}  // namespace topiclab
