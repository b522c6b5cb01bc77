#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "topiclab/corpus.hpp"
#include "topiclab/io.hpp"
#include "topiclab/labelling.hpp"
#include "topiclab/lda.hpp"
#include "topiclab/nmf.hpp"

namespace topiclab {

/// Every knob of the end-to-end pipeline. The numeric/boolean parameters and
/// the seed form the canonical parameter record whose hash is stamped into
/// every artifact; filesystem paths are invocation state and stay out of the
/// hash so reruns in different directories produce byte-identical artifacts.
struct PipelineConfig {
    // paths (not hashed)
    std::string input;             // raw corpus; defaults to <output_dir>/raw.txt
    std::string output_dir;
    std::string fit_matrix;        // optional override of the matrix given to fit
    std::string stopwords_file;    // optional replacements for the built-in lists
    std::string domain_stopwords_file;
    std::string lemma_file;
    std::string pos_file;

    // parameters (hashed)
    std::string input_format = "lines";  // "lines" or "jsonl"
    int min_tokens = 2;
    bool lemmatize = true;
    bool drop_duplicate_snippets = true;
    int min_df = 5;
    double max_df_ratio = 0.95;
    int k = 40;
    std::uint64_t seed = 0;
    int nmf_max_iter = 200;
    double nmf_tol = 1e-4;
    double lda_alpha = 0.0;  // <= 0 selects 50/k
    double lda_beta = 0.01;
    int lda_sweeps = 500;
    int lda_burn_in = 100;
    int descriptor_count = 10;
    int label_top_n = 20;
    double lexrank_threshold = 0.1;
    double lexrank_damping = 0.85;
    double lexrank_tol = 1e-6;
    double eval_threshold = 0.5;
    int validation_size = 1000;
    int synth_docs = 2000;

    /// Cleansing settings, with lexicon files loaded when configured.
    PreprocessConfig preprocess_config() const;
    PosLexicon pos_lexicon() const;

    nmf::Options nmf_options() const;
    lda::Options lda_options() const;
    LabelOptions label_options() const;

    /// Deterministic JSON form of the hashed parameters.
    std::string canonical_json() const;
    /// Hex FNV-1a digest of canonical_json().
    std::string config_hash() const;
    ArtifactMeta meta() const { return {config_hash(), seed}; }
};

/// Reads a JSON config file. Accepts the flat parameter record (as written by
/// save_config) or {"config": {...}}; path fields may be included.
PipelineConfig load_config(const std::filesystem::path& path);

/// Records the canonical parameter record plus its hash.
void save_config(const PipelineConfig& cfg, const std::filesystem::path& path);

}  // namespace topiclab
