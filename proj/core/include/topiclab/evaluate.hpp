#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "topiclab/corpus.hpp"
#include "topiclab/labelling.hpp"
#include "topiclab/vectorize.hpp"

namespace topiclab {

struct HitResult {
    int hits = 0;
    bool unknown_vocabulary = false;  // no label token found in the vocabulary
};

/// Counts validation snippets whose cosine similarity to the label text is at
/// least `threshold`. The label is cleansed with `cfg` and both sides are
/// embedded with the training idf weights. A label with no known token is
/// flagged and counts 0 hits. A 1e-9 slack absorbs rounding at the threshold.
HitResult hit_count(const std::string& label_text, std::span<const Snippet> validation,
                    const Vocabulary& vocab, const TfidfScheme& scheme,
                    const PreprocessConfig& cfg, double threshold);

struct TopicHits {
    int topic_id = 0;
    std::optional<std::string> label;
    int hits = 0;
    bool unknown_vocabulary = false;
};

struct EvalReport {
    Method method = Method::nmf;
    std::vector<TopicHits> topics;
    int validation_size = 0;
    double threshold = 0.5;
    std::string validation_hash;  // fingerprint of the validation sample

    int total_hits() const;
    double mean_hits() const;
};

/// Deterministic seeded sample (without replacement) of `size` snippets,
/// returned in corpus order. The whole corpus comes back when size >= n.
std::vector<Snippet> sample_validation(const Corpus& corpus, int size,
                                       std::uint64_t seed);

std::string validation_fingerprint(std::span<const Snippet> validation);

/// hit_count over every topic label; null labels score 0.
EvalReport evaluate_labels(std::span<const TopicLabel> labels,
                           std::span<const Snippet> validation,
                           const Vocabulary& vocab, const TfidfScheme& scheme,
                           const PreprocessConfig& cfg, double threshold);

struct ComparisonRow {
    int topic_id = 0;
    std::optional<std::string> nmf_label;
    int nmf_hits = 0;
    std::optional<std::string> lda_label;
    int lda_hits = 0;
};

/// Positional NMF-vs-LDA table; no topic alignment is implied.
struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    int nmf_total = 0;
    int lda_total = 0;
    double nmf_mean = 0.0;
    double lda_mean = 0.0;
    double threshold = 0.5;
    int validation_size = 0;
    std::string higher_total;  // "nmf", "lda" or "tie"
};

/// Throws MismatchedValidation when the reports disagree on the validation
/// sample or the threshold.
ComparisonReport compare_models(const EvalReport& nmf_report,
                                const EvalReport& lda_report);

void save_eval_csv(const EvalReport& report, const std::filesystem::path& path,
                   const ArtifactMeta& meta);
EvalReport load_eval_csv(const std::filesystem::path& path);

void save_comparison_csv(const ComparisonReport& report,
                         const std::filesystem::path& path, const ArtifactMeta& meta);
void save_comparison_json(const ComparisonReport& report,
                          const std::filesystem::path& path, const ArtifactMeta& meta);

}  // namespace topiclab
