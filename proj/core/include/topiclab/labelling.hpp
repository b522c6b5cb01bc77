#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "topiclab/corpus.hpp"
#include "topiclab/descriptors.hpp"
#include "topiclab/doc_term_matrix.hpp"
#include "topiclab/lexicon.hpp"
#include "topiclab/vocabulary.hpp"

namespace topiclab {

/// A snippet competing to become a topic's label.
struct LabelCandidate {
    int snippet_id = 0;
    int row = 0;  // row of the snippet in the tf-idf matrix
    std::string text;
    double cosine_score = 0.0;
    double lexrank_score = 0.0;
};

/// The label generation result for one topic. `label` is always the verbatim
/// source_text of one of top_snippets; it is empty for dead topics and other
/// per-topic failures, which are explained in `notes`.
struct TopicLabel {
    int topic_id = 0;
    Method method = Method::nmf;
    std::vector<std::string> descriptors;
    std::vector<std::string> noun_descriptors;
    std::vector<LabelCandidate> top_snippets;  // at most 3 retained candidates
    std::optional<std::string> label;
    std::vector<std::string> notes;
};

struct LabelOptions {
    int descriptor_count = 10;
    int top_n = 20;              // candidate pool ranked by LexRank
    double sim_threshold = 0.1;  // edge cutoff in the candidate graph
    double damping = 0.85;
    double tol = 1e-6;           // L1 convergence threshold of power iteration
};

/// Step 1: keep descriptors tagged N. Words absent from the lexicon survive,
/// so open-vocabulary domain terms ("hdmi") are not lost. Throws
/// EmptyDescriptorSet when nothing survives.
std::vector<std::string> noun_filter(const TopicDescriptors& descriptors,
                                     const PosLexicon& pos_lexicon);

/// Step 2: cosine between the topic query and every snippet. The query is the
/// noun descriptors weighted by their H weights, L2-normalized over the
/// vocabulary. Returns the top_n scorers (ties toward smaller snippet id);
/// empty when the query has no mass in the vocabulary.
std::vector<LabelCandidate> score_snippets(
    std::span<const std::pair<std::string, double>> weighted_nouns,
    const DocTermMatrix& tfidf, const Vocabulary& vocab, const Corpus& corpus,
    int top_n);

/// Step 3: LexRank over the candidates. Edges are cosine similarities
/// binarized at sim_threshold (no self loops), rows are normalized to a
/// stochastic matrix with isolated candidates jumping uniformly, and the
/// scores are the stationary distribution of
///   damping * M + (1 - damping) * uniform
/// found by power iteration to an L1 change below tol. Scores sum to 1.
std::vector<double> lexrank(std::span<const LabelCandidate> candidates,
                            const DocTermMatrix& tfidf, double sim_threshold,
                            double damping, double tol);

/// Step 4: the three best candidates by LexRank score; ties fall back to
/// cosine score, then snippet id. Returns fewer when fewer exist.
std::vector<LabelCandidate> select_top_sentences(std::vector<LabelCandidate> scored);

/// Step 5: among the retained candidates, picks the one with the largest sum
/// of cosine similarities to the others (ties toward the smaller snippet id)
/// and returns it as the topic label.
TopicLabel choose_label(const std::vector<LabelCandidate>& retained,
                        const DocTermMatrix& tfidf);

/// Runs steps 1-5 for every topic. Per-topic failures never abort the run;
/// they produce a null label with a diagnostic note.
std::vector<TopicLabel> generate_labels(const FactorModel& model, const Corpus& corpus,
                                        const Vocabulary& vocab,
                                        const DocTermMatrix& tfidf,
                                        const PosLexicon& pos_lexicon,
                                        const LabelOptions& opt = {});

/// JSONL report: one record per topic with descriptors, noun descriptors, the
/// retained snippets and the chosen label.
void save_label_report(std::span<const TopicLabel> labels,
                       const std::filesystem::path& path, const ArtifactMeta& meta);
std::vector<TopicLabel> load_label_report(const std::filesystem::path& path);

}  // namespace topiclab
