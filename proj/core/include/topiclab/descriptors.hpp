#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "topiclab/factor_model.hpp"
#include "topiclab/vocabulary.hpp"

namespace topiclab {

/// Ranked descriptor terms of one topic, read from a row of H.
struct TopicDescriptors {
    int topic_id = 0;
    Method method = Method::nmf;
    std::vector<std::pair<std::string, double>> terms;  // weight desc, term asc on ties
};

/// The t heaviest terms of every topic row. Ties are broken lexicographically
/// by term, so the result is independent of column order. t > m truncates to m
/// with a warning.
std::vector<TopicDescriptors> top_terms(const FactorModel& model,
                                        const Vocabulary& vocab, int t = 10);

enum class NormalizeMode { max, sum };

/// max for NMF (series peak at exactly 1), sum for LDA (series sums to 1),
/// following the two plotting conventions.
NormalizeMode default_normalize_mode(Method method);

/// Rescales descriptor weights for plotting without changing their order.
/// Throws AllZeroTopic when the topic has no positive weight.
std::vector<std::pair<std::string, double>> normalize_for_plot(
    const TopicDescriptors& descriptors, NormalizeMode mode);

/// Topics whose H row is entirely zero. NMF can produce these; they are
/// reported rather than dropped so labelling can flag them.
std::vector<int> dead_topics(const FactorModel& model);

/// Pairing aid for side-by-side plots: for every topic of `a`, the topic of
/// `b` whose H row has the largest cosine similarity. Plumbing only; no claim
/// that this reproduces any manual pairing.
struct TopicPair {
    int topic_a = 0;
    int topic_b = 0;
    double cosine = 0.0;
};
std::vector<TopicPair> pair_topics(const FactorModel& a, const FactorModel& b);

/// CSV export of (method, topic_id, rank, term, weight, normalized_weight).
/// Dead topics keep their rows but leave normalized_weight empty.
void save_descriptor_csv(std::span<const TopicDescriptors> descriptors,
                         std::span<const int> dead,
                         const std::filesystem::path& path, const ArtifactMeta& meta);

/// Per-topic plot series: (rank, term, normalized_weight).
void save_plot_csv(const TopicDescriptors& descriptors, NormalizeMode mode,
                   const std::filesystem::path& path, const ArtifactMeta& meta);

}  // namespace topiclab
