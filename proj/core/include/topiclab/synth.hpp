#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace topiclab {

/// Parameters of the synthetic inquiry-log generator. Documents are assigned
/// to `n_topics` contiguous blocks (document d belongs to block
/// d * n_topics / n_docs) and draw their content words only from that block's
/// vocabulary, plus a few filler words that the default preprocessing removes.
struct SynthOptions {
    int n_docs = 2000;
    int n_topics = 8;
    std::uint64_t seed = 0;
};

/// The disjoint per-topic vocabularies behind the generator, in block order.
/// Every word is a fixed point of the default preprocessing, so the blocks
/// can be compared against model output directly.
const std::vector<std::vector<std::string>>& synth_topic_blocks();

int max_synth_topics();

/// Deterministic synthetic corpus, one raw document per line.
std::vector<std::string> synth_corpus_lines(const SynthOptions& opt);

}  // namespace topiclab
