#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "topiclab/corpus.hpp"
#include "topiclab/io.hpp"

namespace topiclab {

/// Term <-> column mapping with document frequencies. Terms are stored in
/// lexicographic order, so column order is deterministic.
struct Vocabulary {
    std::vector<std::string> terms;
    std::vector<int> doc_freq;             // aligned with terms
    std::map<std::string, int> index;      // exact inverse of terms

    int size() const { return static_cast<int>(terms.size()); }

    /// Column of a term, or -1 when absent.
    int find(const std::string& term) const {
        auto it = index.find(term);
        return it == index.end() ? -1 : it->second;
    }
};

/// Keeps a term iff min_df <= doc_freq <= max_df_ratio * corpus size.
/// Throws EmptyVocabulary when nothing survives.
Vocabulary build_vocabulary(const Corpus& corpus, int min_df, double max_df_ratio);

/// TSV serialization: meta comment, then "term<TAB>doc_freq" in column order.
void save_vocabulary(const Vocabulary& vocab, int n_docs,
                     const std::filesystem::path& path, const ArtifactMeta& meta);

struct LoadedVocabulary {
    Vocabulary vocab;
    int n_docs = 0;  // corpus size recorded at build time
};
LoadedVocabulary load_vocabulary(const std::filesystem::path& path);

}  // namespace topiclab
