#include "topiclab/vocabulary.hpp"

#include <set>

#include <json.hpp>

#include "artifact_json.hpp"
#include "topiclab/error.hpp"

namespace topiclab {

Vocabulary build_vocabulary(const Corpus& corpus, int min_df, double max_df_ratio) {
    if (corpus.empty()) throw Error("cannot build a vocabulary from an empty corpus");
    if (min_df < 1) throw Error("min_df must be >= 1");
    if (!(max_df_ratio > 0.0 && max_df_ratio <= 1.0)) {
        throw Error("max_df_ratio must be in (0, 1]");
    }

    // Snippet tokens are normally already deduplicated, but count distinct
    // terms per document so frequencies stay honest either way.
    std::map<std::string, int> df;
    for (const auto& snippet : corpus.snippets) {
        std::set<std::string> distinct(snippet.tokens.begin(), snippet.tokens.end());
        for (const auto& term : distinct) ++df[term];
    }

    const double n = static_cast<double>(corpus.size());
    Vocabulary vocab;
    for (const auto& [term, freq] : df) {  // map iteration is lexicographic
        if (freq < min_df) continue;
        if (static_cast<double>(freq) > max_df_ratio * n) continue;
        vocab.index.emplace(term, vocab.size());
        vocab.terms.push_back(term);
        vocab.doc_freq.push_back(freq);
    }
    if (vocab.terms.empty()) {
        throw EmptyVocabulary("no term satisfies min_df=" + std::to_string(min_df) +
                              ", max_df_ratio=" + format_double(max_df_ratio));
    }
    return vocab;
}

void save_vocabulary(const Vocabulary& vocab, int n_docs,
                     const std::filesystem::path& path, const ArtifactMeta& meta) {
    nlohmann::json header = detail::meta_json("vocabulary", meta);
    header["n_docs"] = n_docs;
    std::string out = detail::meta_comment(header);
    for (int i = 0; i < vocab.size(); ++i) {
        out += vocab.terms[static_cast<std::size_t>(i)];
        out += '\t';
        out += std::to_string(vocab.doc_freq[static_cast<std::size_t>(i)]);
        out += '\n';
    }
    atomic_write(path, out);
}

LoadedVocabulary load_vocabulary(const std::filesystem::path& path) {
    const std::string content = read_artifact(path);
    LoadedVocabulary loaded;
    std::size_t pos = 0;
    bool saw_meta = false;
    int line_no = 0;
    while (pos < content.size()) {
        auto end = content.find('\n', pos);
        if (end == std::string::npos) end = content.size();
        std::string line(content.data() + pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (line.empty()) continue;
        if (!saw_meta) {
            auto header = detail::parse_meta_comment(line, "vocabulary", path.string());
            loaded.n_docs = header.value("n_docs", 0);
            saw_meta = true;
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw FormatError(path.string() + ": bad vocabulary line " +
                              std::to_string(line_no));
        }
        int df = 0;
        try {
            df = std::stoi(line.substr(tab + 1));
        } catch (const std::exception&) {
            throw FormatError(path.string() + ": bad document frequency at line " +
                              std::to_string(line_no));
        }
        loaded.vocab.index.emplace(line.substr(0, tab), loaded.vocab.size());
        loaded.vocab.terms.push_back(line.substr(0, tab));
        loaded.vocab.doc_freq.push_back(df);
    }
    if (!saw_meta) throw FormatError(path.string() + ": missing vocabulary header");
    return loaded;
}

}  // namespace topiclab
