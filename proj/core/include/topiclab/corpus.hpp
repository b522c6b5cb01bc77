#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "topiclab/io.hpp"

namespace topiclab {

/// One raw inquiry line as ingested, before any cleansing.
struct RawDocument {
    int id = 0;
    std::string text;
};

struct RawCorpus {
    std::vector<RawDocument> docs;

    bool empty() const { return docs.empty(); }
    std::size_t size() const { return docs.size(); }
};

/// One cleansed inquiry. `tokens` holds lowercase lemmas with within-snippet
/// duplicates removed; `source_text` keeps the original line for label display.
struct Snippet {
    int id = 0;
    std::vector<std::string> tokens;
    std::string source_text;
};

struct Corpus {
    std::vector<Snippet> snippets;

    bool empty() const { return snippets.empty(); }
    std::size_t size() const { return snippets.size(); }
};

struct PreprocessConfig {
    std::set<std::string> stopwords;
    std::set<std::string> domain_stopwords;
    std::map<std::string, std::string> lemma_lexicon;
    int min_tokens = 2;
    bool lemmatize = true;
    bool drop_duplicate_snippets = true;

    /// Built-in English stopwords, inquiry-log domain words and lemma pins.
    static PreprocessConfig defaults();
};

enum class IngestFormat { lines, jsonl };

/// Reads raw documents from a UTF-8 text file: one document per nonblank line,
/// or one JSON object per line with a required "text" and an optional "id".
/// Ids default to the document's input ordinal.
RawCorpus ingest(const std::filesystem::path& path, IngestFormat format);

/// Lowercases and splits on runs of non-alphanumeric bytes; ASCII only, so the
/// result is locale independent. Tokens consisting solely of digits are dropped.
std::vector<std::string> tokenize(std::string_view text);

/// Dictionary-first lemmatizer. Tokens absent from the lexicon fall through to
/// an ordered suffix rule table (ies->y, sses->ss, es, s, ing, ed) that is
/// applied until no rule fires, so the result is a fixed point:
/// lemmatize(lemmatize(t)) == lemmatize(t).
std::string lemmatize(const std::string& token,
                      const std::map<std::string, std::string>& lexicon);

/// The per-document cleansing pipeline without the min_tokens cut: tokenize,
/// keep only [a-z][a-z0-9]* tokens, drop stopwords and domain words, lemmatize
/// (dropping lemmas that land on a stopword), drop repeated tokens keeping the
/// first occurrence.
std::vector<std::string> preprocess_tokens(std::string_view text,
                                           const PreprocessConfig& cfg);

/// Applies the cleansing pipeline to every document, drops documents shorter
/// than cfg.min_tokens, and (optionally) drops snippets whose token sequence
/// repeats an earlier snippet's. Output order follows input order and the
/// result is a pure function of (raw, cfg).
Corpus preprocess(const RawCorpus& raw, const PreprocessConfig& cfg);

/// JSONL serialization: a meta header line followed by one
/// {"id":..,"source_text":..,"tokens":[..]} record per snippet.
void save_corpus(const Corpus& corpus, const std::filesystem::path& path,
                 const ArtifactMeta& meta);
Corpus load_corpus(const std::filesystem::path& path);

}  // namespace topiclab
