#include "topiclab/corpus.hpp"

#include <fstream>
#include <utility>

#include <json.hpp>

#include "artifact_json.hpp"
#include "topiclab/error.hpp"
#include "topiclab/lexicon.hpp"

namespace topiclab {

namespace {

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool valid_token(const std::string& t) {
    if (t.empty() || !(t[0] >= 'a' && t[0] <= 'z')) return false;
    for (char c : t) {
        if (!((c >= 'a' && c <= 'z') || is_digit(c))) return false;
    }
    return true;
}

// One pass over the suffix rule table; returns the token unchanged when no
// rule fires. Rules are tried in order and the first applicable one wins.
std::string apply_suffix_rule(const std::string& t) {
    const auto ends = [&](std::string_view suffix) {
        return t.size() >= suffix.size() &&
               t.compare(t.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends("ies") && t.size() >= 5) return t.substr(0, t.size() - 3) + "y";
    if (ends("sses")) return t.substr(0, t.size() - 2);
    if (ends("es")) {
        // sibilant-style endings lose "es"; everything else keeps the final e
        for (std::string_view suffix : {"ches", "shes", "xes", "zes", "oes"}) {
            if (ends(suffix)) return t.substr(0, t.size() - 2);
        }
        if (t.size() >= 4) return t.substr(0, t.size() - 1);
        return t;
    }
    if (ends("s") && !ends("ss") && t.size() > 3) return t.substr(0, t.size() - 1);
    if (ends("ing") && t.size() >= 6) return t.substr(0, t.size() - 3);
    if (ends("ed") && t.size() >= 5) return t.substr(0, t.size() - 2);
    return t;
}

void validate(const PreprocessConfig& cfg) {
    if (cfg.min_tokens < 1) throw Error("min_tokens must be >= 1");
    if (cfg.stopwords.count("") || cfg.domain_stopwords.count("")) {
        throw Error("stopword lists must not contain the empty string");
    }
}

}  // namespace

PreprocessConfig PreprocessConfig::defaults() {
    PreprocessConfig cfg;
    cfg.stopwords = default_stopwords();
    cfg.domain_stopwords = default_domain_stopwords();
    cfg.lemma_lexicon = default_lemma_lexicon();
    return cfg;
}

RawCorpus ingest(const std::filesystem::path& path, IngestFormat format) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path.string());

    RawCorpus corpus;
    std::string line;
    int line_no = 0;
    int next_id = 0;
    std::set<int> used_ids;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank(line)) continue;

        if (format == IngestFormat::lines) {
            corpus.docs.push_back({next_id++, line});
            continue;
        }

        nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.is_object() || !rec.contains("text") ||
            !rec["text"].is_string()) {
            throw FormatError("malformed jsonl record at line " +
                              std::to_string(line_no) + " of " + path.string());
        }
        int id = next_id;
        if (rec.contains("id")) {
            if (!rec["id"].is_number_integer() || rec["id"].get<long long>() < 0) {
                throw FormatError("invalid id at line " + std::to_string(line_no) +
                                  " of " + path.string());
            }
            id = rec["id"].get<int>();
        }
        if (!used_ids.insert(id).second) {
            throw FormatError("duplicate id " + std::to_string(id) + " at line " +
                              std::to_string(line_no) + " of " + path.string());
        }
        corpus.docs.push_back({id, rec["text"].get<std::string>()});
        next_id = std::max(next_id, id + 1);
    }
    if (in.bad()) throw IoError("read failed: " + path.string());
    return corpus;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    bool has_alpha = false;
    const auto flush = [&] {
        if (!cur.empty() && has_alpha) tokens.push_back(cur);
        cur.clear();
        has_alpha = false;
    };
    for (char raw : text) {
        const auto c = static_cast<unsigned char>(raw);
        if (c >= 'A' && c <= 'Z') {
            cur += static_cast<char>(c - 'A' + 'a');
            has_alpha = true;
        } else if (c >= 'a' && c <= 'z') {
            cur += static_cast<char>(c);
            has_alpha = true;
        } else if (c >= '0' && c <= '9') {
            cur += static_cast<char>(c);
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

std::string lemmatize(const std::string& token,
                      const std::map<std::string, std::string>& lexicon) {
    std::string cur = token;
    for (;;) {
        if (auto it = lexicon.find(cur); it != lexicon.end()) return it->second;
        std::string next = apply_suffix_rule(cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

std::vector<std::string> preprocess_tokens(std::string_view text,
                                           const PreprocessConfig& cfg) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (auto& token : tokenize(text)) {
        if (!valid_token(token)) continue;
        if (cfg.stopwords.count(token) || cfg.domain_stopwords.count(token)) continue;
        std::string lemma =
            cfg.lemmatize ? lemmatize(token, cfg.lemma_lexicon) : std::move(token);
        if (lemma.empty()) continue;
        // a lemma can land on a stopword ("mondays" -> "monday"); filter again
        // so no snippet ever carries a configured stopword
        if (cfg.stopwords.count(lemma) || cfg.domain_stopwords.count(lemma)) continue;
        if (seen.insert(lemma).second) out.push_back(std::move(lemma));
    }
    return out;
}

Corpus preprocess(const RawCorpus& raw, const PreprocessConfig& cfg) {
    validate(cfg);
    Corpus corpus;
    std::set<std::vector<std::string>> seen_sequences;
    for (const auto& doc : raw.docs) {
        auto tokens = preprocess_tokens(doc.text, cfg);
        if (std::ssize(tokens) < cfg.min_tokens) continue;
        if (cfg.drop_duplicate_snippets && !seen_sequences.insert(tokens).second) {
            continue;
        }
        corpus.snippets.push_back({doc.id, std::move(tokens), doc.text});
    }
    return corpus;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path,
                 const ArtifactMeta& meta) {
    std::string out = detail::meta_line("corpus", meta);
    for (const auto& snippet : corpus.snippets) {
        nlohmann::json j;
        j["id"] = snippet.id;
        j["source_text"] = snippet.source_text;
        j["tokens"] = snippet.tokens;
        out += j.dump();
        out += '\n';
    }
    atomic_write(path, out);
}

Corpus load_corpus(const std::filesystem::path& path) {
    const std::string content = read_artifact(path);
    Corpus corpus;
    std::size_t pos = 0;
    bool saw_meta = false;
    int line_no = 0;
    while (pos < content.size()) {
        auto end = content.find('\n', pos);
        if (end == std::string::npos) end = content.size();
        std::string_view line(content.data() + pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (is_blank(line)) continue;
        if (!saw_meta) {
            detail::parse_meta_line(line, "corpus", path.string());
            saw_meta = true;
            continue;
        }
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("id") ||
            !j.contains("tokens") || !j.contains("source_text")) {
            throw FormatError("malformed corpus record at line " +
                              std::to_string(line_no) + " of " + path.string());
        }
        Snippet s;
        s.id = j["id"].get<int>();
        s.tokens = j["tokens"].get<std::vector<std::string>>();
        s.source_text = j["source_text"].get<std::string>();
        corpus.snippets.push_back(std::move(s));
    }
    if (!saw_meta) throw FormatError(path.string() + ": missing corpus meta header");
    return corpus;
}

}  // namespace topiclab
