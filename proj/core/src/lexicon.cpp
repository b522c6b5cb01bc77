#include "topiclab/lexicon.hpp"

#include <fstream>

#include "topiclab/error.hpp"

namespace topiclab {

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

bool skip_line(const std::string& line) {
    return line.empty() || line[0] == '#';
}

std::pair<std::string, std::string> split_tab(const std::string& line, int line_no,
                                              const std::filesystem::path& path) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
        throw FormatError("expected \"key<TAB>value\" at line " +
                          std::to_string(line_no) + " of " + path.string());
    }
    return {line.substr(0, tab), line.substr(tab + 1)};
}

}  // namespace

std::set<std::string> load_wordlist(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open wordlist: " + path.string());
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_cr(std::move(line));
        if (!skip_line(line)) words.insert(line);
    }
    return words;
}

std::map<std::string, std::string> load_lemma_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open lemma lexicon: " + path.string());
    std::map<std::string, std::string> lexicon;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(std::move(line));
        if (skip_line(line)) continue;
        auto [token, lemma] = split_tab(line, line_no, path);
        lexicon[token] = lemma;
    }
    return lexicon;
}

PosLexicon load_pos_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open POS lexicon: " + path.string());
    PosLexicon lexicon;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(std::move(line));
        if (skip_line(line)) continue;
        auto [lemma, tag] = split_tab(line, line_no, path);
        if (tag == "N") {
            lexicon[lemma] = PosTag::noun;
        } else if (tag == "V") {
            lexicon[lemma] = PosTag::verb;
        } else if (tag == "A") {
            lexicon[lemma] = PosTag::adjective;
        } else if (tag == "O") {
            lexicon[lemma] = PosTag::other;
        } else {
            throw FormatError("unknown POS tag \"" + tag + "\" at line " +
                              std::to_string(line_no) + " of " + path.string());
        }
    }
    return lexicon;
}

const std::set<std::string>& default_stopwords() {
    // Function words plus single letters; single letters mop up the debris of
    // contraction splitting ("won't" -> "won", "t").
    static const std::set<std::string> words = [] {
        std::set<std::string> w = {
            "a",       "about",   "above",    "after",   "again",   "against",
            "all",     "am",      "an",       "and",     "any",     "are",
            "as",      "at",      "be",       "because", "been",    "before",
            "being",   "below",   "between",  "both",    "but",     "by",
            "can",     "cannot",  "could",    "did",     "do",      "does",
            "doing",   "down",    "during",   "each",    "few",     "for",
            "from",    "further", "had",      "has",     "have",    "having",
            "he",      "her",     "here",     "hers",    "herself", "him",
            "himself", "his",     "how",      "i",       "if",      "in",
            "into",    "is",      "it",       "its",     "itself",  "just",
            "me",      "more",    "most",     "my",      "myself",  "no",
            "nor",     "not",     "now",      "of",      "off",     "on",
            "once",    "only",    "or",       "other",   "our",     "ours",
            "ourselves", "out",   "over",     "own",     "same",    "she",
            "should",  "so",      "some",     "such",    "than",    "that",
            "the",     "their",   "theirs",   "them",    "themselves", "then",
            "there",   "these",   "they",     "this",    "those",   "through",
            "to",      "too",     "under",    "until",   "up",      "very",
            "was",     "we",      "were",     "what",    "when",    "where",
            "which",   "while",   "who",      "whom",    "why",     "will",
            "with",    "would",   "you",      "your",    "yours",   "yourself",
            "yourselves",
        };
        for (char c = 'a'; c <= 'z'; ++c) w.insert(std::string(1, c));
        return w;
    }();
    return words;
}

const std::set<std::string>& default_domain_stopwords() {
    // Words specific to the customer-service channel itself, plus weekday
    // names; none of them carries topical signal in inquiry logs.
    static const std::set<std::string> words = {
        "call",     "called",   "caller",   "callers",  "calling",  "calls",
        "customer", "customers", "hello",   "hi",       "please",   "said",
        "say",      "says",     "service",  "services", "thank",    "thanks",
        "monday",   "tuesday",  "wednesday", "thursday", "friday",
        "saturday", "sunday",
    };
    return words;
}

const std::map<std::string, std::string>& default_lemma_lexicon() {
    // Pins for words the suffix rules would mangle, plus a few irregular
    // forms common in inquiry logs.
    static const std::map<std::string, std::string> lexicon = {
        {"bought", "buy"},
        {"broke", "break"},
        {"broken", "break"},
        {"children", "child"},
        {"cycling", "cycling"},
        {"goes", "go"},
        {"kept", "keep"},
        {"lost", "lose"},
        {"pending", "pending"},
        {"sent", "send"},
        {"setting", "setting"},
        {"settings", "setting"},
        {"shipping", "shipping"},
        {"status", "status"},
        {"went", "go"},
    };
    return lexicon;
}

const PosLexicon& default_pos_lexicon() {
    // Closed-class verbs and adjectives seen in inquiry logs; nouns are mostly
    // left implicit because unknown words pass the noun filter unchanged.
    static const PosLexicon lexicon = [] {
        PosLexicon lex;
        const char* verbs[] = {
            "adjust",  "appear",  "ask",     "attach",  "break",  "buy",
            "cancel",  "check",   "choose",  "come",    "connect", "create",
            "cut",     "drop",    "fix",     "flash",   "get",     "give",
            "go",      "happen",  "hear",    "inform",  "inquire", "keep",
            "know",    "learn",   "leave",   "locate",  "lose",    "make",
            "need",    "open",    "pop",     "promise", "provide", "put",
            "recreate", "reject", "replace", "report",  "respond", "review",
            "see",     "send",    "show",    "start",   "stop",    "take",
            "talk",    "tell",    "told",    "try",     "turn",    "verify",
            "want",    "work",
        };
        const char* adjectives[] = {
            "bad",   "big",    "black",  "blue",   "bright", "broken",
            "dark",  "darker", "dead",   "defective", "dim", "good",
            "gray",  "green",  "half",   "high",   "live",   "long",
            "longer", "loud",  "low",    "new",    "old",    "quick",
            "red",   "slow",   "small",  "smart",  "white",  "wireless",
            "wrong",
        };
        const char* nouns[] = {
            "audio",  "bar",     "bottom", "box",    "button", "chat",
            "control", "cord",   "day",    "device", "hdmi",   "issue",
            "line",   "month",   "picture", "port",  "power",  "problem",
            "remote", "screen",  "side",   "software", "sound", "status",
            "ticket", "time",    "top",    "tv",     "unit",   "update",
            "week",   "year",
        };
        for (auto* w : verbs) lex[w] = PosTag::verb;
        for (auto* w : adjectives) lex[w] = PosTag::adjective;
        for (auto* w : nouns) lex[w] = PosTag::noun;
        return lex;
    }();
    return lexicon;
}

}  // namespace topiclab
