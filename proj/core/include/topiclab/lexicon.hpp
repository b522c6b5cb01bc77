#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>

namespace topiclab {

enum class PosTag { noun, verb, adjective, other };

/// lemma -> part of speech. Words absent from the lexicon are treated as
/// open-vocabulary domain terms by the labelling stage.
using PosLexicon = std::map<std::string, PosTag>;

/// One word per line; blank lines and lines starting with '#' are skipped.
std::set<std::string> load_wordlist(const std::filesystem::path& path);

/// Lines of "token<TAB>lemma".
std::map<std::string, std::string> load_lemma_lexicon(const std::filesystem::path& path);

/// Lines of "lemma<TAB>{N|V|A|O}".
PosLexicon load_pos_lexicon(const std::filesystem::path& path);

const std::set<std::string>& default_stopwords();
const std::set<std::string>& default_domain_stopwords();
const std::map<std::string, std::string>& default_lemma_lexicon();
const PosLexicon& default_pos_lexicon();

}  // namespace topiclab
