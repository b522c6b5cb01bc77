#pragma once

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "topiclab/corpus.hpp"

namespace test_util {

/// Unique scratch directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static int counter = 0;
        dir_ = std::filesystem::temp_directory_path() /
               ("topiclab_" + tag + "_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        std::filesystem::create_directories(dir_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(dir_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return dir_; }
    std::filesystem::path file(const std::string& name) const { return dir_ / name; }

private:
    std::filesystem::path dir_;
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

/// Corpus built directly from token lists; ids are ordinals and source_text
/// is the tokens joined by spaces.
inline topiclab::Corpus make_corpus(
    const std::vector<std::vector<std::string>>& docs) {
    topiclab::Corpus corpus;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        topiclab::Snippet s;
        s.id = static_cast<int>(i);
        s.tokens = docs[i];
        for (std::size_t j = 0; j < docs[i].size(); ++j) {
            if (j > 0) s.source_text += ' ';
            s.source_text += docs[i][j];
        }
        corpus.snippets.push_back(std::move(s));
    }
    return corpus;
}

}  // namespace test_util
