#include "topiclab/vectorize.hpp"

#include <cmath>
#include <map>

#include "topiclab/error.hpp"

namespace topiclab {

DocTermMatrix count_matrix(const Corpus& corpus, const Vocabulary& vocab) {
    std::vector<DocTermMatrix::Entry> entries;
    const int n = static_cast<int>(corpus.size());
    for (int d = 0; d < n; ++d) {
        std::map<int, int> counts;
        for (const auto& token : corpus.snippets[static_cast<std::size_t>(d)].tokens) {
            const int col = vocab.find(token);
            if (col >= 0) ++counts[col];
        }
        for (const auto& [col, count] : counts) {
            entries.push_back({d, col, static_cast<double>(count)});
        }
    }
    return DocTermMatrix(n, vocab.size(), Weighting::count, std::move(entries));
}

DocTermMatrix tfidf_matrix(const DocTermMatrix& counts) {
    if (counts.weighting() != Weighting::count) {
        throw WeightingError("tfidf_matrix expects a count-weighted matrix");
    }
    const auto scheme = TfidfScheme::from_counts(counts);

    std::vector<DocTermMatrix::Entry> entries;
    entries.reserve(counts.nnz());
    for (int d = 0; d < counts.rows(); ++d) {
        const auto view = counts.row(d);
        double sq = 0.0;
        for (std::size_t i = 0; i < view.size(); ++i) {
            const double v = view.vals[i] * scheme.idf[static_cast<std::size_t>(view.cols[i])];
            sq += v * v;
        }
        if (sq == 0.0) continue;  // empty rows stay empty
        const double inv_norm = 1.0 / std::sqrt(sq);
        for (std::size_t i = 0; i < view.size(); ++i) {
            const double v = view.vals[i] * scheme.idf[static_cast<std::size_t>(view.cols[i])];
            entries.push_back({d, view.cols[i], v * inv_norm});
        }
    }
    return DocTermMatrix(counts.rows(), counts.cols(), Weighting::tfidf,
                         std::move(entries));
}

TfidfScheme TfidfScheme::from_counts(const DocTermMatrix& counts) {
    return from_doc_freq(counts.column_doc_freq(), counts.rows());
}

TfidfScheme TfidfScheme::from_doc_freq(std::span<const int> doc_freq, int n_docs) {
    TfidfScheme scheme;
    scheme.n_docs = n_docs;
    scheme.idf.reserve(doc_freq.size());
    for (int df : doc_freq) {
        scheme.idf.push_back(
            std::log((1.0 + n_docs) / (1.0 + df)) + 1.0);
    }
    return scheme;
}

SparseVector vectorize_tokens(std::span<const std::string> tokens,
                              const Vocabulary& vocab, const TfidfScheme& scheme) {
    if (static_cast<int>(scheme.idf.size()) != vocab.size()) {
        throw DimensionError("tf-idf scheme does not match the vocabulary");
    }
    std::map<int, int> counts;
    for (const auto& token : tokens) {
        const int col = vocab.find(token);
        if (col >= 0) ++counts[col];
    }
    SparseVector vec;
    double sq = 0.0;
    for (const auto& [col, count] : counts) {
        const double v = count * scheme.idf[static_cast<std::size_t>(col)];
        vec.cols.push_back(col);
        vec.vals.push_back(v);
        sq += v * v;
    }
    if (sq > 0.0) {
        const double inv_norm = 1.0 / std::sqrt(sq);
        for (double& v : vec.vals) v *= inv_norm;
    }
    return vec;
}

double dot(const SparseVector& a, const SparseVector& b) {
    double sum = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.cols.size() && j < b.cols.size()) {
        if (a.cols[i] == b.cols[j]) {
            sum += a.vals[i] * b.vals[j];
            ++i;
            ++j;
        } else if (a.cols[i] < b.cols[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return sum;
}

double dot(const SparseVector& a, DocTermMatrix::RowView b) {
    double sum = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.cols.size() && j < b.size()) {
        if (a.cols[i] == b.cols[j]) {
            sum += a.vals[i] * b.vals[j];
            ++i;
            ++j;
        } else if (a.cols[i] < b.cols[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return sum;
}

}  // namespace topiclab
