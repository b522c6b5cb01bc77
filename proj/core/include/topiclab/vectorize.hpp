#pragma once

#include <span>
#include <string>
#include <vector>

#include "topiclab/corpus.hpp"
#include "topiclab/doc_term_matrix.hpp"
#include "topiclab/vocabulary.hpp"

namespace topiclab {

/// Raw term occurrences per snippet over the vocabulary's columns. Snippets
/// containing no vocabulary term become empty rows (see empty_rows()).
DocTermMatrix count_matrix(const Corpus& corpus, const Vocabulary& vocab);

/// TF-IDF weighting of a count matrix:
///   idf(t) = ln((1 + n) / (1 + df(t))) + 1,  value(d,t) = count * idf(t),
/// followed by L2 normalization of every nonzero row. df is taken from the
/// count matrix itself; n counts all rows including empty ones.
DocTermMatrix tfidf_matrix(const DocTermMatrix& counts);

/// Frozen idf weights, used to embed label texts and held-out snippets in the
/// training corpus's TF-IDF space.
struct TfidfScheme {
    int n_docs = 0;
    std::vector<double> idf;  // one weight per vocabulary column

    static TfidfScheme from_counts(const DocTermMatrix& counts);
    static TfidfScheme from_doc_freq(std::span<const int> doc_freq, int n_docs);
};

/// Unit-norm sparse vector over vocabulary columns.
struct SparseVector {
    std::vector<int> cols;    // ascending
    std::vector<double> vals;

    bool empty() const { return cols.empty(); }
};

/// Embeds a token list: count occurrences of vocabulary terms, weight by idf,
/// normalize to unit L2 norm. Tokens outside the vocabulary are ignored; the
/// result is empty when no token is known.
SparseVector vectorize_tokens(std::span<const std::string> tokens,
                              const Vocabulary& vocab, const TfidfScheme& scheme);

double dot(const SparseVector& a, const SparseVector& b);
double dot(const SparseVector& a, DocTermMatrix::RowView b);

}  // namespace topiclab
