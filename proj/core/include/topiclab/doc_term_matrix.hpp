#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "topiclab/io.hpp"

namespace topiclab {

enum class Weighting { count, tfidf };

/// Sparse document-term matrix in compressed-row form. Count matrices hold
/// positive integers; tfidf matrices hold positive reals with every nonzero
/// row scaled to unit L2 norm. Empty rows are legal and preserved so document
/// ids stay aligned across the pipeline.
class DocTermMatrix {
public:
    struct Entry {
        int row = 0;
        int col = 0;
        double value = 0.0;
    };

    DocTermMatrix() = default;

    /// Builds from coordinate entries. Entries are sorted internally; indices
    /// out of range, duplicate coordinates, non-positive values, and
    /// non-integer values in count matrices are rejected.
    DocTermMatrix(int rows, int cols, Weighting weighting, std::vector<Entry> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Weighting weighting() const { return weighting_; }
    std::size_t nnz() const { return col_.size(); }

    struct RowView {
        std::span<const int> cols;
        std::span<const double> vals;
        std::size_t size() const { return cols.size(); }
        bool empty() const { return cols.empty(); }
    };
    RowView row(int r) const;

    /// Indices of rows with no stored entry.
    std::vector<int> empty_rows() const;

    /// Number of rows with a nonzero in each column.
    std::vector<int> column_doc_freq() const;

    double row_norm(int r) const;
    double squared_frobenius() const;

    std::vector<Entry> entries() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    Weighting weighting_ = Weighting::count;
    std::vector<std::size_t> row_start_;  // rows_ + 1 offsets into col_/val_
    std::vector<int> col_;
    std::vector<double> val_;
};

double dot(DocTermMatrix::RowView a, DocTermMatrix::RowView b);
double dot(DocTermMatrix::RowView a, std::span<const double> dense);

/// Cosine similarity of two sparse rows; 0 when either row is empty.
double cosine(DocTermMatrix::RowView a, DocTermMatrix::RowView b);

/// Coordinate-format serialization: a JSON header {n, m, weighting, ...}
/// followed by one "row col value" line per entry in row-major order.
void save_matrix(const DocTermMatrix& matrix, const std::filesystem::path& path,
                 const ArtifactMeta& meta);
DocTermMatrix load_matrix(const std::filesystem::path& path);

}  // namespace topiclab
