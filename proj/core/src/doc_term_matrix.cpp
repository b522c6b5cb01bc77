#include "topiclab/doc_term_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include <json.hpp>

#include "artifact_json.hpp"
#include "topiclab/error.hpp"

namespace topiclab {

DocTermMatrix::DocTermMatrix(int rows, int cols, Weighting weighting,
                             std::vector<Entry> entries)
    : rows_(rows), cols_(cols), weighting_(weighting) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimensions");
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    row_start_.assign(static_cast<std::size_t>(rows) + 1, 0);
    col_.reserve(entries.size());
    val_.reserve(entries.size());
    int prev_row = -1, prev_col = -1;
    for (const auto& e : entries) {
        if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols) {
            throw DimensionError("matrix entry out of range");
        }
        if (e.row == prev_row && e.col == prev_col) {
            throw Error("duplicate matrix entry at (" + std::to_string(e.row) + ", " +
                        std::to_string(e.col) + ")");
        }
        if (!(e.value > 0.0)) {
            throw Error("matrix entries must be positive (no explicit zeros)");
        }
        if (weighting == Weighting::count && e.value != std::floor(e.value)) {
            throw Error("count matrices must hold integer values");
        }
        ++row_start_[static_cast<std::size_t>(e.row) + 1];
        col_.push_back(e.col);
        val_.push_back(e.value);
        prev_row = e.row;
        prev_col = e.col;
    }
    for (std::size_t r = 1; r < row_start_.size(); ++r) {
        row_start_[r] += row_start_[r - 1];
    }
}

DocTermMatrix::RowView DocTermMatrix::row(int r) const {
    const auto begin = row_start_[static_cast<std::size_t>(r)];
    const auto end = row_start_[static_cast<std::size_t>(r) + 1];
    return {std::span<const int>(col_.data() + begin, end - begin),
            std::span<const double>(val_.data() + begin, end - begin)};
}

std::vector<int> DocTermMatrix::empty_rows() const {
    std::vector<int> out;
    for (int r = 0; r < rows_; ++r) {
        if (row_start_[static_cast<std::size_t>(r)] ==
            row_start_[static_cast<std::size_t>(r) + 1]) {
            out.push_back(r);
        }
    }
    return out;
}

std::vector<int> DocTermMatrix::column_doc_freq() const {
    std::vector<int> df(static_cast<std::size_t>(cols_), 0);
    for (int c : col_) ++df[static_cast<std::size_t>(c)];
    return df;
}

double DocTermMatrix::row_norm(int r) const {
    const auto view = row(r);
    double sq = 0.0;
    for (double v : view.vals) sq += v * v;
    return std::sqrt(sq);
}

double DocTermMatrix::squared_frobenius() const {
    double sq = 0.0;
    for (double v : val_) sq += v * v;
    return sq;
}

std::vector<DocTermMatrix::Entry> DocTermMatrix::entries() const {
    std::vector<Entry> out;
    out.reserve(nnz());
    for (int r = 0; r < rows_; ++r) {
        const auto view = row(r);
        for (std::size_t i = 0; i < view.size(); ++i) {
            out.push_back({r, view.cols[i], view.vals[i]});
        }
    }
    return out;
}

double dot(DocTermMatrix::RowView a, DocTermMatrix::RowView b) {
    double sum = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
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

double dot(DocTermMatrix::RowView a, std::span<const double> dense) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += a.vals[i] * dense[static_cast<std::size_t>(a.cols[i])];
    }
    return sum;
}

double cosine(DocTermMatrix::RowView a, DocTermMatrix::RowView b) {
    double na = 0.0, nb = 0.0;
    for (double v : a.vals) na += v * v;
    for (double v : b.vals) nb += v * v;
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot(a, b) / std::sqrt(na * nb);
}

void save_matrix(const DocTermMatrix& matrix, const std::filesystem::path& path,
                 const ArtifactMeta& meta) {
    nlohmann::json header = detail::meta_json("matrix", meta);
    header["n"] = matrix.rows();
    header["m"] = matrix.cols();
    header["weighting"] = matrix.weighting() == Weighting::count ? "count" : "tfidf";
    header["empty_rows"] = matrix.empty_rows();

    std::string out = header.dump();
    out += '\n';
    const bool counts = matrix.weighting() == Weighting::count;
    for (int r = 0; r < matrix.rows(); ++r) {
        const auto view = matrix.row(r);
        for (std::size_t i = 0; i < view.size(); ++i) {
            out += std::to_string(r);
            out += ' ';
            out += std::to_string(view.cols[i]);
            out += ' ';
            if (counts) {
                out += std::to_string(static_cast<long long>(view.vals[i]));
            } else {
                out += format_double(view.vals[i]);
            }
            out += '\n';
        }
    }
    atomic_write(path, out);
}

DocTermMatrix load_matrix(const std::filesystem::path& path) {
    const std::string content = read_artifact(path);
    const auto header_end = content.find('\n');
    if (header_end == std::string::npos) {
        throw FormatError(path.string() + ": missing matrix header");
    }
    nlohmann::json header = detail::parse_json(
        std::string_view(content).substr(0, header_end), path.string());
    if (!header.is_object() || header.value("kind", "") != "matrix") {
        throw FormatError(path.string() + ": expected a matrix header");
    }
    const int n = header.at("n").get<int>();
    const int m = header.at("m").get<int>();
    const std::string weighting_name = header.at("weighting").get<std::string>();
    Weighting weighting;
    if (weighting_name == "count") {
        weighting = Weighting::count;
    } else if (weighting_name == "tfidf") {
        weighting = Weighting::tfidf;
    } else {
        throw FormatError(path.string() + ": unknown weighting \"" + weighting_name +
                          "\"");
    }

    std::vector<DocTermMatrix::Entry> entries;
    std::size_t pos = header_end + 1;
    int line_no = 1;
    while (pos < content.size()) {
        auto end = content.find('\n', pos);
        if (end == std::string::npos) end = content.size();
        std::string_view line(content.data() + pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (line.empty()) continue;

        DocTermMatrix::Entry e;
        const char* p = line.data();
        const char* last = line.data() + line.size();
        auto r1 = std::from_chars(p, last, e.row);
        if (r1.ec != std::errc{} || r1.ptr == last || *r1.ptr != ' ') {
            throw FormatError(path.string() + ": bad entry at line " +
                              std::to_string(line_no));
        }
        auto r2 = std::from_chars(r1.ptr + 1, last, e.col);
        if (r2.ec != std::errc{} || r2.ptr == last || *r2.ptr != ' ') {
            throw FormatError(path.string() + ": bad entry at line " +
                              std::to_string(line_no));
        }
        auto r3 = std::from_chars(r2.ptr + 1, last, e.value);
        if (r3.ec != std::errc{} || r3.ptr != last) {
            throw FormatError(path.string() + ": bad entry at line " +
                              std::to_string(line_no));
        }
        entries.push_back(e);
    }
    return DocTermMatrix(n, m, weighting, std::move(entries));
}

}  // namespace topiclab
