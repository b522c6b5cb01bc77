#include "topiclab/factor_model.hpp"

#include <charconv>
#include <string>

#include <json.hpp>

#include "artifact_json.hpp"
#include "topiclab/error.hpp"

namespace topiclab {

std::string_view method_name(Method method) {
    return method == Method::nmf ? "nmf" : "lda";
}

Method parse_method(std::string_view name) {
    if (name == "nmf") return Method::nmf;
    if (name == "lda") return Method::lda;
    throw FormatError("unknown method \"" + std::string(name) + "\"");
}

namespace {

void append_matrix_block(std::string& out, std::string_view name,
                         const Eigen::MatrixXd& mat) {
    out += name;
    out += ' ';
    out += std::to_string(mat.rows());
    out += ' ';
    out += std::to_string(mat.cols());
    out += '\n';
    for (Eigen::Index r = 0; r < mat.rows(); ++r) {
        for (Eigen::Index c = 0; c < mat.cols(); ++c) {
            if (c > 0) out += ' ';
            out += format_double(mat(r, c));
        }
        out += '\n';
    }
}

struct LineReader {
    std::string_view content;
    std::size_t pos = 0;
    int line_no = 0;

    bool next(std::string_view& line) {
        if (pos >= content.size()) return false;
        auto end = content.find('\n', pos);
        if (end == std::string_view::npos) end = content.size();
        line = content.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        return true;
    }
};

Eigen::MatrixXd read_matrix_block(LineReader& reader, std::string_view name,
                                  const std::string& file) {
    std::string_view line;
    if (!reader.next(line)) throw FormatError(file + ": missing " + std::string(name) + " block");
    // "W n k" header
    const auto space = line.find(' ');
    if (space == std::string_view::npos || line.substr(0, space) != name) {
        throw FormatError(file + ": expected " + std::string(name) + " block header");
    }
    long rows = 0, cols = 0;
    const char* p = line.data() + space + 1;
    const char* last = line.data() + line.size();
    auto r1 = std::from_chars(p, last, rows);
    if (r1.ec != std::errc{} || r1.ptr == last || *r1.ptr != ' ') {
        throw FormatError(file + ": bad block header at line " + std::to_string(reader.line_no));
    }
    auto r2 = std::from_chars(r1.ptr + 1, last, cols);
    if (r2.ec != std::errc{} || r2.ptr != last) {
        throw FormatError(file + ": bad block header at line " + std::to_string(reader.line_no));
    }

    Eigen::MatrixXd mat(rows, cols);
    for (long r = 0; r < rows; ++r) {
        if (!reader.next(line)) throw FormatError(file + ": truncated matrix block");
        const char* q = line.data();
        const char* q_last = line.data() + line.size();
        for (long c = 0; c < cols; ++c) {
            if (c > 0) {
                if (q == q_last || *q != ' ') {
                    throw FormatError(file + ": bad matrix row at line " +
                                      std::to_string(reader.line_no));
                }
                ++q;
            }
            double v = 0.0;
            auto res = std::from_chars(q, q_last, v);
            if (res.ec != std::errc{}) {
                throw FormatError(file + ": bad matrix value at line " +
                                  std::to_string(reader.line_no));
            }
            mat(r, c) = v;
            q = res.ptr;
        }
    }
    return mat;
}

}  // namespace

void save_model(const FactorModel& model, const std::filesystem::path& path,
                const ArtifactMeta& meta) {
    nlohmann::json header = detail::meta_json("model", meta);
    header["method"] = std::string(method_name(model.method));
    header["n"] = model.n_docs();
    header["m"] = model.n_terms();
    header["k"] = model.k();
    header["model_seed"] = model.seed;
    header["iterations"] = model.iterations;
    if (model.method == Method::lda) {
        header["alpha"] = model.alpha;
        header["beta"] = model.beta;
        header["sweeps"] = model.sweeps;
        header["burn_in"] = model.burn_in;
        header["uniform_theta_rows"] = model.uniform_theta_rows;
    }

    std::string out = header.dump();
    out += '\n';
    append_matrix_block(out, "W", model.W);
    append_matrix_block(out, "H", model.H);
    atomic_write(path, out);
}

FactorModel load_model(const std::filesystem::path& path) {
    const std::string content = read_artifact(path);
    LineReader reader{content};
    std::string_view line;
    if (!reader.next(line)) throw FormatError(path.string() + ": empty model file");
    nlohmann::json header = detail::parse_json(line, path.string());
    if (!header.is_object() || header.value("kind", "") != "model") {
        throw FormatError(path.string() + ": expected a model header");
    }

    FactorModel model;
    model.method = parse_method(header.at("method").get<std::string>());
    model.seed = header.value("model_seed", std::uint64_t{0});
    model.iterations = header.value("iterations", 0);
    if (model.method == Method::lda) {
        model.alpha = header.value("alpha", 0.0);
        model.beta = header.value("beta", 0.0);
        model.sweeps = header.value("sweeps", 0);
        model.burn_in = header.value("burn_in", 0);
        model.uniform_theta_rows =
            header.value("uniform_theta_rows", std::vector<int>{});
    }
    model.W = read_matrix_block(reader, "W", path.string());
    model.H = read_matrix_block(reader, "H", path.string());
    if (model.W.cols() != model.H.rows()) {
        throw FormatError(path.string() + ": W and H disagree on k");
    }
    return model;
}

void save_trace_csv(const FactorModel& model, const std::filesystem::path& path,
                    const ArtifactMeta& meta) {
    nlohmann::json header = detail::meta_json("trace", meta);
    header["method"] = std::string(method_name(model.method));
    std::string out = detail::meta_comment(header);
    out += "iteration,frobenius_error\n";
    for (std::size_t i = 0; i < model.objective_trace.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += format_double(model.objective_trace[i]);
        out += '\n';
    }
    atomic_write(path, out);
}

}  // namespace topiclab
