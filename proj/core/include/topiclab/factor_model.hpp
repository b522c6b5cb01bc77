#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "topiclab/io.hpp"

namespace topiclab {

enum class Method { nmf, lda };

std::string_view method_name(Method method);
Method parse_method(std::string_view name);

/// A fitted topic model in W/H form: W holds document membership weights
/// (n x k) and H holds term weights per topic (k x m). Both factorizations
/// are reduced to this shape so they can be described, labelled and compared
/// through the same code paths.
struct FactorModel {
    Eigen::MatrixXd W;
    Eigen::MatrixXd H;
    Method method = Method::nmf;
    std::uint64_t seed = 0;
    int iterations = 0;                   // update rounds (nmf) or sweeps run (lda)
    std::vector<double> objective_trace;  // nmf: Frobenius error per iteration

    // lda parameters; zero for nmf models
    double alpha = 0.0;
    double beta = 0.0;
    int sweeps = 0;
    int burn_in = 0;
    std::vector<int> uniform_theta_rows;  // empty documents given uniform rows

    int k() const { return static_cast<int>(W.cols()); }
    int n_docs() const { return static_cast<int>(W.rows()); }
    int n_terms() const { return static_cast<int>(H.cols()); }
};

/// Text serialization: a JSON header line, then W and H as row-major blocks.
void save_model(const FactorModel& model, const std::filesystem::path& path,
                const ArtifactMeta& meta);
FactorModel load_model(const std::filesystem::path& path);

/// The objective trace as a two-column CSV (iteration, frobenius_error).
void save_trace_csv(const FactorModel& model, const std::filesystem::path& path,
                    const ArtifactMeta& meta);

}  // namespace topiclab
