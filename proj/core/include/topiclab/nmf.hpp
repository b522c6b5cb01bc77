#pragma once

#include <cstdint>
#include <utility>

#include <Eigen/Dense>

#include "topiclab/doc_term_matrix.hpp"
#include "topiclab/factor_model.hpp"

namespace topiclab::nmf {

struct Options {
    int max_iter = 200;
    double tol = 1e-4;  // relative objective decrease that stops iteration
    std::uint64_t seed = 0;
    double init_scale = 1.0;
};

/// Seeded uniform(1e-6, scale) factors. The positivity floor keeps every
/// entry strictly positive so multiplicative updates never lock at zero.
/// Throws DimensionError when k > min(n, m).
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> init_factors(int n, int m, int k,
                                                         std::uint64_t seed,
                                                         double scale);

/// One round of Lee-Seung multiplicative updates for ||V - WH||_F^2:
///
///   H <- H .* (W'V) ./ (W'WH + delta)
///   W <- W .* (VH') ./ (WHH' + delta)      with the already-updated H
///
/// delta = 1e-12 guards the divisions. V is consumed row by row in sparse
/// form and never densified. Each half-step is non-increasing in the
/// objective, so a full round is as well.
void update_step(const DocTermMatrix& V, Eigen::MatrixXd& W, Eigen::MatrixXd& H);

/// ||V - WH||_F computed without densifying V, via
/// ||V||^2 - 2<V, WH> + <W'W, HH'>.
double reconstruction_error(const DocTermMatrix& V, const Eigen::MatrixXd& W,
                            const Eigen::MatrixXd& H);

/// Runs update_step until the relative objective decrease drops below
/// opt.tol or opt.max_iter rounds are done. objective_trace records the
/// Frobenius error at initialization and after every round.
FactorModel fit(const DocTermMatrix& V, int k, const Options& opt = {});

}  // namespace topiclab::nmf
