#pragma once

#include <cstdint>
#include <vector>

#include "topiclab/doc_term_matrix.hpp"
#include "topiclab/factor_model.hpp"
#include "topiclab/rng.hpp"

namespace topiclab::lda {

struct Options {
    double alpha = 0.0;  // <= 0 selects the 50/k convention
    double beta = 0.01;
    int sweeps = 500;
    int burn_in = 100;
    std::uint64_t seed = 0;
};

/// Collapsed Gibbs sampler state. Token occurrences are flattened from the
/// count matrix in (document, column) order, which fixes the sweep order and
/// makes the whole trajectory reproducible from the seed.
///
/// Count invariants, restored after every sweep:
///   sum_t ndk[d, t] == doc_len[d]
///   sum_w nkw[t, w] == nk[t]
///   sum_t nk[t]     == total token occurrences
struct GibbsState {
    int n_docs = 0;
    int n_terms = 0;
    int n_topics = 0;
    double alpha = 0.0;
    double beta = 0.0;
    std::uint64_t rng_seed = 0;
    int sweep = 0;

    std::vector<int> token_doc;   // document of each occurrence
    std::vector<int> token_term;  // term column of each occurrence
    std::vector<int> z;           // topic assignment of each occurrence
    std::vector<int> doc_len;

    std::vector<int> ndk;  // n_docs x n_topics, row-major
    std::vector<int> nkw;  // n_topics x n_terms, row-major
    std::vector<int> nk;   // per-topic totals

    Rng rng{0};

    int& doc_topic(int d, int t) { return ndk[static_cast<std::size_t>(d) * n_topics + t]; }
    int doc_topic(int d, int t) const { return ndk[static_cast<std::size_t>(d) * n_topics + t]; }
    int& topic_term(int t, int w) { return nkw[static_cast<std::size_t>(t) * n_terms + w]; }
    int topic_term(int t, int w) const { return nkw[static_cast<std::size_t>(t) * n_terms + w]; }
};

/// Builds a state from a count matrix with uniformly random seeded topic
/// assignments. Throws WeightingError when given a tf-idf matrix.
GibbsState init_state(const DocTermMatrix& counts, int k, double alpha, double beta,
                      std::uint64_t seed);

/// One full collapsed Gibbs sweep: every occurrence is removed from the
/// counts, resampled with probability proportional to
/// (ndk + alpha) * (nkw + beta) / (nk + m*beta), and reinserted.
void gibbs_sweep(GibbsState& state);

/// Smoothed point estimates from the current counts:
///   theta[d,t] = (ndk + alpha) / (doc_len + k*alpha)   -> W
///   phi[t,w]   = (nkw + beta) / (nk + m*beta)          -> H
/// Empty documents come out uniform (alpha / k*alpha = 1/k) and are listed in
/// uniform_theta_rows.
FactorModel to_factor_model(const GibbsState& state);

/// Runs `sweeps` Gibbs sweeps and averages the theta/phi estimates of every
/// post-burn-in sweep into the returned model.
FactorModel fit(const DocTermMatrix& counts, int k, const Options& opt = {});

}  // namespace topiclab::lda
