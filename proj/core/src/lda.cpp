#include "topiclab/lda.hpp"

#include <cmath>

#include "topiclab/error.hpp"

namespace topiclab::lda {

GibbsState init_state(const DocTermMatrix& counts, int k, double alpha, double beta,
                      std::uint64_t seed) {
    if (counts.weighting() != Weighting::count) {
        throw WeightingError(
            "lda requires a raw count matrix; got tf-idf weights");
    }
    if (k < 1) throw DimensionError("k must be >= 1");
    if (!(alpha > 0.0) || !(beta > 0.0)) throw Error("alpha and beta must be positive");

    GibbsState st;
    st.n_docs = counts.rows();
    st.n_terms = counts.cols();
    st.n_topics = k;
    st.alpha = alpha;
    st.beta = beta;
    st.rng_seed = seed;
    st.rng = Rng(seed);

    st.doc_len.assign(static_cast<std::size_t>(st.n_docs), 0);
    for (int d = 0; d < st.n_docs; ++d) {
        const auto view = counts.row(d);
        for (std::size_t i = 0; i < view.size(); ++i) {
            const int copies = static_cast<int>(view.vals[i]);
            for (int c = 0; c < copies; ++c) {
                st.token_doc.push_back(d);
                st.token_term.push_back(view.cols[i]);
            }
            st.doc_len[static_cast<std::size_t>(d)] += copies;
        }
    }

    st.z.assign(st.token_doc.size(), 0);
    st.ndk.assign(static_cast<std::size_t>(st.n_docs) * k, 0);
    st.nkw.assign(static_cast<std::size_t>(k) * st.n_terms, 0);
    st.nk.assign(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < st.z.size(); ++i) {
        const int t = st.rng.uniform_int(k);
        st.z[i] = t;
        ++st.doc_topic(st.token_doc[i], t);
        ++st.topic_term(t, st.token_term[i]);
        ++st.nk[static_cast<std::size_t>(t)];
    }
    return st;
}

void gibbs_sweep(GibbsState& st) {
    const int k = st.n_topics;
    const double mbeta = st.n_terms * st.beta;
    std::vector<double> cdf(static_cast<std::size_t>(k));

    for (std::size_t i = 0; i < st.z.size(); ++i) {
        const int d = st.token_doc[i];
        const int w = st.token_term[i];
        const int old_t = st.z[i];

        --st.doc_topic(d, old_t);
        --st.topic_term(old_t, w);
        --st.nk[static_cast<std::size_t>(old_t)];

        double acc = 0.0;
        for (int t = 0; t < k; ++t) {
            acc += (st.doc_topic(d, t) + st.alpha) *
                   (st.topic_term(t, w) + st.beta) /
                   (st.nk[static_cast<std::size_t>(t)] + mbeta);
            cdf[static_cast<std::size_t>(t)] = acc;
        }
        const double u = st.rng.uniform() * acc;
        int new_t = 0;
        while (new_t < k - 1 && cdf[static_cast<std::size_t>(new_t)] < u) ++new_t;

        st.z[i] = new_t;
        ++st.doc_topic(d, new_t);
        ++st.topic_term(new_t, w);
        ++st.nk[static_cast<std::size_t>(new_t)];
    }
    ++st.sweep;
}

FactorModel to_factor_model(const GibbsState& st) {
    FactorModel model;
    model.method = Method::lda;
    model.seed = st.rng_seed;
    model.alpha = st.alpha;
    model.beta = st.beta;
    model.iterations = st.sweep;

    const int k = st.n_topics;
    model.W.resize(st.n_docs, k);
    for (int d = 0; d < st.n_docs; ++d) {
        const double denom = st.doc_len[static_cast<std::size_t>(d)] + k * st.alpha;
        for (int t = 0; t < k; ++t) {
            model.W(d, t) = (st.doc_topic(d, t) + st.alpha) / denom;
        }
        if (st.doc_len[static_cast<std::size_t>(d)] == 0) {
            model.uniform_theta_rows.push_back(d);
        }
    }
    const double mbeta = st.n_terms * st.beta;
    model.H.resize(k, st.n_terms);
    for (int t = 0; t < k; ++t) {
        const double denom = st.nk[static_cast<std::size_t>(t)] + mbeta;
        for (int w = 0; w < st.n_terms; ++w) {
            model.H(t, w) = (st.topic_term(t, w) + st.beta) / denom;
        }
    }
    return model;
}

FactorModel fit(const DocTermMatrix& counts, int k, const Options& opt) {
    const double alpha = opt.alpha > 0.0 ? opt.alpha : 50.0 / k;
    if (opt.burn_in < 0 || opt.sweeps <= opt.burn_in) {
        throw Error("sweeps must exceed burn_in >= 0");
    }

    GibbsState st = init_state(counts, k, alpha, opt.beta, opt.seed);

    Eigen::MatrixXd w_sum = Eigen::MatrixXd::Zero(st.n_docs, k);
    Eigen::MatrixXd h_sum = Eigen::MatrixXd::Zero(k, st.n_terms);
    int retained = 0;
    for (int s = 0; s < opt.sweeps; ++s) {
        gibbs_sweep(st);
        if (st.sweep <= opt.burn_in) continue;
        const FactorModel estimate = to_factor_model(st);
        w_sum += estimate.W;
        h_sum += estimate.H;
        ++retained;
    }

    FactorModel model = to_factor_model(st);  // carries shapes and flags
    model.W = w_sum / retained;
    model.H = h_sum / retained;
    model.sweeps = opt.sweeps;
    model.burn_in = opt.burn_in;
    model.iterations = st.sweep;
    return model;
}

}  // namespace topiclab::lda
