#include "topiclab/descriptors.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>

#include <json.hpp>

#include "artifact_json.hpp"
#include "topiclab/error.hpp"

namespace topiclab {

std::vector<TopicDescriptors> top_terms(const FactorModel& model,
                                        const Vocabulary& vocab, int t) {
    if (t < 1) throw Error("descriptor count must be >= 1");
    const int m = model.n_terms();
    if (vocab.size() != m) {
        throw DimensionError("vocabulary size does not match the model");
    }
    int count = t;
    if (t > m) {
        std::cerr << "[descriptors] warning: requested " << t << " terms but the "
                  << "vocabulary has " << m << "; truncating\n";
        count = m;
    }

    std::vector<TopicDescriptors> out;
    out.reserve(static_cast<std::size_t>(model.k()));
    std::vector<int> order(static_cast<std::size_t>(m));
    for (int topic = 0; topic < model.k(); ++topic) {
        std::iota(order.begin(), order.end(), 0);
        std::partial_sort(order.begin(), order.begin() + count, order.end(),
                          [&](int a, int b) {
                              const double wa = model.H(topic, a);
                              const double wb = model.H(topic, b);
                              if (wa != wb) return wa > wb;
                              return vocab.terms[static_cast<std::size_t>(a)] <
                                     vocab.terms[static_cast<std::size_t>(b)];
                          });
        TopicDescriptors td;
        td.topic_id = topic;
        td.method = model.method;
        td.terms.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
            const int col = order[static_cast<std::size_t>(i)];
            td.terms.emplace_back(vocab.terms[static_cast<std::size_t>(col)],
                                  model.H(topic, col));
        }
        out.push_back(std::move(td));
    }
    return out;
}

NormalizeMode default_normalize_mode(Method method) {
    return method == Method::nmf ? NormalizeMode::max : NormalizeMode::sum;
}

std::vector<std::pair<std::string, double>> normalize_for_plot(
    const TopicDescriptors& descriptors, NormalizeMode mode) {
    double max_w = 0.0, sum_w = 0.0;
    for (const auto& [term, w] : descriptors.terms) {
        max_w = std::max(max_w, w);
        sum_w += w;
    }
    if (!(max_w > 0.0)) {
        throw AllZeroTopic("topic " + std::to_string(descriptors.topic_id) +
                           " has no positive term weight");
    }
    const double denom = mode == NormalizeMode::max ? max_w : sum_w;
    std::vector<std::pair<std::string, double>> out;
    out.reserve(descriptors.terms.size());
    for (const auto& [term, w] : descriptors.terms) {
        out.emplace_back(term, w / denom);
    }
    return out;
}

std::vector<int> dead_topics(const FactorModel& model) {
    std::vector<int> out;
    for (int topic = 0; topic < model.k(); ++topic) {
        if ((model.H.row(topic).array() > 0.0).any()) continue;
        out.push_back(topic);
    }
    return out;
}

std::vector<TopicPair> pair_topics(const FactorModel& a, const FactorModel& b) {
    if (a.n_terms() != b.n_terms()) {
        throw DimensionError("models must share a vocabulary to be paired");
    }
    std::vector<TopicPair> pairs;
    pairs.reserve(static_cast<std::size_t>(a.k()));
    for (int i = 0; i < a.k(); ++i) {
        TopicPair best{i, 0, -1.0};
        const double na = a.H.row(i).norm();
        for (int j = 0; j < b.k(); ++j) {
            const double nb = b.H.row(j).norm();
            const double c = (na == 0.0 || nb == 0.0)
                                 ? 0.0
                                 : a.H.row(i).dot(b.H.row(j)) / (na * nb);
            if (c > best.cosine) {
                best.topic_b = j;
                best.cosine = c;
            }
        }
        pairs.push_back(best);
    }
    return pairs;
}

void save_descriptor_csv(std::span<const TopicDescriptors> descriptors,
                         std::span<const int> dead,
                         const std::filesystem::path& path, const ArtifactMeta& meta) {
    nlohmann::json header = detail::meta_json("descriptors", meta);
    header["dead_topics"] = std::vector<int>(dead.begin(), dead.end());

    std::string out = detail::meta_comment(header);
    out += "method,topic_id,rank,term,weight,normalized_weight\n";
    for (const auto& td : descriptors) {
        const bool is_dead =
            std::find(dead.begin(), dead.end(), td.topic_id) != dead.end();
        std::vector<std::pair<std::string, double>> normalized;
        if (!is_dead) {
            normalized = normalize_for_plot(td, default_normalize_mode(td.method));
        }
        for (std::size_t i = 0; i < td.terms.size(); ++i) {
            out += method_name(td.method);
            out += ',';
            out += std::to_string(td.topic_id);
            out += ',';
            out += std::to_string(i + 1);
            out += ',';
            out += csv_quote(td.terms[i].first);
            out += ',';
            out += format_double(td.terms[i].second);
            out += ',';
            if (!is_dead) out += format_double(normalized[i].second);
            out += '\n';
        }
    }
    atomic_write(path, out);
}

void save_plot_csv(const TopicDescriptors& descriptors, NormalizeMode mode,
                   const std::filesystem::path& path, const ArtifactMeta& meta) {
    nlohmann::json header = detail::meta_json("plot", meta);
    header["method"] = std::string(method_name(descriptors.method));
    header["topic_id"] = descriptors.topic_id;
    header["normalization"] = mode == NormalizeMode::max ? "max" : "sum";

    const auto series = normalize_for_plot(descriptors, mode);
    std::string out = detail::meta_comment(header);
    out += "rank,term,normalized_weight\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += csv_quote(series[i].first);
        out += ',';
        out += format_double(series[i].second);
        out += '\n';
    }
    atomic_write(path, out);
}

}  // namespace topiclab
