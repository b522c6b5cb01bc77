#include "topiclab/labelling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "artifact_json.hpp"
#include "topiclab/error.hpp"

namespace topiclab {

std::vector<std::string> noun_filter(const TopicDescriptors& descriptors,
                                     const PosLexicon& pos_lexicon) {
    std::vector<std::string> nouns;
    for (const auto& [term, weight] : descriptors.terms) {
        const auto it = pos_lexicon.find(term);
        if (it == pos_lexicon.end() || it->second == PosTag::noun) {
            nouns.push_back(term);
        }
    }
    if (nouns.empty()) {
        throw EmptyDescriptorSet("no noun descriptors for topic " +
                                 std::to_string(descriptors.topic_id));
    }
    return nouns;
}

std::vector<LabelCandidate> score_snippets(
    std::span<const std::pair<std::string, double>> weighted_nouns,
    const DocTermMatrix& tfidf, const Vocabulary& vocab, const Corpus& corpus,
    int top_n) {
    if (weighted_nouns.empty()) throw Error("the topic query must not be empty");
    if (top_n < 3) throw Error("top_n must be >= 3");
    if (tfidf.rows() != static_cast<int>(corpus.size())) {
        throw DimensionError("tf-idf matrix rows do not match the corpus");
    }
    if (tfidf.cols() != vocab.size()) {
        throw DimensionError("tf-idf matrix columns do not match the vocabulary");
    }

    std::vector<double> query(static_cast<std::size_t>(vocab.size()), 0.0);
    for (const auto& [term, weight] : weighted_nouns) {
        const int col = vocab.find(term);
        if (col >= 0) query[static_cast<std::size_t>(col)] += weight;
    }
    double sq = 0.0;
    for (double v : query) sq += v * v;
    if (!(sq > 0.0)) return {};  // all-zero query; caller flags it
    const double inv_norm = 1.0 / std::sqrt(sq);
    for (double& v : query) v *= inv_norm;

    // tf-idf rows are unit length, so the dot product is the cosine
    std::vector<std::pair<double, int>> scores;  // (score, row)
    scores.reserve(corpus.size());
    for (int d = 0; d < tfidf.rows(); ++d) {
        scores.emplace_back(dot(tfidf.row(d), query), d);
    }
    const auto keep = std::min<std::size_t>(static_cast<std::size_t>(top_n),
                                            scores.size());
    std::partial_sort(scores.begin(), scores.begin() + static_cast<std::ptrdiff_t>(keep),
                      scores.end(), [](const auto& a, const auto& b) {
                          if (a.first != b.first) return a.first > b.first;
                          return a.second < b.second;  // smaller row = smaller id
                      });

    std::vector<LabelCandidate> candidates;
    candidates.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) {
        const int row = scores[i].second;
        const auto& snippet = corpus.snippets[static_cast<std::size_t>(row)];
        candidates.push_back(
            {snippet.id, row, snippet.source_text, scores[i].first, 0.0});
    }
    return candidates;
}

std::vector<double> lexrank(std::span<const LabelCandidate> candidates,
                            const DocTermMatrix& tfidf, double sim_threshold,
                            double damping, double tol) {
    if (candidates.empty()) throw Error("lexrank requires at least one candidate");
    if (!(damping >= 0.0 && damping <= 1.0)) throw Error("damping must be in [0, 1]");
    if (!(tol > 0.0)) throw Error("tol must be positive");

    const std::size_t n = candidates.size();
    // Binarized similarity graph without self loops; isolated candidates get
    // uniform transition rows.
    std::vector<std::vector<double>> transition(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double sim =
                cosine(tfidf.row(candidates[i].row), tfidf.row(candidates[j].row));
            if (sim >= sim_threshold) {
                transition[i][j] = 1.0;
                transition[j][i] = 1.0;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double degree =
            std::accumulate(transition[i].begin(), transition[i].end(), 0.0);
        if (degree > 0.0) {
            for (double& v : transition[i]) v /= degree;
        } else {
            for (double& v : transition[i]) v = 1.0 / static_cast<double>(n);
        }
    }

    const double teleport = (1.0 - damping) / static_cast<double>(n);
    std::vector<double> p(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n, 0.0);
    for (int iter = 0; iter < 1000; ++iter) {
        std::fill(next.begin(), next.end(), teleport);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                next[j] += damping * p[i] * transition[i][j];
            }
        }
        double l1 = 0.0;
        for (std::size_t i = 0; i < n; ++i) l1 += std::abs(next[i] - p[i]);
        p.swap(next);
        if (l1 < tol) break;
    }
    return p;
}

std::vector<LabelCandidate> select_top_sentences(std::vector<LabelCandidate> scored) {
    if (scored.empty()) throw Error("no candidates to select from");
    std::sort(scored.begin(), scored.end(),
              [](const LabelCandidate& a, const LabelCandidate& b) {
                  if (a.lexrank_score != b.lexrank_score) {
                      return a.lexrank_score > b.lexrank_score;
                  }
                  if (a.cosine_score != b.cosine_score) {
                      return a.cosine_score > b.cosine_score;
                  }
                  return a.snippet_id < b.snippet_id;
              });
    if (scored.size() > 3) scored.resize(3);
    return scored;
}

TopicLabel choose_label(const std::vector<LabelCandidate>& retained,
                        const DocTermMatrix& tfidf) {
    if (retained.empty() || retained.size() > 3) {
        throw Error("choose_label expects 1 to 3 candidates");
    }
    std::size_t best = 0;
    double best_sim = -1.0;
    for (std::size_t i = 0; i < retained.size(); ++i) {
        double sim_sum = 0.0;
        for (std::size_t j = 0; j < retained.size(); ++j) {
            if (i == j) continue;
            sim_sum += cosine(tfidf.row(retained[i].row), tfidf.row(retained[j].row));
        }
        if (sim_sum > best_sim ||
            (sim_sum == best_sim &&
             retained[i].snippet_id < retained[best].snippet_id)) {
            best = i;
            best_sim = sim_sum;
        }
    }
    TopicLabel label;
    label.top_snippets = retained;
    label.label = retained[best].text;
    return label;
}

std::vector<TopicLabel> generate_labels(const FactorModel& model, const Corpus& corpus,
                                        const Vocabulary& vocab,
                                        const DocTermMatrix& tfidf,
                                        const PosLexicon& pos_lexicon,
                                        const LabelOptions& opt) {
    if (tfidf.weighting() != Weighting::tfidf) {
        throw WeightingError("label generation needs the tf-idf matrix");
    }
    const auto descriptors = top_terms(model, vocab, opt.descriptor_count);

    std::vector<TopicLabel> labels;
    labels.reserve(descriptors.size());
    for (const auto& td : descriptors) {
        TopicLabel out;
        out.topic_id = td.topic_id;
        out.method = model.method;
        for (const auto& [term, weight] : td.terms) out.descriptors.push_back(term);
        try {
            const bool dead = std::none_of(td.terms.begin(), td.terms.end(),
                                           [](const auto& tw) { return tw.second > 0.0; });
            if (dead) {
                out.notes.push_back("dead topic: every term weight is zero");
                labels.push_back(std::move(out));
                continue;
            }

            std::vector<std::string> nouns;
            try {
                nouns = noun_filter(td, pos_lexicon);
            } catch (const EmptyDescriptorSet&) {
                nouns = out.descriptors;
                out.notes.push_back(
                    "noun filter removed every descriptor; using the unfiltered set");
            }
            out.noun_descriptors = nouns;

            std::vector<std::pair<std::string, double>> weighted;
            for (const auto& [term, weight] : td.terms) {
                if (std::find(nouns.begin(), nouns.end(), term) != nouns.end()) {
                    weighted.emplace_back(term, weight);
                }
            }

            auto candidates =
                score_snippets(weighted, tfidf, vocab, corpus, opt.top_n);
            if (candidates.empty()) {
                out.notes.push_back("query vector has no vocabulary mass");
                labels.push_back(std::move(out));
                continue;
            }

            const auto scores = lexrank(candidates, tfidf, opt.sim_threshold,
                                        opt.damping, opt.tol);
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                candidates[i].lexrank_score = scores[i];
            }

            auto retained = select_top_sentences(std::move(candidates));
            if (retained.size() < 3) {
                out.notes.push_back("only " + std::to_string(retained.size()) +
                                    " candidate(s) available");
            }
            TopicLabel chosen = choose_label(retained, tfidf);
            out.top_snippets = std::move(chosen.top_snippets);
            out.label = std::move(chosen.label);
        } catch (const Error& e) {
            out.label.reset();
            out.notes.push_back(std::string("labelling failed: ") + e.what());
        }
        labels.push_back(std::move(out));
    }
    return labels;
}

void save_label_report(std::span<const TopicLabel> labels,
                       const std::filesystem::path& path, const ArtifactMeta& meta) {
    std::string out = detail::meta_line("labels", meta);
    for (const auto& label : labels) {
        nlohmann::json j;
        j["topic_id"] = label.topic_id;
        j["method"] = std::string(method_name(label.method));
        j["descriptors"] = label.descriptors;
        j["noun_descriptors"] = label.noun_descriptors;
        auto snippets = nlohmann::json::array();
        for (const auto& c : label.top_snippets) {
            nlohmann::json s;
            s["id"] = c.snippet_id;
            s["text"] = c.text;
            s["cosine"] = c.cosine_score;
            s["lexrank"] = c.lexrank_score;
            snippets.push_back(std::move(s));
        }
        j["top_snippets"] = std::move(snippets);
        if (label.label) {
            j["label"] = *label.label;
        } else {
            j["label"] = nullptr;
        }
        j["notes"] = label.notes;
        out += j.dump();
        out += '\n';
    }
    atomic_write(path, out);
}

std::vector<TopicLabel> load_label_report(const std::filesystem::path& path) {
    const std::string content = read_artifact(path);
    std::vector<TopicLabel> labels;
    std::size_t pos = 0;
    bool saw_meta = false;
    int line_no = 0;
    while (pos < content.size()) {
        auto end = content.find('\n', pos);
        if (end == std::string::npos) end = content.size();
        std::string_view line(content.data() + pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (line.empty()) continue;
        if (!saw_meta) {
            detail::parse_meta_line(line, "labels", path.string());
            saw_meta = true;
            continue;
        }
        nlohmann::json j = detail::parse_json(line, path.string() + " line " +
                                                        std::to_string(line_no));
        TopicLabel label;
        label.topic_id = j.at("topic_id").get<int>();
        label.method = parse_method(j.at("method").get<std::string>());
        label.descriptors = j.value("descriptors", std::vector<std::string>{});
        label.noun_descriptors = j.value("noun_descriptors", std::vector<std::string>{});
        for (const auto& s : j.value("top_snippets", nlohmann::json::array())) {
            LabelCandidate c;
            c.snippet_id = s.at("id").get<int>();
            c.text = s.at("text").get<std::string>();
            c.cosine_score = s.value("cosine", 0.0);
            c.lexrank_score = s.value("lexrank", 0.0);
            label.top_snippets.push_back(std::move(c));
        }
        if (j.contains("label") && !j["label"].is_null()) {
            label.label = j["label"].get<std::string>();
        }
        label.notes = j.value("notes", std::vector<std::string>{});
        labels.push_back(std::move(label));
    }
    if (!saw_meta) throw FormatError(path.string() + ": missing labels meta header");
    return labels;
}

}  // namespace topiclab
