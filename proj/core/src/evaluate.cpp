#include "topiclab/evaluate.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "artifact_json.hpp"
#include "topiclab/error.hpp"
#include "topiclab/rng.hpp"

namespace topiclab {

namespace {
constexpr double kThresholdSlack = 1e-9;
}

HitResult hit_count(const std::string& label_text, std::span<const Snippet> validation,
                    const Vocabulary& vocab, const TfidfScheme& scheme,
                    const PreprocessConfig& cfg, double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw Error("threshold must be in (0, 1]");
    }
    const auto tokens = preprocess_tokens(label_text, cfg);
    const SparseVector label_vec = vectorize_tokens(tokens, vocab, scheme);
    if (label_vec.empty()) return {0, true};

    int hits = 0;
    for (const auto& snippet : validation) {
        const SparseVector vec = vectorize_tokens(snippet.tokens, vocab, scheme);
        if (vec.empty()) continue;
        if (dot(label_vec, vec) + kThresholdSlack >= threshold) ++hits;
    }
    return {hits, false};
}

int EvalReport::total_hits() const {
    int total = 0;
    for (const auto& t : topics) total += t.hits;
    return total;
}

double EvalReport::mean_hits() const {
    if (topics.empty()) return 0.0;
    return static_cast<double>(total_hits()) / static_cast<double>(topics.size());
}

std::vector<Snippet> sample_validation(const Corpus& corpus, int size,
                                       std::uint64_t seed) {
    if (size < 1) throw Error("validation size must be >= 1");
    const int n = static_cast<int>(corpus.size());
    if (size >= n) return corpus.snippets;

    std::vector<int> indices(static_cast<std::size_t>(n));
    std::iota(indices.begin(), indices.end(), 0);
    Rng rng(seed);
    for (int i = 0; i < size; ++i) {  // partial Fisher-Yates
        const int j = i + rng.uniform_int(n - i);
        std::swap(indices[static_cast<std::size_t>(i)],
                  indices[static_cast<std::size_t>(j)]);
    }
    indices.resize(static_cast<std::size_t>(size));
    std::sort(indices.begin(), indices.end());

    std::vector<Snippet> sample;
    sample.reserve(indices.size());
    for (int idx : indices) {
        sample.push_back(corpus.snippets[static_cast<std::size_t>(idx)]);
    }
    return sample;
}

std::string validation_fingerprint(std::span<const Snippet> validation) {
    std::uint64_t h = fnv1a64("validation");
    for (const auto& snippet : validation) {
        h = fnv1a64(std::to_string(snippet.id) + ":", h);
        for (const auto& token : snippet.tokens) {
            h = fnv1a64(token, h);
            h = fnv1a64(",", h);
        }
        h = fnv1a64(";", h);
    }
    return to_hex(h);
}

EvalReport evaluate_labels(std::span<const TopicLabel> labels,
                           std::span<const Snippet> validation,
                           const Vocabulary& vocab, const TfidfScheme& scheme,
                           const PreprocessConfig& cfg, double threshold) {
    EvalReport report;
    if (!labels.empty()) report.method = labels.front().method;
    report.threshold = threshold;
    report.validation_size = static_cast<int>(validation.size());
    report.validation_hash = validation_fingerprint(validation);
    for (const auto& label : labels) {
        TopicHits row;
        row.topic_id = label.topic_id;
        row.label = label.label;
        if (label.label) {
            const HitResult r =
                hit_count(*label.label, validation, vocab, scheme, cfg, threshold);
            row.hits = r.hits;
            row.unknown_vocabulary = r.unknown_vocabulary;
        }
        report.topics.push_back(std::move(row));
    }
    return report;
}

ComparisonReport compare_models(const EvalReport& nmf_report,
                                const EvalReport& lda_report) {
    if (nmf_report.threshold != lda_report.threshold ||
        nmf_report.validation_size != lda_report.validation_size ||
        nmf_report.validation_hash != lda_report.validation_hash) {
        throw MismatchedValidation(
            "evaluation reports were built on different validation sets or "
            "thresholds");
    }

    ComparisonReport cmp;
    cmp.threshold = nmf_report.threshold;
    cmp.validation_size = nmf_report.validation_size;
    const std::size_t rows =
        std::max(nmf_report.topics.size(), lda_report.topics.size());
    for (std::size_t i = 0; i < rows; ++i) {
        ComparisonRow row;
        row.topic_id = static_cast<int>(i);
        if (i < nmf_report.topics.size()) {
            row.nmf_label = nmf_report.topics[i].label;
            row.nmf_hits = nmf_report.topics[i].hits;
        }
        if (i < lda_report.topics.size()) {
            row.lda_label = lda_report.topics[i].label;
            row.lda_hits = lda_report.topics[i].hits;
        }
        cmp.rows.push_back(std::move(row));
    }
    cmp.nmf_total = nmf_report.total_hits();
    cmp.lda_total = lda_report.total_hits();
    cmp.nmf_mean = nmf_report.mean_hits();
    cmp.lda_mean = lda_report.mean_hits();
    cmp.higher_total = cmp.nmf_total > cmp.lda_total
                           ? "nmf"
                           : (cmp.lda_total > cmp.nmf_total ? "lda" : "tie");
    return cmp;
}

void save_eval_csv(const EvalReport& report, const std::filesystem::path& path,
                   const ArtifactMeta& meta) {
    nlohmann::json header = detail::meta_json("eval", meta);
    header["method"] = std::string(method_name(report.method));
    header["threshold"] = report.threshold;
    header["validation_size"] = report.validation_size;
    header["validation_hash"] = report.validation_hash;
    auto flagged = nlohmann::json::array();
    for (const auto& t : report.topics) {
        if (t.unknown_vocabulary) flagged.push_back(t.topic_id);
    }
    header["unknown_vocabulary_topics"] = std::move(flagged);

    std::string out = detail::meta_comment(header);
    out += "method,topic_id,label,hits\n";
    for (const auto& t : report.topics) {
        out += method_name(report.method);
        out += ',';
        out += std::to_string(t.topic_id);
        out += ',';
        if (t.label) out += csv_quote(*t.label);
        out += ',';
        out += std::to_string(t.hits);
        out += '\n';
    }
    atomic_write(path, out);
}

EvalReport load_eval_csv(const std::filesystem::path& path) {
    const std::string content = read_artifact(path);
    EvalReport report;
    std::size_t pos = 0;
    int line_no = 0;
    bool saw_meta = false, saw_columns = false;
    std::vector<int> flagged;
    while (pos < content.size()) {
        auto end = content.find('\n', pos);
        if (end == std::string::npos) end = content.size();
        std::string line(content.data() + pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (line.empty()) continue;
        if (!saw_meta) {
            auto header = detail::parse_meta_comment(line, "eval", path.string());
            report.method = parse_method(header.at("method").get<std::string>());
            report.threshold = header.at("threshold").get<double>();
            report.validation_size = header.at("validation_size").get<int>();
            report.validation_hash = header.at("validation_hash").get<std::string>();
            flagged = header.value("unknown_vocabulary_topics", std::vector<int>{});
            saw_meta = true;
            continue;
        }
        if (!saw_columns) {
            saw_columns = true;  // column header row
            continue;
        }
        const auto fields = csv_split(line);
        if (fields.size() != 4) {
            throw FormatError(path.string() + ": bad eval row at line " +
                              std::to_string(line_no));
        }
        TopicHits row;
        try {
            row.topic_id = std::stoi(fields[1]);
            row.hits = std::stoi(fields[3]);
        } catch (const std::exception&) {
            throw FormatError(path.string() + ": bad eval row at line " +
                              std::to_string(line_no));
        }
        if (!fields[2].empty()) row.label = fields[2];
        row.unknown_vocabulary =
            std::find(flagged.begin(), flagged.end(), row.topic_id) != flagged.end();
        report.topics.push_back(std::move(row));
    }
    if (!saw_meta) throw FormatError(path.string() + ": missing eval header");
    return report;
}

void save_comparison_csv(const ComparisonReport& report,
                         const std::filesystem::path& path, const ArtifactMeta& meta) {
    nlohmann::json header = detail::meta_json("comparison", meta);
    header["threshold"] = report.threshold;
    header["validation_size"] = report.validation_size;

    std::string out = detail::meta_comment(header);
    out += "topic_id,nmf_label,nmf_hits,lda_label,lda_hits,delta\n";
    for (const auto& row : report.rows) {
        out += std::to_string(row.topic_id);
        out += ',';
        if (row.nmf_label) out += csv_quote(*row.nmf_label);
        out += ',';
        out += std::to_string(row.nmf_hits);
        out += ',';
        if (row.lda_label) out += csv_quote(*row.lda_label);
        out += ',';
        out += std::to_string(row.lda_hits);
        out += ',';
        out += std::to_string(row.nmf_hits - row.lda_hits);
        out += '\n';
    }
    atomic_write(path, out);
}

void save_comparison_json(const ComparisonReport& report,
                          const std::filesystem::path& path, const ArtifactMeta& meta) {
    nlohmann::json j = detail::meta_json("comparison_summary", meta);
    j["nmf_total"] = report.nmf_total;
    j["lda_total"] = report.lda_total;
    j["nmf_mean"] = report.nmf_mean;
    j["lda_mean"] = report.lda_mean;
    j["threshold"] = report.threshold;
    j["validation_size"] = report.validation_size;
    j["higher_total"] = report.higher_total;
    atomic_write(path, j.dump(2) + "\n");
}

}  // namespace topiclab
