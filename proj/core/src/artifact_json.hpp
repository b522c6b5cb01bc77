// Internal helpers for the JSON meta headers embedded in artifact files.
#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "topiclab/error.hpp"
#include "topiclab/io.hpp"

namespace topiclab::detail {

inline nlohmann::json meta_json(std::string_view kind, const ArtifactMeta& meta) {
    nlohmann::json j;
    j["kind"] = std::string(kind);
    j["config_hash"] = meta.config_hash;
    j["seed"] = meta.seed;
    return j;
}

/// Header line for line-oriented artifacts: {"meta":{...}}.
inline std::string meta_line(std::string_view kind, const ArtifactMeta& meta) {
    nlohmann::json j;
    j["meta"] = meta_json(kind, meta);
    return j.dump() + "\n";
}

/// Comment header line for CSV/TSV artifacts: # {...}.
inline std::string meta_comment(const nlohmann::json& header) {
    return "# " + header.dump() + "\n";
}

inline nlohmann::json parse_json(std::string_view text, std::string_view what) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw FormatError("malformed JSON in " + std::string(what));
    }
    return j;
}

/// Parses the leading {"meta":{...}} line and checks its kind tag.
inline nlohmann::json parse_meta_line(std::string_view line, std::string_view kind,
                                      std::string_view file) {
    nlohmann::json j = parse_json(line, file);
    if (!j.is_object() || !j.contains("meta") || !j["meta"].is_object() ||
        j["meta"].value("kind", "") != kind) {
        throw FormatError(std::string(file) + ": expected a \"" + std::string(kind) +
                          "\" meta header line");
    }
    return j["meta"];
}

/// Parses a "# {...}" comment header and checks its kind tag.
inline nlohmann::json parse_meta_comment(std::string_view line, std::string_view kind,
                                         std::string_view file) {
    if (line.rfind("# ", 0) != 0) {
        throw FormatError(std::string(file) + ": expected a \"# {...}\" header line");
    }
    nlohmann::json j = parse_json(line.substr(2), file);
    if (!j.is_object() || j.value("kind", "") != kind) {
        throw FormatError(std::string(file) + ": expected a \"" + std::string(kind) +
                          "\" header");
    }
    return j;
}

}  // namespace topiclab::detail
