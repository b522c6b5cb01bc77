#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace topiclab {

/// Provenance stamped into every artifact file.
struct ArtifactMeta {
    std::string config_hash;  // hex digest of the run parameters
    std::uint64_t seed = 0;
};

/// FNV-1a 64-bit hash.
std::uint64_t fnv1a64(std::string_view data);
std::uint64_t fnv1a64(std::string_view data, std::uint64_t basis);

/// 16-character lowercase hex form of a 64-bit value.
std::string to_hex(std::uint64_t value);

/// Shortest decimal form that round-trips the exact double.
std::string format_double(double value);

/// RFC-4180 style field quoting; quotes only when the field needs it.
std::string csv_quote(std::string_view field);

/// Splits one CSV line produced by csv_quote-based writers.
std::vector<std::string> csv_split(std::string_view line);

/// Writes content to a temp file next to `path` and renames it into place,
/// creating parent directories as needed.
void atomic_write(const std::filesystem::path& path, std::string_view content);

/// Whole-file read. Throws IoError when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// read_file that reports the missing input as a pipeline artifact.
std::string read_artifact(const std::filesystem::path& path);

}  // namespace topiclab
