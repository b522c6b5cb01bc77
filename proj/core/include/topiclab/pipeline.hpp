#pragma once

#include <filesystem>

#include "topiclab/config.hpp"
#include "topiclab/factor_model.hpp"

namespace topiclab {

/// Locations of the artifacts inside cfg.output_dir.
namespace artifact {

std::filesystem::path raw(const PipelineConfig& cfg);
std::filesystem::path corpus(const PipelineConfig& cfg);
std::filesystem::path vocabulary(const PipelineConfig& cfg);
std::filesystem::path counts(const PipelineConfig& cfg);
std::filesystem::path tfidf(const PipelineConfig& cfg);
std::filesystem::path model(const PipelineConfig& cfg, Method method);
std::filesystem::path trace(const PipelineConfig& cfg, Method method);
std::filesystem::path descriptors(const PipelineConfig& cfg, Method method);
std::filesystem::path plots_dir(const PipelineConfig& cfg);
std::filesystem::path plot(const PipelineConfig& cfg, Method method, int topic);
std::filesystem::path labels(const PipelineConfig& cfg, Method method);
std::filesystem::path eval(const PipelineConfig& cfg, Method method);
std::filesystem::path compare_csv(const PipelineConfig& cfg);
std::filesystem::path compare_json(const PipelineConfig& cfg);
std::filesystem::path effective_config(const PipelineConfig& cfg);

}  // namespace artifact

/// Pipeline stages. Each stage reads the previous stage's artifacts from
/// cfg.output_dir, writes its own atomically, and re-records the effective
/// config. Running stages one by one or through run_pipeline produces
/// byte-identical output directories.
namespace stages {

void synth(const PipelineConfig& cfg);
void preprocess(const PipelineConfig& cfg);
void vectorize(const PipelineConfig& cfg);
void fit(const PipelineConfig& cfg, Method method);
void describe(const PipelineConfig& cfg, Method method);
void label(const PipelineConfig& cfg, Method method);
void evaluate(const PipelineConfig& cfg, Method method);
void compare(const PipelineConfig& cfg);

}  // namespace stages

/// preprocess, vectorize, then fit/describe/label/evaluate for both methods,
/// then compare.
void run_pipeline(const PipelineConfig& cfg);

}  // namespace topiclab
