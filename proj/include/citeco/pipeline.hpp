#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "citeco/config.hpp"
#include "citeco/report.hpp"

namespace citeco {

/// File names written into the output directory.
namespace files {
inline constexpr const char* kEnvironment = "environment.csv";
inline constexpr const char* kMatrix = "matrix.csv";
inline constexpr const char* kFactors = "factors.csv";
inline constexpr const char* kCosine = "cosine.csv";
inline constexpr const char* kGraph = "graph.net";
inline constexpr const char* kCentrality = "centrality.csv";
inline constexpr const char* kAggregate = "aggregate.csv";
inline constexpr const char* kNetwork = "network.net";
inline constexpr const char* kPartition = "partition.clu";
inline constexpr const char* kReport = "report.json";
}  // namespace files

struct PipelineResult {
  PipelineReport report;
  std::map<std::string, std::string> outputs;  ///< file name -> contents
};

CitationCorpus load_corpus(const std::filesystem::path& citations, const std::filesystem::path& metadata = {},
                           std::string label = {});

/// Runs every stage in memory. Errors are rethrown with the failing stage's name.
PipelineResult run_pipeline(const CitationCorpus& corpus, const RunConfig& config);

/// Loads the corpus named in `config`, runs the pipeline and writes all outputs to `config.output_dir`.
PipelineResult run_pipeline(const RunConfig& config);

void write_outputs(const std::filesystem::path& dir, const std::map<std::string, std::string>& outputs);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace citeco
