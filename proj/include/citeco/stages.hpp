#pragma once

// Individual pipeline stages over their file formats. Composing them reproduces the
// outputs of run_pipeline byte-for-byte.

#include <optional>
#include <string>
#include <vector>

#include "citeco/report.hpp"

namespace citeco::stages {

std::string env(const CitationCorpus& corpus, std::string_view focal, Direction direction, CitationCount min_count);

/// Builds the matrix for a stored environment and drops isolates (focal = first member).
std::string matrix(const CitationCorpus& corpus, const std::string& environment_csv, ProfileOrientation orientation,
                   bool zero_diagonal, bool drop_isolates);

std::string factors(const std::string& matrix_csv, const FactorSettings& settings);

std::string cosine(const std::string& matrix_csv, ProfileOrientation orientation);

std::string graph(const std::string& cosine_csv, double threshold);

std::string centrality(const std::string& graph_file);

/// Focal = first journal of the matrix.
std::string aggregate(const std::string& matrix_csv, const std::string& factors_csv, Direction direction,
                      const std::vector<std::string>& labels);

/// Focal = first node of the graph; it is placed in partition 0.
PajekFiles export_pajek(const std::string& graph_file, const std::string& factors_csv, const CitationCorpus& labels,
                        std::optional<double> min_impact_factor);

}  // namespace citeco::stages
