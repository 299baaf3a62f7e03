#pragma once

#include <optional>
#include <string>
#include <vector>

#include "citeco/corpus.hpp"
#include "citeco/factors.hpp"
#include "citeco/matrix.hpp"

namespace citeco {

inline constexpr const char* kToolVersion = "1.0.0";

/// Every knob of a pipeline run.
struct RunConfig {
  std::string corpus_path;
  std::string metadata_path;  ///< empty when absent
  std::string corpus_label;
  JournalId focal;
  Direction direction = Direction::Import;
  CitationCount min_count = 2;
  Eigen::Index factors = 5;
  bool auto_factors = false;  ///< Kaiser eigenvalue > 1 selection instead of `factors`
  double threshold = 0.2;
  ProfileOrientation orientation = ProfileOrientation::Columns;
  bool zero_diagonal = false;
  bool drop_isolates = true;
  ClassificationMode classification = ClassificationMode::Absolute;
  VarimaxOptions varimax;
  std::optional<double> min_impact_factor = 1.4;
  std::vector<std::string> factor_labels;
  std::string output_dir = "out";
  bool timestamp = false;
};

}  // namespace citeco
