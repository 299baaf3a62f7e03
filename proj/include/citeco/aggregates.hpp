#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "citeco/factors.hpp"

namespace citeco {

struct MacroEntry {
  Eigen::Index factor = 0;  ///< 0-based
  std::string label;
  std::vector<JournalId> members;
  CitationCount citations = 0;
};

/// Citation flow between the focal journal and each factor-defined category ("macro-journal").
struct MacroAggregate {
  Direction direction = Direction::Import;
  JournalId focal;
  std::string corpus_label;
  std::vector<MacroEntry> entries;  ///< one per factor, in factor order

  CitationCount total() const;
};

/// Import sums cells(focal, j), Export sums cells(j, focal), over the non-focal members of each
/// factor. The focal journal belongs to no category.
MacroAggregate macro_aggregate(const CitationMatrix& matrix, const FactorAssignment& assignment,
                               std::string_view focal, Direction direction,
                               const std::vector<std::string>& labels = {});

/// Aggregate CSV: `direction,factor,label,members,citations`.
void write_aggregate(std::ostream& out, const MacroAggregate& aggregate);

}  // namespace citeco
