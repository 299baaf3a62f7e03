#include "citeco/aggregates.hpp"

#include <numeric>
#include <ostream>

#include "citeco/csv.hpp"

namespace citeco {

CitationCount MacroAggregate::total() const {
  return std::accumulate(entries.begin(), entries.end(), CitationCount{0},
                         [](CitationCount acc, const MacroEntry& e) { return acc + e.citations; });
}

MacroAggregate macro_aggregate(const CitationMatrix& matrix, const FactorAssignment& assignment,
                               std::string_view focal, Direction direction, const std::vector<std::string>& labels) {
  const Eigen::Index f = matrix.index_of(focal);
  if (f < 0) throw MissingJournalError(std::string(focal));

  MacroAggregate out;
  out.direction = direction;
  out.focal = std::string(focal);
  for (Eigen::Index k = 0; k < assignment.factor_count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    out.entries.push_back({k, idx < labels.size() ? labels[idx] : std::string{}, {}, 0});
  }
  for (Eigen::Index j = 0; j < matrix.size(); ++j) {
    if (j == f) continue;
    const auto& id = matrix.journals[static_cast<std::size_t>(j)];
    const Eigen::Index factor = assignment.factor_of(id);
    if (factor < 0 || factor >= assignment.factor_count) throw IncompleteAssignmentError(id);
    auto& entry = out.entries[static_cast<std::size_t>(factor)];
    entry.members.push_back(id);
    entry.citations += direction == Direction::Import ? matrix.cells(f, j) : matrix.cells(j, f);
  }
  return out;
}

void write_aggregate(std::ostream& out, const MacroAggregate& aggregate) {
  out << "direction,factor,label,members,citations\n";
  for (const auto& e : aggregate.entries) {
    out << csv::join({std::string(to_string(aggregate.direction)), std::to_string(e.factor + 1), e.label,
                      std::to_string(e.members.size()), std::to_string(e.citations)})
        << '\n';
  }
}

}  // namespace citeco
