#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "citeco/similarity.hpp"

namespace citeco {

struct CentralityEntry {
  JournalId id;
  double raw = 0;
  double normalized = 0;  ///< raw / ((n-1)(n-2)/2)
};

struct CentralityReport {
  std::vector<CentralityEntry> entries;  ///< descending normalized value, ties by id
  std::size_t node_count = 0;
  std::size_t component_count = 0;

  const CentralityEntry* find(std::string_view id) const;
};

/// Raw betweenness per node in graph order: for every unordered pair {s, t}, the fraction of
/// hop-count shortest s-t paths passing through the node.
std::vector<double> raw_betweenness(const SimilarityGraph& graph);

/// Freeman betweenness on the unweighted graph, normalized for undirected graphs. Requires n >= 3.
CentralityReport betweenness(const SimilarityGraph& graph);

/// Centrality CSV: `id,raw,normalized,percent`; percent is rounded to one decimal.
void write_centrality(std::ostream& out, const CentralityReport& report);

}  // namespace citeco
