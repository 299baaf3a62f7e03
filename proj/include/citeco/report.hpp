#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "citeco/aggregates.hpp"
#include "citeco/centrality.hpp"
#include "citeco/config.hpp"
#include "citeco/similarity.hpp"

namespace citeco {

// ---------------------------------------------------------------------------
// Pajek .net / .clu

struct PajekOptions {
  /// Vertices whose impact factor is missing or not above the cutoff get an empty label.
  std::optional<double> min_impact_factor;
  /// Journal placed in the reserved partition 0.
  std::optional<JournalId> focal;
};

struct PajekFiles {
  std::string network;
  std::string partition;
};

/// Display export: labels from corpus metadata, factors (1-based) as the partition.
PajekFiles write_pajek(const SimilarityGraph& graph, const FactorAssignment& assignment, const CitationCorpus& labels,
                       const PajekOptions& options = {});

struct PajekNetwork {
  std::vector<std::string> labels;
  std::vector<SimilarityEdge> edges;  ///< 0-based, a < b
  std::vector<long> partition;        ///< empty when no partition text was given
};

PajekNetwork read_pajek(std::istream& network, std::istream* partition = nullptr);

/// Stage file for the similarity graph: Pajek network with journal ids as labels and a
/// leading `% threshold` comment.
std::string write_graph_file(const SimilarityGraph& graph);
SimilarityGraph read_graph_file(std::istream& in);

// ---------------------------------------------------------------------------
// Pipeline report

struct PipelineReport {
  RunConfig config;
  std::size_t corpus_journals = 0;
  std::size_t corpus_records = 0;
  Environment environment;
  std::vector<JournalId> dropped;
  std::size_t matrix_size = 0;
  Eigen::Index factor_count = 0;
  FactorModel<double> unrotated;
  FactorModel<double> model;
  FactorAssignment assignment;
  MacroAggregate aggregate;
  std::size_t graph_edges = 0;
  std::size_t graph_connected_nodes = 0;
  std::size_t labeled_nodes = 0;
  CentralityReport centrality;
  std::vector<std::string> warnings;
  std::optional<std::string> generated_at;
};

/// Deterministic JSON document: fixed key order, shortest round-trip number formatting.
std::string emit_report(const PipelineReport& report);

}  // namespace citeco
