#include "citeco/report.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include "citeco/csv.hpp"
#include "json.hpp"

namespace citeco {

namespace {

std::string pajek_label(const std::string& text) {
  std::string out = text;
  std::replace(out.begin(), out.end(), '"', '\'');
  return out;
}

void write_network(std::ostringstream& out, const SimilarityGraph& graph, const std::vector<std::string>& labels) {
  out << "*Vertices " << graph.node_count() << '\n';
  for (std::size_t i = 0; i < labels.size(); ++i) out << i + 1 << " \"" << pajek_label(labels[i]) << "\"\n";
  out << "*Edges\n";
  for (const auto& e : graph.edges) {
    out << e.a + 1 << ' ' << e.b + 1 << ' ' << csv::format_significant(e.weight, 6) << '\n';
  }
}

bool starts_with_keyword(std::string_view line, std::string_view keyword) {
  if (line.size() < keyword.size()) return false;
  for (std::size_t i = 0; i < keyword.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(line[i])) != keyword[i]) return false;
  }
  return true;
}

bool next_content_line(csv::LineReader& reader, std::string& line) {
  while (reader.next(line)) {
    if (!line.empty() && line.front() != '%') return true;
  }
  return false;
}

}  // namespace

PajekFiles write_pajek(const SimilarityGraph& graph, const FactorAssignment& assignment, const CitationCorpus& labels,
                       const PajekOptions& options) {
  std::vector<std::string> names;
  std::ostringstream partition;
  partition << "*Vertices " << graph.node_count() << '\n';
  for (const auto& id : graph.nodes) {
    const bool is_focal = options.focal && *options.focal == id;
    const Eigen::Index factor = assignment.factor_of(id);
    if (factor < 0 && !is_focal) throw IncompleteAssignmentError(id);
    partition << (is_focal ? 0 : factor + 1) << '\n';

    std::string name = id;
    std::optional<double> impact;
    if (labels.contains(id)) {
      const auto& j = labels.journal(id);
      name = j.label();
      impact = j.impact_factor;
    }
    if (options.min_impact_factor && !(impact && *impact > *options.min_impact_factor)) name.clear();
    names.push_back(std::move(name));
  }
  std::ostringstream network;
  write_network(network, graph, names);
  return {network.str(), partition.str()};
}

PajekNetwork read_pajek(std::istream& network, std::istream* partition) {
  PajekNetwork out;
  csv::LineReader reader(network);
  std::string line;
  if (!next_content_line(reader, line) || !starts_with_keyword(line, "*vertices")) {
    throw ParseError(reader.line_number(), "expected '*Vertices N'");
  }
  auto n = csv::parse_int(std::string_view(line).substr(10));
  if (!n || *n < 0) throw ParseError(reader.line_number(), "bad vertex count");
  for (std::int64_t i = 0; i < *n; ++i) {
    if (!next_content_line(reader, line)) throw ParseError(reader.line_number(), "missing vertex line");
    std::istringstream fields(line);
    std::int64_t index = 0;
    if (!(fields >> index) || index != i + 1) throw ParseError(reader.line_number(), "vertex lines must be numbered 1..N");
    const auto open = line.find('"');
    const auto close = line.rfind('"');
    if (open == std::string::npos || close == open) throw ParseError(reader.line_number(), "vertex label must be quoted");
    out.labels.push_back(line.substr(open + 1, close - open - 1));
  }
  if (!next_content_line(reader, line) || !starts_with_keyword(line, "*edges")) {
    throw ParseError(reader.line_number(), "expected '*Edges'");
  }
  while (next_content_line(reader, line)) {
    std::istringstream fields(line);
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::string w;
    if (!(fields >> a >> b >> w)) throw ParseError(reader.line_number(), "edge line must be 'i j w'");
    auto weight = csv::parse_double(w);
    if (!weight || a < 1 || b < 1 || a > *n || b > *n || a == b) throw ParseError(reader.line_number(), "bad edge");
    out.edges.push_back({std::min(a, b) - 1, std::max(a, b) - 1, *weight});
  }

  if (partition) {
    csv::LineReader clu(*partition);
    if (!next_content_line(clu, line) || !starts_with_keyword(line, "*vertices")) {
      throw ParseError(clu.line_number(), "expected '*Vertices N'");
    }
    auto m = csv::parse_int(std::string_view(line).substr(10));
    if (!m || *m != *n) throw ParseError(clu.line_number(), "partition size differs from network");
    while (next_content_line(clu, line)) {
      auto v = csv::parse_int(line);
      if (!v) throw ParseError(clu.line_number(), "partition entry must be an integer");
      out.partition.push_back(static_cast<long>(*v));
    }
    if (static_cast<std::int64_t>(out.partition.size()) != *n) {
      throw ParseError(clu.line_number(), "partition has the wrong number of entries");
    }
  }
  return out;
}

std::string write_graph_file(const SimilarityGraph& graph) {
  std::ostringstream out;
  out << "% threshold " << csv::format_exact(graph.threshold) << '\n';
  write_network(out, graph, graph.nodes);
  return out.str();
}

SimilarityGraph read_graph_file(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream stream(text);
  SimilarityGraph g;
  std::string first;
  std::getline(stream, first);
  if (first.rfind("% threshold ", 0) == 0) {
    if (auto t = csv::parse_double(std::string_view(first).substr(12))) g.threshold = *t;
  }
  stream.clear();
  stream.seekg(0);
  auto net = read_pajek(stream);
  g.nodes = std::move(net.labels);
  g.edges = std::move(net.edges);
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& l, const auto& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  });
  return g;
}

// ---------------------------------------------------------------------------

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const DenseVector<double>& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json configuration(const RunConfig& c) {
  Json j;
  j["corpus_path"] = c.corpus_path;
  j["metadata_path"] = c.metadata_path;
  j["corpus_label"] = c.corpus_label;
  j["focal"] = c.focal;
  j["direction"] = to_string(c.direction);
  j["min_count"] = c.min_count;
  j["factors"] = c.auto_factors ? Json("auto") : Json(c.factors);
  j["threshold"] = c.threshold;
  j["orientation"] = to_string(c.orientation);
  j["zero_diagonal"] = c.zero_diagonal;
  j["drop_isolates"] = c.drop_isolates;
  j["classification"] = to_string(c.classification);
  j["kaiser_normalize"] = c.varimax.kaiser_normalize;
  j["varimax_tolerance"] = c.varimax.tolerance;
  j["varimax_max_sweeps"] = c.varimax.max_sweeps;
  j["min_impact_factor"] = c.min_impact_factor ? Json(*c.min_impact_factor) : Json(nullptr);
  j["factor_labels"] = c.factor_labels;
  j["timestamp"] = c.timestamp;
  return j;
}

Json methods(const PipelineReport& r) {
  const auto& c = r.config;
  Json j;
  j["matrix_axes"] = "environment members only (rows and columns)";
  j["matrix_cell"] = "cell(i, j) = citations from journal i to journal j";
  j["diagonal"] = c.zero_diagonal ? "self-citations zeroed" : "self-citations retained";
  j["isolate_rule"] = c.drop_isolates ? "drop non-focal journals whose " + std::string(to_string(c.orientation)) +
                                            " profile is zero outside the focal journal"
                                      : "disabled";
  j["profiles"] = c.orientation == ProfileOrientation::Rows ? "row profiles (citations given)"
                                                            : "column profiles (citations received)";
  j["extraction"] = "principal components of the Pearson correlation matrix";
  j["factor_count_mode"] = c.auto_factors ? "kaiser (eigenvalue > 1)" : "fixed";
  j["rotation"] = "varimax";
  j["variance_proportion"] = "sum of squared loadings / number of journals";
  j["classification"] = c.classification == ClassificationMode::Absolute ? "argmax |loading|, ties to lower factor"
                                                                         : "argmax signed loading, ties to lower factor";
  j["similarity"] = "cosine over environment-restricted profiles";
  j["edge_rule"] = "cosine > threshold (strict)";
  j["path_length"] = "hop count on the thresholded graph";
  j["betweenness_normalization"] = "raw / ((n - 1)(n - 2) / 2), undirected";
  j["aggregate_rule"] = "focal journal excluded from every category";
  j["label_rule"] = c.min_impact_factor ? "label shown when impact factor > cutoff" : "all labels shown";
  return j;
}

}  // namespace

std::string emit_report(const PipelineReport& r) {
  Json doc;
  doc["tool"] = {{"name", "citeco"}, {"version", kToolVersion}};
  if (r.generated_at) doc["generated_at"] = *r.generated_at;
  doc["corpus"] = {{"label", r.config.corpus_label}, {"journals", r.corpus_journals}, {"records", r.corpus_records}};
  doc["focal"] = r.config.focal;
  doc["direction"] = to_string(r.config.direction);
  doc["configuration"] = configuration(r.config);
  doc["methods"] = methods(r);

  Json env;
  env["size_before_drop"] = r.environment.size();
  env["size_after_drop"] = r.matrix_size;
  env["dropped"] = r.dropped;
  Json members = Json::array();
  for (std::size_t i = 0; i < r.environment.members.size(); ++i) {
    members.push_back({{"id", r.environment.members[i]}, {"count", r.environment.counts[i]}});
  }
  env["members"] = members;
  doc["environment"] = env;

  Json factors;
  factors["k"] = r.factor_count;
  factors["unrotated_eigenvalues"] = to_json(r.unrotated.eigenvalues);
  factors["eigenvalues"] = to_json(r.model.eigenvalues);
  factors["variance_proportions"] = to_json(r.model.variance_proportions);
  if (r.model.rotation) {
    const auto& rot = *r.model.rotation;
    factors["varimax"] = {{"sweeps", rot.sweeps},
                          {"converged", rot.converged},
                          {"kaiser_normalized", rot.kaiser_normalized},
                          {"criterion", rot.criterion_history}};
  }
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < r.model.p(); ++i) {
    const auto& id = r.model.journals[static_cast<std::size_t>(i)];
    rows.push_back({{"id", id},
                    {"factor", r.assignment.factor_of(id) + 1},
                    {"loadings", to_json(r.model.loadings.row(i).transpose())},
                    {"communality", r.model.communalities(i)}});
  }
  factors["journals"] = rows;
  doc["factors"] = factors;

  Json agg;
  agg["direction"] = to_string(r.aggregate.direction);
  agg["total"] = r.aggregate.total();
  Json entries = Json::array();
  for (const auto& e : r.aggregate.entries) {
    entries.push_back({{"factor", e.factor + 1}, {"label", e.label}, {"members", e.members}, {"citations", e.citations}});
  }
  agg["entries"] = entries;
  doc["aggregate"] = agg;

  doc["graph"] = {{"threshold", r.config.threshold},
                  {"nodes", r.centrality.node_count},
                  {"edges", r.graph_edges},
                  {"nodes_with_edges", r.graph_connected_nodes},
                  {"labeled_nodes", r.labeled_nodes},
                  {"components", r.centrality.component_count}};

  Json ranking = Json::array();
  for (const auto& e : r.centrality.entries) {
    ranking.push_back({{"id", e.id}, {"raw", e.raw}, {"normalized", e.normalized}, {"percent", e.normalized * 100.0}});
  }
  doc["centrality"] = ranking;
  doc["warnings"] = r.warnings;
  return doc.dump(2) + "\n";
}

}  // namespace citeco
