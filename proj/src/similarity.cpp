#include "citeco/similarity.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "citeco/csv.hpp"

namespace citeco {

void write_similarity(std::ostream& out, const SimilarityMatrix<double>& sim) {
  std::vector<std::string> header{""};
  header.insert(header.end(), sim.journals.begin(), sim.journals.end());
  out << csv::join(header) << '\n';
  for (Eigen::Index i = 0; i < sim.size(); ++i) {
    out << csv::quote(sim.journals[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < sim.size(); ++j) out << ',' << csv::format_exact(sim.cells(i, j));
    out << '\n';
  }
}

SimilarityMatrix<double> read_similarity(std::istream& in) {
  csv::LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(1, "empty similarity file");
  auto header = csv::split(line);
  if (!header || header->size() < 2 || !header->front().empty()) {
    throw ParseError(1, "similarity header must start with an empty corner cell followed by journal ids");
  }
  SimilarityMatrix<double> sim;
  sim.journals.assign(header->begin() + 1, header->end());
  const auto n = static_cast<Eigen::Index>(sim.journals.size());
  sim.cells = DenseMatrix<double>::Zero(n, n);
  Eigen::Index row = 0;
  while (reader.next(line)) {
    if (line.empty()) continue;
    const auto ln = reader.line_number();
    auto fields = csv::split(line);
    if (!fields || static_cast<Eigen::Index>(fields->size()) != n + 1) throw ParseError(ln, "wrong number of fields");
    if (row >= n) throw ParseError(ln, "more rows than columns");
    if ((*fields)[0] != sim.journals[static_cast<std::size_t>(row)]) throw ParseError(ln, "row id does not match column order");
    for (Eigen::Index j = 0; j < n; ++j) {
      auto v = csv::parse_double((*fields)[static_cast<std::size_t>(j + 1)]);
      if (!v) throw ParseError(ln, "bad number");
      sim.cells(row, j) = *v;
    }
    ++row;
  }
  if (row != n) throw ParseError(reader.line_number(), "similarity matrix is not square");
  return sim;
}

std::vector<std::vector<Eigen::Index>> SimilarityGraph::adjacency() const {
  std::vector<std::vector<Eigen::Index>> adj(nodes.size());
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.a)].push_back(e.b);
    adj[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  return adj;
}

std::size_t SimilarityGraph::connected_node_count() const {
  std::vector<bool> touched(nodes.size(), false);
  for (const auto& e : edges) {
    touched[static_cast<std::size_t>(e.a)] = true;
    touched[static_cast<std::size_t>(e.b)] = true;
  }
  return static_cast<std::size_t>(std::count(touched.begin(), touched.end(), true));
}

SimilarityGraph build_graph(const SimilarityMatrix<double>& sim, double threshold) {
  if (!(threshold >= 0.0 && threshold < 1.0)) throw Error(ErrorKind::Usage, "threshold must lie in [0, 1)");
  SimilarityGraph g;
  g.nodes = sim.journals;
  g.threshold = threshold;
  for (Eigen::Index a = 0; a < sim.size(); ++a) {
    for (Eigen::Index b = a + 1; b < sim.size(); ++b) {
      if (sim.cells(a, b) > threshold) g.edges.push_back({a, b, sim.cells(a, b)});
    }
  }
  return g;
}

}  // namespace citeco
