#include "citeco/centrality.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <queue>
#include <stack>

#include "citeco/csv.hpp"

namespace citeco {

const CentralityEntry* CentralityReport::find(std::string_view id) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.id == id; });
  return it == entries.end() ? nullptr : &*it;
}

std::vector<double> raw_betweenness(const SimilarityGraph& graph) {
  const auto n = graph.node_count();
  const auto adj = graph.adjacency();
  std::vector<double> centrality(n, 0.0);

  // Single-source dependency accumulation, one BFS per source.
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<long> dist(n);
  std::vector<std::vector<std::size_t>> preds(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1L);
    for (auto& p : preds) p.clear();

    std::vector<std::size_t> order;
    std::queue<std::size_t> queue;
    sigma[s] = 1.0;
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop();
      order.push_back(v);
      for (auto wi : adj[v]) {
        const auto w = static_cast<std::size_t>(wi);
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto w = *it;
      for (auto v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) centrality[w] += delta[w];
    }
  }
  // Every unordered pair was visited from both endpoints.
  for (auto& c : centrality) c /= 2.0;
  return centrality;
}

namespace {

std::size_t count_components(const SimilarityGraph& graph) {
  const auto adj = graph.adjacency();
  std::vector<bool> seen(graph.node_count(), false);
  std::size_t components = 0;
  for (std::size_t s = 0; s < seen.size(); ++s) {
    if (seen[s]) continue;
    ++components;
    std::stack<std::size_t> stack;
    stack.push(s);
    seen[s] = true;
    while (!stack.empty()) {
      const auto v = stack.top();
      stack.pop();
      for (auto w : adj[v]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push(static_cast<std::size_t>(w));
        }
      }
    }
  }
  return components;
}

}  // namespace

CentralityReport betweenness(const SimilarityGraph& graph) {
  const auto n = graph.node_count();
  if (n < 3) throw DegenerateError("betweenness needs at least 3 nodes, graph has " + std::to_string(n));
  const auto raw = raw_betweenness(graph);
  const double pairs = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;

  CentralityReport report;
  report.node_count = n;
  report.component_count = count_components(graph);
  for (std::size_t i = 0; i < n; ++i) {
    report.entries.push_back({graph.nodes[i], raw[i], raw[i] / pairs});
  }
  std::sort(report.entries.begin(), report.entries.end(), [](const auto& a, const auto& b) {
    return a.normalized != b.normalized ? a.normalized > b.normalized : a.id < b.id;
  });
  return report;
}

void write_centrality(std::ostream& out, const CentralityReport& report) {
  out << "id,raw,normalized,percent\n";
  for (const auto& e : report.entries) {
    char percent[32];
    std::snprintf(percent, sizeof percent, "%.1f", e.normalized * 100.0);
    out << csv::quote(e.id) << ',' << csv::format_exact(e.raw) << ',' << csv::format_exact(e.normalized) << ','
        << percent << '\n';
  }
}

}  // namespace citeco
