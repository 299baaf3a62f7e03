#include "citeco/stages.hpp"

#include <sstream>

namespace citeco::stages {

namespace {

template <typename T, typename Reader>
T parse(const std::string& text, Reader reader) {
  std::istringstream in(text);
  return reader(in);
}

template <typename Writer, typename... Args>
std::string render(Writer writer, const Args&... args) {
  std::ostringstream out;
  writer(out, args...);
  return out.str();
}

}  // namespace

std::string env(const CitationCorpus& corpus, std::string_view focal, Direction direction, CitationCount min_count) {
  return render(write_environment, extract_environment(corpus, focal, direction, min_count));
}

std::string matrix(const CitationCorpus& corpus, const std::string& environment_csv, ProfileOrientation orientation,
                   bool zero_diagonal, bool drop_isolates) {
  const auto environment = parse<Environment>(environment_csv, read_environment);
  auto m = build_matrix(corpus, environment, {zero_diagonal});
  if (drop_isolates) m = citeco::drop_isolates(m, orientation, environment.focal);
  return render(write_matrix, m);
}

std::string factors(const std::string& matrix_csv, const FactorSettings& settings) {
  const auto m = parse<CitationMatrix>(matrix_csv, read_matrix);
  const auto analysis = analyze_factors(m, settings);
  return render(write_factor_report, analysis.rotated, analysis.assignment);
}

std::string cosine(const std::string& matrix_csv, ProfileOrientation orientation) {
  const auto m = parse<CitationMatrix>(matrix_csv, read_matrix);
  return render(write_similarity, cosine_matrix(m, orientation));
}

std::string graph(const std::string& cosine_csv, double threshold) {
  return write_graph_file(build_graph(parse<SimilarityMatrix<double>>(cosine_csv, read_similarity), threshold));
}

std::string centrality(const std::string& graph_file) {
  return render(write_centrality, betweenness(parse<SimilarityGraph>(graph_file, read_graph_file)));
}

std::string aggregate(const std::string& matrix_csv, const std::string& factors_csv, Direction direction,
                      const std::vector<std::string>& labels) {
  const auto m = parse<CitationMatrix>(matrix_csv, read_matrix);
  const auto report = parse<FactorReport>(factors_csv, read_factor_report);
  if (m.journals.empty()) throw DegenerateError("empty matrix");
  return render(write_aggregate, macro_aggregate(m, report.assignment, m.journals.front(), direction, labels));
}

PajekFiles export_pajek(const std::string& graph_file, const std::string& factors_csv, const CitationCorpus& labels,
                        std::optional<double> min_impact_factor) {
  const auto g = parse<SimilarityGraph>(graph_file, read_graph_file);
  const auto report = parse<FactorReport>(factors_csv, read_factor_report);
  if (g.nodes.empty()) throw DegenerateError("empty graph");
  return write_pajek(g, report.assignment, labels, {min_impact_factor, g.nodes.front()});
}

}  // namespace citeco::stages
