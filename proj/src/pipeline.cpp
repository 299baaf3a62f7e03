#include "citeco/pipeline.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "citeco/stages.hpp"

namespace citeco {

namespace {

template <typename Fn>
auto in_stage(const char* name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string("stage '") + name + "': " + e.what());
  }
}

template <typename Writer, typename... Args>
std::string render(Writer writer, const Args&... args) {
  std::ostringstream out;
  writer(out, args...);
  return out.str();
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Usage, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Usage, "cannot write '" + path.string() + "'");
  out << text;
}

CitationCorpus load_corpus(const std::filesystem::path& citations, const std::filesystem::path& metadata,
                           std::string label) {
  if (label.empty()) label = citations.stem().string();
  std::istringstream in(read_text(citations));
  auto corpus = parse_citations(in, std::move(label));
  if (!metadata.empty()) {
    std::istringstream meta(read_text(metadata));
    merge_metadata(corpus, meta);
  }
  return corpus;
}

PipelineResult run_pipeline(const CitationCorpus& corpus, const RunConfig& config) {
  PipelineResult result;
  auto& report = result.report;
  auto& out = result.outputs;
  report.config = config;
  report.config.corpus_label = corpus.label();
  report.corpus_journals = corpus.journals().size();
  report.corpus_records = corpus.record_count();

  report.environment = in_stage("env", [&] {
    return extract_environment(corpus, config.focal, config.direction, config.min_count);
  });
  out[files::kEnvironment] = render(write_environment, report.environment);

  const auto matrix = in_stage("matrix", [&] {
    auto full = build_matrix(corpus, report.environment, {config.zero_diagonal});
    return config.drop_isolates ? drop_isolates(full, config.orientation, config.focal) : full;
  });
  report.matrix_size = static_cast<std::size_t>(matrix.size());
  for (const auto& id : report.environment.members) {
    if (matrix.index_of(id) < 0) report.dropped.push_back(id);
  }
  out[files::kMatrix] = render(write_matrix, matrix);

  const FactorSettings settings{config.orientation, config.factors, config.auto_factors, config.varimax,
                                config.classification};
  auto analysis = in_stage("factors", [&] { return analyze_factors(matrix, settings); });
  out[files::kFactors] = render(write_factor_report, analysis.rotated, analysis.assignment);
  report.factor_count = analysis.k;
  report.warnings = analysis.rotated.warnings;

  const auto sim = in_stage("cosine", [&] { return cosine_matrix(matrix, config.orientation); });
  out[files::kCosine] = render(write_similarity, sim);

  const auto graph = in_stage("graph", [&] { return build_graph(sim, config.threshold); });
  out[files::kGraph] = write_graph_file(graph);
  report.graph_edges = graph.edges.size();
  report.graph_connected_nodes = graph.connected_node_count();

  report.centrality = in_stage("centrality", [&] { return betweenness(graph); });
  out[files::kCentrality] = render(write_centrality, report.centrality);

  report.aggregate = in_stage("aggregate", [&] {
    return macro_aggregate(matrix, analysis.assignment, config.focal, config.direction, config.factor_labels);
  });
  report.aggregate.corpus_label = corpus.label();
  out[files::kAggregate] = render(write_aggregate, report.aggregate);

  const auto pajek = in_stage("export", [&] {
    return write_pajek(graph, analysis.assignment, corpus, {config.min_impact_factor, config.focal});
  });
  out[files::kNetwork] = pajek.network;
  out[files::kPartition] = pajek.partition;
  {
    std::istringstream net(pajek.network);
    const auto parsed = read_pajek(net);
    for (const auto& label : parsed.labels) report.labeled_nodes += label.empty() ? 0 : 1;
  }

  report.unrotated = std::move(analysis.unrotated);
  report.model = std::move(analysis.rotated);
  report.assignment = std::move(analysis.assignment);
  if (config.timestamp) report.generated_at = utc_now();
  out[files::kReport] = emit_report(report);
  return result;
}

void write_outputs(const std::filesystem::path& dir, const std::map<std::string, std::string>& outputs) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Usage, "cannot create '" + dir.string() + "': " + ec.message());
  for (const auto& [name, text] : outputs) write_text(dir / name, text);
}

PipelineResult run_pipeline(const RunConfig& config) {
  const auto corpus = in_stage("parse", [&] {
    return load_corpus(config.corpus_path, config.metadata_path, config.corpus_label);
  });
  auto result = run_pipeline(corpus, config);
  write_outputs(config.output_dir, result.outputs);
  return result;
}

}  // namespace citeco
