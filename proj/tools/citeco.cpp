// citeco: citation-environment analysis of a focal journal.
//
//   citeco run --corpus citations.csv --metadata journals.csv --focal F --out out/
//   citeco env --corpus citations.csv --focal F > environment.csv
//   citeco matrix --corpus citations.csv --env environment.csv > matrix.csv
//   citeco factors --matrix matrix.csv > factors.csv
//   citeco cosine --matrix matrix.csv > cosine.csv
//   citeco graph --cosine cosine.csv > graph.net
//   citeco centrality --graph graph.net > centrality.csv
//   citeco aggregate --matrix matrix.csv --factor-report factors.csv > aggregate.csv
//   citeco export --graph graph.net --factor-report factors.csv --metadata journals.csv

#include <iostream>

#include "CLI11.hpp"
#include "citeco/pipeline.hpp"
#include "citeco/stages.hpp"

namespace {

using namespace citeco;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text(path, text);
  }
}

/// "5" or "auto".
void apply_factor_count(const std::string& text, Eigen::Index& k, bool& automatic) {
  if (text == "auto") {
    automatic = true;
    return;
  }
  try {
    std::size_t used = 0;
    k = std::stol(text, &used);
    if (used != text.size() || k < 1) throw std::invalid_argument(text);
    automatic = false;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Usage, "--factors must be a positive integer or 'auto', got '" + text + "'");
  }
}

std::optional<double> parse_cutoff(const std::string& text) {
  if (text == "none") return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Usage, "--min-impact-factor must be a number or 'none', got '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Citation-environment analysis: factors, macro-journal aggregates and betweenness of a focal journal"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  RunConfig config;
  std::string factor_text = "5";
  std::string cutoff_text = "1.4";
  bool keep_isolates = false;
  bool no_kaiser = false;
  std::string direction_text = "import";
  std::string orientation_text = "columns";
  std::string mode_text = "absolute";

  auto add_orientation = [&](CLI::App* cmd) {
    cmd->add_option("--orientation", orientation_text, "Profile vectors: rows (citations given) or columns (received)")
        ->check(CLI::IsMember({"rows", "columns"}));
  };
  auto add_varimax = [&](CLI::App* cmd) {
    cmd->add_option("--factors,-k", factor_text, "Number of factors, or 'auto' for eigenvalue > 1");
    cmd->add_option("--classification", mode_text, "Max-loading rule: absolute or signed")
        ->check(CLI::IsMember({"absolute", "signed"}));
    cmd->add_flag("--no-kaiser", no_kaiser, "Disable Kaiser row normalization before varimax");
    cmd->add_option("--tolerance", config.varimax.tolerance, "Varimax convergence tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-sweeps", config.varimax.max_sweeps, "Varimax sweep cap")->check(CLI::PositiveNumber);
  };
  auto add_direction = [&](CLI::App* cmd) {
    cmd->add_option("--direction", direction_text, "import (journals the focal cites) or export (journals citing it)")
        ->check(CLI::IsMember({"import", "export"}));
  };

  // run
  auto* run = app.add_subcommand("run", "Full pipeline; writes every output file into --out");
  run->add_option("--corpus", config.corpus_path, "Citation CSV (citing,cited,count)")->required();
  run->add_option("--metadata", config.metadata_path, "Journal CSV (id,name,impact_factor)");
  run->add_option("--label", config.corpus_label, "Corpus label (defaults to the corpus file stem)");
  run->add_option("--focal", config.focal, "Focal journal id")->required();
  add_direction(run);
  run->add_option("--min-count", config.min_count, "Minimum focal-linked citations for membership")
      ->check(CLI::PositiveNumber);
  add_varimax(run);
  run->add_option("--threshold", config.threshold, "Cosine edge threshold (strict)")->check(CLI::Range(0.0, 1.0));
  add_orientation(run);
  run->add_flag("--zero-diagonal", config.zero_diagonal, "Zero self-citation cells");
  run->add_flag("--keep-isolates", keep_isolates, "Skip the isolate-drop rule");
  run->add_option("--min-impact-factor", cutoff_text, "Label cutoff for the Pajek export, or 'none'");
  run->add_option("--labels", config.factor_labels, "Factor labels in factor order")->delimiter(',');
  run->add_option("--out", config.output_dir, "Output directory");
  run->add_flag("--timestamp", config.timestamp, "Add a generation timestamp to report.json");
  // Config files are read by the root app; values for `run` live under a [run] section.
  app.set_config("--config", "", "TOML/INI file with a [run] section; command-line values win");
  run->fallthrough();

  // stages
  std::string corpus_path, metadata_path, env_path, matrix_path, factors_path, cosine_path, graph_path, output;
  std::string network_out = "network.net", partition_out = "partition.clu";

  auto* env = app.add_subcommand("env", "Extract the focal journal's environment");
  env->add_option("--corpus", corpus_path)->required();
  env->add_option("--focal", config.focal)->required();
  add_direction(env);
  env->add_option("--min-count", config.min_count)->check(CLI::PositiveNumber);
  env->add_option("--output,-o", output);

  auto* matrix = app.add_subcommand("matrix", "Citation matrix over a stored environment, isolates dropped");
  matrix->add_option("--corpus", corpus_path)->required();
  matrix->add_option("--env", env_path)->required();
  add_orientation(matrix);
  matrix->add_flag("--zero-diagonal", config.zero_diagonal);
  matrix->add_flag("--keep-isolates", keep_isolates);
  matrix->add_option("--output,-o", output);

  auto* factors = app.add_subcommand("factors", "Factor analysis with varimax rotation");
  factors->add_option("--matrix", matrix_path)->required();
  add_orientation(factors);
  add_varimax(factors);
  factors->add_option("--output,-o", output);

  auto* cosine = app.add_subcommand("cosine", "Cosine similarity matrix");
  cosine->add_option("--matrix", matrix_path)->required();
  add_orientation(cosine);
  cosine->add_option("--output,-o", output);

  auto* graph = app.add_subcommand("graph", "Threshold a cosine matrix into a graph");
  graph->add_option("--cosine", cosine_path)->required();
  graph->add_option("--threshold", config.threshold)->check(CLI::Range(0.0, 1.0));
  graph->add_option("--output,-o", output);

  auto* centrality = app.add_subcommand("centrality", "Normalized betweenness centrality");
  centrality->add_option("--graph", graph_path)->required();
  centrality->add_option("--output,-o", output);

  auto* aggregate = app.add_subcommand("aggregate", "Macro-journal citation counts per factor");
  aggregate->add_option("--matrix", matrix_path)->required();
  aggregate->add_option("--factor-report", factors_path)->required();
  add_direction(aggregate);
  aggregate->add_option("--labels", config.factor_labels)->delimiter(',');
  aggregate->add_option("--output,-o", output);

  auto* exporter = app.add_subcommand("export", "Pajek .net/.clu files for visualization");
  exporter->add_option("--graph", graph_path)->required();
  exporter->add_option("--factor-report", factors_path)->required();
  exporter->add_option("--metadata", metadata_path);
  exporter->add_option("--min-impact-factor", cutoff_text);
  exporter->add_option("--network-out", network_out);
  exporter->add_option("--partition-out", partition_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ErrorKind::Usage);
  }

  try {
    config.direction = parse_direction(direction_text);
    config.orientation = parse_orientation(orientation_text);
    config.classification = parse_classification_mode(mode_text);
    apply_factor_count(factor_text, config.factors, config.auto_factors);
    config.min_impact_factor = parse_cutoff(cutoff_text);
    config.drop_isolates = !keep_isolates;
    config.varimax.kaiser_normalize = !no_kaiser;
    const FactorSettings settings{config.orientation, config.factors, config.auto_factors, config.varimax,
                                  config.classification};

    if (*run) {
      const auto result = run_pipeline(config);
      const auto& r = result.report;
      std::cerr << "environment: " << r.environment.size() << " journals, " << r.matrix_size
                << " after isolate drop; " << r.factor_count << " factors; graph " << r.centrality.node_count
                << " nodes / " << r.graph_edges << " edges; outputs in " << config.output_dir << "\n";
    } else if (*env) {
      emit(output, stages::env(load_corpus(corpus_path), config.focal, config.direction, config.min_count));
    } else if (*matrix) {
      emit(output, stages::matrix(load_corpus(corpus_path), read_text(env_path), config.orientation,
                                  config.zero_diagonal, config.drop_isolates));
    } else if (*factors) {
      emit(output, stages::factors(read_text(matrix_path), settings));
    } else if (*cosine) {
      emit(output, stages::cosine(read_text(matrix_path), config.orientation));
    } else if (*graph) {
      emit(output, stages::graph(read_text(cosine_path), config.threshold));
    } else if (*centrality) {
      emit(output, stages::centrality(read_text(graph_path)));
    } else if (*aggregate) {
      emit(output, stages::aggregate(read_text(matrix_path), read_text(factors_path), config.direction,
                                     config.factor_labels));
    } else if (*exporter) {
      CitationCorpus labels;
      if (!metadata_path.empty()) {
        std::istringstream meta(read_text(metadata_path));
        merge_metadata(labels, meta);
      }
      const auto files = stages::export_pajek(read_text(graph_path), read_text(factors_path), labels,
                                              config.min_impact_factor);
      write_text(network_out, files.network);
      write_text(partition_out, files.partition);
    }
  } catch (const Error& e) {
    std::cerr << "citeco: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "citeco: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::Data);
  }
  return 0;
}
