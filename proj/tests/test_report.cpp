#include <sstream>

#include "citeco/pipeline.hpp"
#include "citeco/report.hpp"
#include "doctest.h"

using namespace citeco;

namespace {

SimilarityGraph triangle() {
  SimilarityGraph g;
  g.nodes = {"A", "B", "C"};
  g.edges = {{0, 1, 0.9}, {0, 2, 0.8}, {1, 2, 0.123456789}};
  return g;
}

FactorAssignment assignment() {
  FactorAssignment a;
  a.journals = {"A", "B", "C"};
  a.factors = {0, 1, 0};
  a.loadings = {0.9, 0.8, 0.7};
  a.factor_count = 2;
  return a;
}

CitationCorpus labels() {
  CitationCorpus c;
  c.add_journal({"A", "Alpha \"Quarterly\"", 2.0});
  c.add_journal({"B", "Beta", 1.2});
  c.add_journal({"C", "Gamma", std::nullopt});
  return c;
}

}  // namespace

TEST_CASE("pajek: triangle with every label shown") {
  const auto files = write_pajek(triangle(), assignment(), labels());
  CHECK(files.network ==
        "*Vertices 3\n"
        "1 \"Alpha 'Quarterly'\"\n"
        "2 \"Beta\"\n"
        "3 \"Gamma\"\n"
        "*Edges\n"
        "1 2 0.9\n"
        "1 3 0.8\n"
        "2 3 0.123457\n");
  CHECK(files.partition == "*Vertices 3\n1\n2\n1\n");
}

TEST_CASE("pajek: impact-factor cutoff blanks labels at or below it") {
  const auto strict = write_pajek(triangle(), assignment(), labels(), {1.4, std::nullopt});
  std::istringstream net(strict.network);
  const auto parsed = read_pajek(net);
  CHECK(parsed.labels == std::vector<std::string>{"Alpha 'Quarterly'", "", ""});

  const auto at_cutoff = write_pajek(triangle(), assignment(), labels(), {2.0, std::nullopt});
  std::istringstream net2(at_cutoff.network);
  CHECK(read_pajek(net2).labels == std::vector<std::string>{"", "", ""});
}

TEST_CASE("pajek: focal journal goes to partition zero") {
  auto a = assignment();
  a.journals.erase(a.journals.begin());
  a.factors.erase(a.factors.begin());
  const auto files = write_pajek(triangle(), a, labels(), {std::nullopt, JournalId("A")});
  CHECK(files.partition == "*Vertices 3\n0\n2\n1\n");
  CHECK_THROWS_AS(write_pajek(triangle(), a, labels()), IncompleteAssignmentError);
}

TEST_CASE("pajek: graph without edges") {
  SimilarityGraph g;
  g.nodes = {"A", "B", "C"};
  const auto files = write_pajek(g, assignment(), CitationCorpus{});
  CHECK(files.network == "*Vertices 3\n1 \"A\"\n2 \"B\"\n3 \"C\"\n*Edges\n");
}

TEST_CASE("pajek: round-trip preserves vertices, edges and partition") {
  const auto files = write_pajek(triangle(), assignment(), labels());
  std::istringstream net(files.network), clu(files.partition);
  const auto parsed = read_pajek(net, &clu);
  CHECK(parsed.labels.size() == 3);
  REQUIRE(parsed.edges.size() == 3);
  CHECK(parsed.edges[0] == SimilarityEdge{0, 1, 0.9});
  CHECK(parsed.edges[2].weight == doctest::Approx(0.123456789).epsilon(1e-6));
  CHECK(parsed.partition == std::vector<long>{1, 2, 1});

  std::istringstream lower("% comment\n*vertices 2\n1 \"x\"\n2 \"y\"\n*edges\n2 1 0.5\n");
  const auto lower_parsed = read_pajek(lower);
  CHECK(lower_parsed.edges == std::vector<SimilarityEdge>{{0, 1, 0.5}});

  std::istringstream bad("*Vertices 2\n1 \"x\"\n2 \"y\"\n*Edges\n1 3 0.5\n");
  CHECK_THROWS_AS(read_pajek(bad), ParseError);
  std::istringstream short_clu("*Vertices 3\n1\n");
  std::istringstream net2(files.network);
  CHECK_THROWS_AS(read_pajek(net2, &short_clu), ParseError);
}

TEST_CASE("graph stage file round-trips") {
  auto g = triangle();
  g.threshold = 0.35;
  std::istringstream in(write_graph_file(g));
  const auto back = read_graph_file(in);
  CHECK(back.nodes == g.nodes);
  CHECK(back.threshold == 0.35);
  CHECK(back.edges.size() == 3);
}

TEST_CASE("report JSON is deterministic and ordered") {
  auto corpus = labels();
  corpus.add_record({"A", "B", 3});
  corpus.add_record({"A", "C", 4});
  corpus.add_record({"A", "D", 2});
  corpus.add_record({"B", "C", 5});
  corpus.add_record({"C", "B", 2});
  corpus.add_record({"D", "B", 1});
  corpus.add_record({"D", "C", 6});
  corpus.add_record({"B", "D", 3});
  corpus.add_record({"C", "D", 1});
  corpus.add_record({"B", "A", 2});
  RunConfig config;
  config.focal = "A";
  config.factors = 2;
  const auto first = run_pipeline(corpus, config);
  const auto second = run_pipeline(corpus, config);
  CHECK(first.outputs == second.outputs);
  const auto& json = first.outputs.at(files::kReport);
  const auto tool = json.find("\"tool\"");
  const auto focal = json.find("\"focal\"");
  const auto centrality = json.find("\"centrality\"");
  CHECK(tool < focal);
  CHECK(focal < centrality);
  CHECK(json.find("generated_at") == std::string::npos);

  config.timestamp = true;
  CHECK(run_pipeline(corpus, config).outputs.at(files::kReport).find("generated_at") != std::string::npos);
}
