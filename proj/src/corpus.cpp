#include "citeco/corpus.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "citeco/csv.hpp"
#include "citeco/error.hpp"

namespace citeco {

void CitationCorpus::add_journal(JournalRef journal) {
  auto it = journals_.find(journal.id);
  if (it == journals_.end()) {
    const JournalId id = journal.id;
    journals_.emplace(id, std::move(journal));
    return;
  }
  if (!journal.name.empty()) it->second.name = std::move(journal.name);
  if (journal.impact_factor) it->second.impact_factor = journal.impact_factor;
}

bool CitationCorpus::add_record(const CitationRecord& record) {
  auto [it, inserted] = records_.emplace(std::make_pair(record.citing, record.cited), record.count);
  if (!inserted) return false;
  add_journal({record.citing, {}, {}});
  add_journal({record.cited, {}, {}});
  return true;
}

bool CitationCorpus::contains(std::string_view id) const { return journals_.find(id) != journals_.end(); }

const JournalRef& CitationCorpus::journal(std::string_view id) const {
  auto it = journals_.find(id);
  if (it == journals_.end()) throw MissingJournalError(std::string(id));
  return it->second;
}

CitationCount CitationCorpus::count(std::string_view citing, std::string_view cited) const {
  auto it = records_.find(std::make_pair(JournalId(citing), JournalId(cited)));
  return it == records_.end() ? 0 : it->second;
}

std::vector<CitationRecord> CitationCorpus::records() const {
  std::vector<CitationRecord> out;
  out.reserve(records_.size());
  for (const auto& [key, n] : records_) out.push_back({key.first, key.second, n});
  return out;
}

namespace {

void expect_header(csv::LineReader& reader, std::string_view expected) {
  std::string line;
  if (!reader.next(line)) throw ParseError(1, "missing header '" + std::string(expected) + "'");
  if (line != expected) {
    throw ParseError(reader.line_number(), "expected header '" + std::string(expected) + "', got '" + line + "'");
  }
}

}  // namespace

CitationCorpus parse_citations(std::istream& in, std::string label) {
  CitationCorpus corpus(std::move(label));
  csv::LineReader reader(in);
  expect_header(reader, "citing,cited,count");
  std::string line;
  while (reader.next(line)) {
    if (line.empty()) continue;
    const auto n = reader.line_number();
    auto fields = csv::split(line);
    if (!fields || fields->size() != 3) throw ParseError(n, "expected 3 fields");
    const auto& citing = (*fields)[0];
    const auto& cited = (*fields)[1];
    if (citing.empty() || cited.empty()) throw ParseError(n, "empty journal id");
    auto count = csv::parse_int((*fields)[2]);
    if (!count) throw ParseError(n, "count '" + (*fields)[2] + "' is not an integer");
    if (*count < 1) throw ParseError(n, "count must be >= 1");
    if (!corpus.add_record({citing, cited, *count})) throw DuplicateRecordError(n, citing, cited);
  }
  return corpus;
}

void merge_metadata(CitationCorpus& corpus, std::istream& in) {
  csv::LineReader reader(in);
  expect_header(reader, "id,name,impact_factor");
  std::vector<JournalId> seen;
  std::string line;
  while (reader.next(line)) {
    if (line.empty()) continue;
    const auto n = reader.line_number();
    auto fields = csv::split(line);
    if (!fields || fields->size() != 3) throw ParseError(n, "expected 3 fields");
    JournalRef ref{(*fields)[0], (*fields)[1], std::nullopt};
    if (ref.id.empty()) throw ParseError(n, "empty journal id");
    if (std::find(seen.begin(), seen.end(), ref.id) != seen.end()) {
      throw ParseError(n, "duplicate metadata for '" + ref.id + "'");
    }
    seen.push_back(ref.id);
    if (!(*fields)[2].empty()) {
      auto impact = csv::parse_double((*fields)[2]);
      if (!impact || *impact < 0) throw ParseError(n, "impact factor must be a nonnegative number");
      ref.impact_factor = *impact;
    }
    corpus.add_journal(std::move(ref));
  }
}

void write_citations(std::ostream& out, const CitationCorpus& corpus) {
  out << "citing,cited,count\n";
  for (const auto& r : corpus.records()) {
    out << csv::join({r.citing, r.cited, std::to_string(r.count)}) << '\n';
  }
}

void write_metadata(std::ostream& out, const CitationCorpus& corpus) {
  out << "id,name,impact_factor\n";
  for (const auto& [id, j] : corpus.journals()) {
    out << csv::join({j.id, j.name, j.impact_factor ? csv::format_exact(*j.impact_factor) : ""}) << '\n';
  }
}

std::string_view to_string(Direction direction) {
  return direction == Direction::Import ? "import" : "export";
}

Direction parse_direction(std::string_view text) {
  if (text == "import" || text == "citing") return Direction::Import;
  if (text == "export" || text == "cited") return Direction::Export;
  throw Error(ErrorKind::Usage, "unknown direction '" + std::string(text) + "'");
}

Environment extract_environment(const CitationCorpus& corpus, std::string_view focal, Direction direction,
                                CitationCount min_count) {
  if (!corpus.contains(focal)) throw MissingJournalError(std::string(focal));
  if (min_count < 1) throw Error(ErrorKind::Usage, "min_count must be >= 1");

  std::vector<std::pair<JournalId, CitationCount>> qualifying;
  for (const auto& r : corpus.records()) {
    const bool linked = direction == Direction::Import ? r.citing == focal : r.cited == focal;
    if (!linked || r.citing == r.cited) continue;
    if (r.count >= min_count) {
      qualifying.emplace_back(direction == Direction::Import ? r.cited : r.citing, r.count);
    }
  }
  if (qualifying.empty()) {
    throw DegenerateError("environment of '" + std::string(focal) + "' (" + std::string(to_string(direction)) +
                          ", min_count " + std::to_string(min_count) + ") has no members besides the focal journal");
  }
  std::sort(qualifying.begin(), qualifying.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });

  Environment env;
  env.focal = JournalId(focal);
  env.direction = direction;
  env.min_count = min_count;
  env.members.push_back(env.focal);
  env.counts.push_back(corpus.count(focal, focal));
  for (auto& [id, n] : qualifying) {
    env.members.push_back(std::move(id));
    env.counts.push_back(n);
  }
  return env;
}

void write_environment(std::ostream& out, const Environment& env) {
  out << "id,role,count\n";
  for (std::size_t i = 0; i < env.members.size(); ++i) {
    out << csv::join({env.members[i], i == 0 ? "focal" : "member", std::to_string(env.counts[i])}) << '\n';
  }
}

Environment read_environment(std::istream& in) {
  csv::LineReader reader(in);
  expect_header(reader, "id,role,count");
  Environment env;
  std::string line;
  while (reader.next(line)) {
    if (line.empty()) continue;
    const auto n = reader.line_number();
    auto fields = csv::split(line);
    if (!fields || fields->size() != 3) throw ParseError(n, "expected 3 fields");
    const bool is_focal = (*fields)[1] == "focal";
    if (!is_focal && (*fields)[1] != "member") throw ParseError(n, "role must be 'focal' or 'member'");
    if (is_focal != env.members.empty()) throw ParseError(n, "the focal journal must be the first and only focal row");
    auto count = csv::parse_int((*fields)[2]);
    if (!count || *count < 0) throw ParseError(n, "bad count");
    if (std::find(env.members.begin(), env.members.end(), (*fields)[0]) != env.members.end()) {
      throw ParseError(n, "duplicate member '" + (*fields)[0] + "'");
    }
    env.members.push_back((*fields)[0]);
    env.counts.push_back(*count);
  }
  if (env.members.empty()) throw ParseError(reader.line_number(), "environment has no focal journal");
  env.focal = env.members.front();
  return env;
}

}  // namespace citeco
