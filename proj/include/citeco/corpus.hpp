#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace citeco {

using JournalId = std::string;
using CitationCount = std::int64_t;

struct JournalRef {
  JournalId id;
  std::string name;
  std::optional<double> impact_factor;

  /// Display label: the name when known, otherwise the id.
  const std::string& label() const { return name.empty() ? id : name; }

  friend bool operator==(const JournalRef&, const JournalRef&) = default;
};

struct CitationRecord {
  JournalId citing;
  JournalId cited;
  CitationCount count = 0;

  friend bool operator==(const CitationRecord&, const CitationRecord&) = default;
};

/// Journal registry plus aggregated journal-to-journal citation counts for one time slice.
/// Immutable once built; records are keyed by (citing, cited) so iteration order is canonical.
class CitationCorpus {
 public:
  CitationCorpus() = default;
  explicit CitationCorpus(std::string label) : label_(std::move(label)) {}

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Registers a journal, or merges name/impact factor into an existing entry.
  void add_journal(JournalRef journal);

  /// Adds a record, registering both endpoints. Returns false when the pair already exists.
  bool add_record(const CitationRecord& record);

  bool contains(std::string_view id) const;
  const JournalRef& journal(std::string_view id) const;
  const std::map<JournalId, JournalRef, std::less<>>& journals() const noexcept { return journals_; }

  /// Count for citing -> cited, 0 when absent.
  CitationCount count(std::string_view citing, std::string_view cited) const;

  std::vector<CitationRecord> records() const;
  std::size_t record_count() const noexcept { return records_.size(); }

  friend bool operator==(const CitationCorpus&, const CitationCorpus&) = default;

 private:
  std::string label_;
  std::map<JournalId, JournalRef, std::less<>> journals_;
  std::map<std::pair<JournalId, JournalId>, CitationCount> records_;
};

/// Reads the `citing,cited,count` edge list.
CitationCorpus parse_citations(std::istream& in, std::string label = {});

/// Merges an `id,name,impact_factor` table into the corpus.
void merge_metadata(CitationCorpus& corpus, std::istream& in);

void write_citations(std::ostream& out, const CitationCorpus& corpus);
void write_metadata(std::ostream& out, const CitationCorpus& corpus);

enum class Direction {
  Import,  ///< journals the focal journal cites
  Export,  ///< journals citing the focal journal
};

std::string_view to_string(Direction direction);
Direction parse_direction(std::string_view text);

struct Environment {
  JournalId focal;
  Direction direction = Direction::Import;
  CitationCount min_count = 2;
  /// Focal first, then descending qualifying count, ties by id.
  std::vector<JournalId> members;
  /// Focal-linked count for each member; the focal's own entry is its self-citation count.
  std::vector<CitationCount> counts;

  std::size_t size() const noexcept { return members.size(); }
};

Environment extract_environment(const CitationCorpus& corpus, std::string_view focal,
                                Direction direction, CitationCount min_count = 2);

/// Environment table: `id,role,count` with role `focal` or `member`.
void write_environment(std::ostream& out, const Environment& env);
/// Reads the member list back. Direction and threshold are not stored in the table.
Environment read_environment(std::istream& in);

}  // namespace citeco
