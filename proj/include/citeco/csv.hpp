#pragma once

// Minimal CSV and number-formatting helpers shared by every file format.

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace citeco::csv {

/// Splits one CSV record. Double-quoted fields may contain commas and "" escapes.
/// Returns nullopt on an unterminated quote.
std::optional<std::vector<std::string>> split(std::string_view line);

/// Quotes a field only when it contains a comma, quote or leading/trailing space.
std::string quote(std::string_view field);

std::string join(const std::vector<std::string>& fields);

/// Shortest decimal form that round-trips to the same double.
std::string format_exact(double value);

/// printf-style %.Ng.
std::string format_significant(double value, int digits);

std::optional<std::int64_t> parse_int(std::string_view text);
std::optional<double> parse_double(std::string_view text);

/// Line reader over LF (or CRLF) text that tracks 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line);
  std::size_t line_number() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

}  // namespace citeco::csv
