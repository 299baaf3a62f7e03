#include "citeco/matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "citeco/csv.hpp"
#include "citeco/error.hpp"

namespace citeco {

Eigen::Index CitationMatrix::index_of(std::string_view id) const {
  auto it = std::find(journals.begin(), journals.end(), id);
  return it == journals.end() ? -1 : static_cast<Eigen::Index>(it - journals.begin());
}

std::string_view to_string(ProfileOrientation orientation) {
  return orientation == ProfileOrientation::Rows ? "rows" : "columns";
}

ProfileOrientation parse_orientation(std::string_view text) {
  if (text == "rows" || text == "citing") return ProfileOrientation::Rows;
  if (text == "columns" || text == "cited") return ProfileOrientation::Columns;
  throw Error(ErrorKind::Usage, "unknown orientation '" + std::string(text) + "'");
}

CitationMatrix build_matrix(const CitationCorpus& corpus, const Environment& env, const MatrixOptions& options) {
  const auto n = static_cast<Eigen::Index>(env.members.size());
  for (const auto& id : env.members) {
    if (!corpus.contains(id)) throw MissingJournalError(id);
  }
  CitationMatrix m{env.members, CountMatrix::Zero(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j && options.zero_diagonal) continue;
      m.cells(i, j) = corpus.count(env.members[i], env.members[j]);
    }
  }
  return m;
}

CitationMatrix drop_isolates(const CitationMatrix& matrix, ProfileOrientation orientation, std::string_view focal) {
  const Eigen::Index f = matrix.index_of(focal);
  if (f < 0) throw MissingJournalError(std::string(focal));

  // Removing a journal can empty another profile, so repeat until nothing changes.
  const CountMatrix profile_rows = profiles<CitationCount>(matrix, orientation);
  std::vector<bool> alive(static_cast<std::size_t>(matrix.size()), true);
  for (bool changed = true; changed;) {
    changed = false;
    for (Eigen::Index i = 0; i < matrix.size(); ++i) {
      if (i == f || !alive[static_cast<std::size_t>(i)]) continue;
      bool nonzero = false;
      for (Eigen::Index j = 0; j < matrix.size() && !nonzero; ++j) {
        nonzero = j != f && alive[static_cast<std::size_t>(j)] && profile_rows(i, j) != 0;
      }
      if (!nonzero) {
        alive[static_cast<std::size_t>(i)] = false;
        changed = true;
      }
    }
  }
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < matrix.size(); ++i) {
    if (alive[static_cast<std::size_t>(i)]) keep.push_back(i);
  }
  if (keep.size() < 3) {
    throw DegenerateError("dropping isolates leaves " + std::to_string(keep.size()) + " journal(s); need at least 3");
  }
  if (static_cast<Eigen::Index>(keep.size()) == matrix.size()) return matrix;

  const auto n = static_cast<Eigen::Index>(keep.size());
  CitationMatrix out{{}, CountMatrix(n, n)};
  for (Eigen::Index a = 0; a < n; ++a) {
    out.journals.push_back(matrix.journals[keep[a]]);
    for (Eigen::Index b = 0; b < n; ++b) out.cells(a, b) = matrix.cells(keep[a], keep[b]);
  }
  return out;
}

CitationMatrix transpose(const CitationMatrix& matrix) {
  return {matrix.journals, matrix.cells.transpose()};
}

void write_matrix(std::ostream& out, const CitationMatrix& matrix) {
  std::vector<std::string> header{""};
  header.insert(header.end(), matrix.journals.begin(), matrix.journals.end());
  out << csv::join(header) << '\n';
  for (Eigen::Index i = 0; i < matrix.size(); ++i) {
    out << csv::quote(matrix.journals[i]);
    for (Eigen::Index j = 0; j < matrix.size(); ++j) out << ',' << matrix.cells(i, j);
    out << '\n';
  }
}

CitationMatrix read_matrix(std::istream& in) {
  csv::LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(1, "empty matrix file");
  auto header = csv::split(line);
  if (!header || header->size() < 2 || !header->front().empty()) {
    throw ParseError(1, "matrix header must start with an empty corner cell followed by journal ids");
  }
  CitationMatrix m;
  m.journals.assign(header->begin() + 1, header->end());
  const auto n = static_cast<Eigen::Index>(m.journals.size());
  m.cells = CountMatrix::Zero(n, n);
  Eigen::Index row = 0;
  while (reader.next(line)) {
    if (line.empty()) continue;
    const auto ln = reader.line_number();
    auto fields = csv::split(line);
    if (!fields || static_cast<Eigen::Index>(fields->size()) != n + 1) throw ParseError(ln, "wrong number of fields");
    if (row >= n) throw ParseError(ln, "more rows than columns");
    if ((*fields)[0] != m.journals[row]) throw ParseError(ln, "row id does not match column order");
    for (Eigen::Index j = 0; j < n; ++j) {
      auto v = csv::parse_int((*fields)[j + 1]);
      if (!v || *v < 0) throw ParseError(ln, "cell must be a nonnegative integer");
      m.cells(row, j) = *v;
    }
    ++row;
  }
  if (row != n) throw ParseError(reader.line_number(), "matrix is not square");
  return m;
}

}  // namespace citeco
