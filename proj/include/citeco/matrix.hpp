#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "citeco/corpus.hpp"

namespace citeco {

using CountMatrix = Eigen::Matrix<CitationCount, Eigen::Dynamic, Eigen::Dynamic>;

/// Square, asymmetric journal-to-journal counts: cells(i, j) = citations from journals[i] to journals[j].
struct CitationMatrix {
  std::vector<JournalId> journals;
  CountMatrix cells;

  Eigen::Index size() const noexcept { return cells.rows(); }
  Eigen::Index index_of(std::string_view id) const;  ///< -1 when absent

  friend bool operator==(const CitationMatrix& a, const CitationMatrix& b) {
    return a.journals == b.journals && a.cells.rows() == b.cells.rows() && a.cells.cols() == b.cells.cols() &&
           a.cells == b.cells;
  }
};

enum class ProfileOrientation {
  Rows,     ///< citations a journal gives
  Columns,  ///< citations a journal receives
};

std::string_view to_string(ProfileOrientation orientation);
ProfileOrientation parse_orientation(std::string_view text);

struct MatrixOptions {
  bool zero_diagonal = false;
};

CitationMatrix build_matrix(const CitationCorpus& corpus, const Environment& env, const MatrixOptions& options = {});

/// Removes every non-focal journal whose profile is all-zero once the focal journal's
/// contribution is excluded. Relative order is preserved.
CitationMatrix drop_isolates(const CitationMatrix& matrix, ProfileOrientation orientation, std::string_view focal);

CitationMatrix transpose(const CitationMatrix& matrix);

/// Profile vectors as rows of a dense matrix in the requested scalar type.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> profiles(const CitationMatrix& matrix,
                                                               ProfileOrientation orientation) {
  if (orientation == ProfileOrientation::Rows) return matrix.cells.template cast<Scalar>();
  return matrix.cells.transpose().template cast<Scalar>();
}

/// Matrix CSV: header row and first column carry journal ids; integer cells.
void write_matrix(std::ostream& out, const CitationMatrix& matrix);
CitationMatrix read_matrix(std::istream& in);

}  // namespace citeco
