#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "citeco/dense.hpp"
#include "citeco/error.hpp"
#include "citeco/matrix.hpp"

namespace citeco {

template <typename Scalar = double>
struct SimilarityMatrix {
  std::vector<JournalId> journals;
  DenseMatrix<Scalar> cells;

  Eigen::Index size() const noexcept { return cells.rows(); }
};

/// Cosine of every pair of profile rows: x.y / (|x| |y|).
template <typename Derived>
SimilarityMatrix<typename Derived::Scalar> cosine_matrix(const Eigen::MatrixBase<Derived>& profile_rows,
                                                         const std::vector<JournalId>& journals) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> unit = profile_rows;
  for (Eigen::Index a = 0; a < unit.rows(); ++a) {
    const Scalar norm = unit.row(a).norm();
    if (!(norm > Scalar(0))) throw UndefinedSimilarityError("cosine", journals.at(static_cast<std::size_t>(a)));
    unit.row(a) /= norm;
  }
  return {journals, detail::unit_row_gram(unit)};
}

inline SimilarityMatrix<double> cosine_matrix(const CitationMatrix& matrix, ProfileOrientation orientation) {
  return cosine_matrix(profiles<double>(matrix, orientation), matrix.journals);
}

/// Cosine CSV, laid out like the citation matrix, cells at full round-trip precision.
void write_similarity(std::ostream& out, const SimilarityMatrix<double>& sim);
SimilarityMatrix<double> read_similarity(std::istream& in);

struct SimilarityEdge {
  Eigen::Index a = 0;  ///< a < b
  Eigen::Index b = 0;
  double weight = 0;

  friend bool operator==(const SimilarityEdge&, const SimilarityEdge&) = default;
};

/// Undirected graph of journal pairs whose similarity exceeds a threshold. Isolated journals stay as nodes.
struct SimilarityGraph {
  std::vector<JournalId> nodes;
  std::vector<SimilarityEdge> edges;  ///< sorted by (a, b)
  double threshold = 0.2;

  std::size_t node_count() const noexcept { return nodes.size(); }
  std::vector<std::vector<Eigen::Index>> adjacency() const;
  /// Number of nodes with at least one edge.
  std::size_t connected_node_count() const;
};

/// Keeps edge (a, b) iff a != b and sim(a, b) > threshold (strict).
SimilarityGraph build_graph(const SimilarityMatrix<double>& sim, double threshold = 0.2);

}  // namespace citeco
