#pragma once

// Factor analysis of citation profiles: Pearson correlation, principal-component
// extraction, varimax rotation and max-loading classification.

#include <Eigen/Dense>
#include <cmath>
#include <iosfwd>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citeco/dense.hpp"
#include "citeco/error.hpp"
#include "citeco/matrix.hpp"

namespace citeco {

template <typename Scalar = double>
struct CorrelationMatrix {
  std::vector<JournalId> journals;
  DenseMatrix<Scalar> cells;

  Eigen::Index size() const noexcept { return cells.rows(); }
};

/// Pearson correlation between every pair of profile rows.
template <typename Derived>
CorrelationMatrix<typename Derived::Scalar> pearson_matrix(const Eigen::MatrixBase<Derived>& profile_rows,
                                                           const std::vector<JournalId>& journals) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = profile_rows.rows();
  const Eigen::Index m = profile_rows.cols();
  DenseMatrix<Scalar> unit(n, m);
  for (Eigen::Index a = 0; a < n; ++a) {
    const Scalar mean = profile_rows.row(a).mean();
    unit.row(a) = profile_rows.row(a).array() - mean;
    const Scalar norm = unit.row(a).norm();
    const Scalar scale = Scalar(1) + profile_rows.row(a).cwiseAbs().maxCoeff();
    if (!(norm > std::numeric_limits<Scalar>::epsilon() * scale * std::sqrt(Scalar(m)))) {
      throw UndefinedSimilarityError("Pearson correlation", journals.at(static_cast<std::size_t>(a)));
    }
    unit.row(a) /= norm;
  }
  return {journals, detail::unit_row_gram(unit)};
}

inline CorrelationMatrix<double> pearson_matrix(const CitationMatrix& matrix, ProfileOrientation orientation) {
  return pearson_matrix(profiles<double>(matrix, orientation), matrix.journals);
}

template <typename Scalar = double>
struct RotationInfo {
  DenseMatrix<Scalar> rotation;           ///< rotated = unrotated * rotation
  std::vector<Scalar> criterion_history;  ///< criterion before the first sweep, then after each sweep
  int sweeps = 0;
  bool converged = false;
  bool kaiser_normalized = true;
};

template <typename Scalar = double>
struct FactorModel {
  std::vector<JournalId> journals;
  DenseMatrix<Scalar> loadings;  ///< p x k
  DenseVector<Scalar> eigenvalues;  ///< descending; sums of squared loadings after rotation
  DenseVector<Scalar> variance_proportions;
  DenseVector<Scalar> communalities;
  std::optional<RotationInfo<Scalar>> rotation;
  std::vector<std::string> warnings;

  Eigen::Index k() const noexcept { return loadings.cols(); }
  Eigen::Index p() const noexcept { return loadings.rows(); }
};

namespace detail {

/// Makes the largest-magnitude entry of every column positive (first such entry on ties).
template <typename Scalar>
void canonicalize_signs(DenseMatrix<Scalar>& columns, DenseMatrix<Scalar>* companion = nullptr) {
  for (Eigen::Index f = 0; f < columns.cols(); ++f) {
    Eigen::Index arg = 0;
    columns.col(f).cwiseAbs().maxCoeff(&arg);
    if (columns(arg, f) < Scalar(0)) {
      columns.col(f) *= Scalar(-1);
      if (companion) companion->col(f) *= Scalar(-1);
    }
  }
}

template <typename Scalar>
void refresh_statistics(FactorModel<Scalar>& model) {
  const Scalar p = static_cast<Scalar>(model.p());
  model.communalities = model.loadings.rowwise().squaredNorm();
  const DenseVector<Scalar> ssl = model.loadings.colwise().squaredNorm().transpose();
  model.variance_proportions = ssl / p;
}

}  // namespace detail

template <typename Scalar = double>
struct EigenPairs {
  DenseVector<Scalar> values;   ///< descending
  DenseMatrix<Scalar> vectors;  ///< columns match values
};

template <typename Scalar>
EigenPairs<Scalar> descending_eigenpairs(const DenseMatrix<Scalar>& symmetric) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(symmetric);
  if (solver.info() != Eigen::Success) throw NumericalError("eigendecomposition did not converge");
  const Eigen::Index n = symmetric.rows();
  EigenPairs<Scalar> out{DenseVector<Scalar>(n), DenseMatrix<Scalar>(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = solver.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

/// Kaiser criterion: number of eigenvalues greater than one (at least one factor).
template <typename Scalar>
Eigen::Index kaiser_factor_count(const CorrelationMatrix<Scalar>& corr) {
  const auto pairs = descending_eigenpairs<Scalar>(corr.cells);
  const Eigen::Index above = (pairs.values.array() > Scalar(1)).count();
  return std::max<Eigen::Index>(above, 1);
}

/// Principal-component extraction: loadings column f = eigenvector f * sqrt(eigenvalue f).
template <typename Scalar>
FactorModel<Scalar> principal_components(const CorrelationMatrix<Scalar>& corr, Eigen::Index k) {
  const Eigen::Index p = corr.size();
  if (k < 1 || k > p) {
    throw Error(ErrorKind::Usage, "factor count " + std::to_string(k) + " outside [1, " + std::to_string(p) + "]");
  }
  auto pairs = descending_eigenpairs<Scalar>(corr.cells);

  FactorModel<Scalar> model;
  model.journals = corr.journals;
  model.eigenvalues = pairs.values.head(k);
  for (Eigen::Index f = 0; f < k; ++f) {
    if (model.eigenvalues(f) < Scalar(0)) {
      model.warnings.push_back("eigenvalue " + std::to_string(f + 1) + " negative (" +
                               std::to_string(static_cast<double>(model.eigenvalues(f))) + "); clamped to 0");
      model.eigenvalues(f) = Scalar(0);
    }
  }
  model.loadings = pairs.vectors.leftCols(k) * model.eigenvalues.cwiseSqrt().asDiagonal();
  detail::canonicalize_signs(model.loadings);
  detail::refresh_statistics(model);
  return model;
}

/// Sum over factors of the variance of squared loadings, optionally on Kaiser row-normalized loadings.
template <typename Scalar>
Scalar varimax_criterion(const DenseMatrix<Scalar>& loadings, bool kaiser_normalize) {
  DenseMatrix<Scalar> l = loadings;
  if (kaiser_normalize) {
    for (Eigen::Index i = 0; i < l.rows(); ++i) {
      const Scalar h = l.row(i).norm();
      if (h > Scalar(0)) l.row(i) /= h;
    }
  }
  const Scalar p = static_cast<Scalar>(l.rows());
  const DenseMatrix<Scalar> sq = l.array().square();
  Scalar total = 0;
  for (Eigen::Index f = 0; f < sq.cols(); ++f) {
    const Scalar mean = sq.col(f).sum() / p;
    total += sq.col(f).array().square().sum() / p - mean * mean;
  }
  return total;
}

struct VarimaxOptions {
  bool kaiser_normalize = true;
  double tolerance = 1e-6;
  int max_sweeps = 100;
};

/// Orthogonal varimax rotation by successive planar rotations of factor pairs. Each planar
/// step is the exact maximizer for its pair, so the criterion never decreases.
template <typename Scalar>
FactorModel<Scalar> varimax(const FactorModel<Scalar>& model, const VarimaxOptions& options = {}) {
  if (!(options.tolerance > 0)) throw Error(ErrorKind::Usage, "varimax tolerance must be positive");
  const Eigen::Index p = model.p();
  const Eigen::Index k = model.k();
  if (k < 2) return model;

  DenseVector<Scalar> h = DenseVector<Scalar>::Ones(p);
  DenseMatrix<Scalar> work = model.loadings;
  if (options.kaiser_normalize) {
    for (Eigen::Index i = 0; i < p; ++i) {
      h(i) = work.row(i).norm();
      if (h(i) > Scalar(0)) work.row(i) /= h(i);
    }
  }

  RotationInfo<Scalar> info;
  info.kaiser_normalized = options.kaiser_normalize;
  info.rotation = DenseMatrix<Scalar>::Identity(k, k);
  info.criterion_history.push_back(varimax_criterion<Scalar>(work, false));

  const Scalar np = static_cast<Scalar>(p);
  auto rotate_pair = [](DenseMatrix<Scalar>& m, Eigen::Index a, Eigen::Index b, Scalar c, Scalar s) {
    const DenseVector<Scalar> x = m.col(a);
    const DenseVector<Scalar> y = m.col(b);
    m.col(a) = c * x + s * y;
    m.col(b) = -s * x + c * y;
  };

  while (info.sweeps < options.max_sweeps) {
    for (Eigen::Index a = 0; a + 1 < k; ++a) {
      for (Eigen::Index b = a + 1; b < k; ++b) {
        const auto x = work.col(a).array();
        const auto y = work.col(b).array();
        const DenseVector<Scalar> u = (x.square() - y.square()).matrix();
        const DenseVector<Scalar> v = (Scalar(2) * x * y).matrix();
        const Scalar su = u.sum();
        const Scalar sv = v.sum();
        const Scalar num = Scalar(2) * (np * u.dot(v) - su * sv);
        const Scalar den = np * (u.squaredNorm() - v.squaredNorm()) - (su * su - sv * sv);
        if (num == Scalar(0) && den >= Scalar(0)) continue;
        const Scalar phi = std::atan2(num, den) / Scalar(4);
        const Scalar c = std::cos(phi);
        const Scalar s = std::sin(phi);
        rotate_pair(work, a, b, c, s);
        rotate_pair(info.rotation, a, b, c, s);
      }
    }
    ++info.sweeps;
    const Scalar crit = varimax_criterion<Scalar>(work, false);
    const Scalar gain = crit - info.criterion_history.back();
    info.criterion_history.push_back(crit);
    if (gain < static_cast<Scalar>(options.tolerance)) {
      info.converged = true;
      break;
    }
  }

  FactorModel<Scalar> out;
  out.journals = model.journals;
  out.warnings = model.warnings;
  DenseMatrix<Scalar> rotated = model.loadings * info.rotation;

  // Order factors by descending sum of squared loadings; stable on ties.
  const DenseVector<Scalar> ssl = rotated.colwise().squaredNorm().transpose();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index l, Eigen::Index r) { return ssl(l) > ssl(r); });
  out.loadings.resize(p, k);
  DenseMatrix<Scalar> permuted_rotation(k, k);
  for (Eigen::Index f = 0; f < k; ++f) {
    out.loadings.col(f) = rotated.col(order[static_cast<std::size_t>(f)]);
    permuted_rotation.col(f) = info.rotation.col(order[static_cast<std::size_t>(f)]);
  }
  info.rotation = std::move(permuted_rotation);
  detail::canonicalize_signs(out.loadings, &info.rotation);
  out.eigenvalues = out.loadings.colwise().squaredNorm().transpose();
  detail::refresh_statistics(out);
  out.rotation = std::move(info);
  return out;
}

template <typename Scalar>
FactorModel<Scalar> varimax(const FactorModel<Scalar>& model, bool kaiser_normalize, double tolerance,
                            int max_sweeps) {
  return varimax(model, VarimaxOptions{kaiser_normalize, tolerance, max_sweeps});
}

enum class ClassificationMode {
  Absolute,  ///< argmax of |loading|
  Signed,    ///< argmax of the signed loading
};

std::string_view to_string(ClassificationMode mode);
ClassificationMode parse_classification_mode(std::string_view text);

/// Journal -> factor mapping. Factor indices are 0-based here and 1-based in every file format.
struct FactorAssignment {
  std::vector<JournalId> journals;
  std::vector<Eigen::Index> factors;
  std::vector<double> loadings;  ///< loading value that decided the assignment
  Eigen::Index factor_count = 0;

  /// -1 when the journal is not assigned.
  Eigen::Index factor_of(std::string_view id) const;
};

template <typename Scalar>
FactorAssignment classify_by_max_loading(const FactorModel<Scalar>& model,
                                         ClassificationMode mode = ClassificationMode::Absolute) {
  FactorAssignment out;
  out.journals = model.journals;
  out.factor_count = model.k();
  for (Eigen::Index i = 0; i < model.p(); ++i) {
    Eigen::Index best = 0;
    auto score = [&](Eigen::Index f) {
      const Scalar v = model.loadings(i, f);
      return mode == ClassificationMode::Absolute ? std::abs(v) : v;
    };
    for (Eigen::Index f = 1; f < model.k(); ++f) {
      if (score(f) > score(best)) best = f;
    }
    out.factors.push_back(best);
    out.loadings.push_back(static_cast<double>(model.loadings(i, best)));
  }
  return out;
}

struct FactorSettings {
  ProfileOrientation orientation = ProfileOrientation::Columns;
  Eigen::Index factors = 5;
  bool auto_factors = false;
  VarimaxOptions varimax;
  ClassificationMode classification = ClassificationMode::Absolute;
};

struct FactorAnalysis {
  Eigen::Index k = 0;
  FactorModel<double> unrotated;
  FactorModel<double> rotated;
  FactorAssignment assignment;
};

/// pearson -> principal components -> varimax -> max-loading classification.
FactorAnalysis analyze_factors(const CitationMatrix& matrix, const FactorSettings& settings);

/// Factor report CSV:`id,factor,loading_1..loading_k,communality`, a blank line, then
/// `eigenvalue,...` and `variance_proportion,...` footer rows.
void write_factor_report(std::ostream& out, const FactorModel<double>& model, const FactorAssignment& assignment);

struct FactorReport {
  FactorModel<double> model;
  FactorAssignment assignment;
};

FactorReport read_factor_report(std::istream& in);

}  // namespace citeco
