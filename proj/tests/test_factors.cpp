#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "citeco/factors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace citeco;
using Mat = DenseMatrix<double>;

namespace {

Mat rows_of(std::initializer_list<std::initializer_list<double>> rows) {
  Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

std::vector<JournalId> ids(Eigen::Index n) {
  std::vector<JournalId> out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back("J" + std::to_string(i));
  return out;
}

FactorModel<double> model_of(const Mat& loadings) {
  FactorModel<double> m;
  m.journals = ids(loadings.rows());
  m.loadings = loadings;
  m.eigenvalues = loadings.colwise().squaredNorm().transpose();
  m.variance_proportions = m.eigenvalues / static_cast<double>(loadings.rows());
  m.communalities = loadings.rowwise().squaredNorm();
  return m;
}

Mat random_correlation(std::mt19937_64& rng, Eigen::Index p) {
  std::normal_distribution<double> normal;
  Mat x(p, p + 5);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = normal(rng);
  }
  return pearson_matrix(x, ids(p)).cells;
}

/// Max |a - b| after matching columns of b to a by permutation and sign.
double distance_up_to_signed_permutation(const Mat& a, const Mat& b) {
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(a.cols()));
  std::iota(perm.begin(), perm.end(), Eigen::Index{0});
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0;
    for (Eigen::Index f = 0; f < a.cols(); ++f) {
      const auto& col = b.col(perm[static_cast<std::size_t>(f)]);
      worst = std::max(worst, std::min((a.col(f) - col).cwiseAbs().maxCoeff(), (a.col(f) + col).cwiseAbs().maxCoeff()));
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("pearson: hand examples") {
  const auto same = pearson_matrix(rows_of({{1, 2, 3}, {1, 2, 3}}), ids(2));
  CHECK(same.cells(0, 1) == doctest::Approx(1.0).epsilon(1e-15));

  const auto reversed = pearson_matrix(rows_of({{1, 2, 3}, {3, 2, 1}}), ids(2));
  CHECK(oracle::pearson({1, 2, 3}, {3, 2, 1}) == doctest::Approx(-1.0));
  CHECK(reversed.cells(0, 1) == doctest::Approx(-1.0).epsilon(1e-15));

  const auto alternating = pearson_matrix(rows_of({{1, 0, 1, 0}, {0, 1, 0, 1}}), ids(2));
  CHECK(oracle::pearson({1, 0, 1, 0}, {0, 1, 0, 1}) == doctest::Approx(-1.0));
  CHECK(alternating.cells(0, 1) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("pearson: zero-variance profile names the journal") {
  try {
    pearson_matrix(rows_of({{1, 2, 3}, {5, 5, 5}}), std::vector<JournalId>{"A", "Flat"});
    FAIL("expected UndefinedSimilarityError");
  } catch (const UndefinedSimilarityError& e) {
    CHECK(e.id() == "Flat");
  }
}

TEST_CASE("pearson: matches oracle and is invariant under positive affine maps") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0, 10);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index p = 3 + static_cast<Eigen::Index>(rng() % 8);
    const Eigen::Index m = 4 + static_cast<Eigen::Index>(rng() % 10);
    Mat x(p, m);
    for (Eigen::Index i = 0; i < p; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) x(i, j) = u(rng);
    }
    const auto corr = pearson_matrix(x, ids(p));
    CHECK(corr.cells.isApprox(corr.cells.transpose(), 0.0));
    for (Eigen::Index a = 0; a < p; ++a) {
      CHECK(corr.cells(a, a) == 1.0);
      for (Eigen::Index b = 0; b < p; ++b) {
        std::vector<double> va, vb;
        for (Eigen::Index j = 0; j < m; ++j) {
          va.push_back(x(a, j));
          vb.push_back(x(b, j));
        }
        CHECK(std::abs(corr.cells(a, b) - oracle::pearson(va, vb)) < 1e-12);
        CHECK(std::abs(corr.cells(a, b)) <= 1.0);
      }
    }
    Mat shifted = x;
    const Eigen::Index target = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(p));
    shifted.row(target) = shifted.row(target).array() * (0.5 + u(rng)) + u(rng) - 5;
    CHECK((pearson_matrix(shifted, ids(p)).cells - corr.cells).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("principal_components: identity") {
  CorrelationMatrix<double> corr{ids(2), Mat::Identity(2, 2)};
  const auto model = principal_components(corr, 2);
  CHECK(model.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(model.eigenvalues(1) == doctest::Approx(1.0));
  CHECK(model.variance_proportions(0) == doctest::Approx(0.5));
  CHECK(model.variance_proportions(1) == doctest::Approx(0.5));
}

TEST_CASE("principal_components: 2x2 equicorrelation against the characteristic polynomial") {
  const auto [l1, l2] = oracle::eigenvalues_2x2(1, 0.6, 1);
  CHECK(l1 == doctest::Approx(1.6));
  CHECK(l2 == doctest::Approx(0.4));
  CorrelationMatrix<double> corr{ids(2), rows_of({{1, 0.6}, {0.6, 1}})};
  const auto model = principal_components(corr, 2);
  CHECK(std::abs(model.eigenvalues(0) - l1) < 1e-10);
  CHECK(std::abs(model.eigenvalues(1) - l2) < 1e-10);
  CHECK(model.variance_proportions(0) == doctest::Approx(0.8));
  CHECK(model.variance_proportions(1) == doctest::Approx(0.2));
  // First factor loads sqrt(0.8) on both journals.
  CHECK(model.loadings(0, 0) == doctest::Approx(std::sqrt(0.8)));
  CHECK(model.loadings(1, 0) == doctest::Approx(std::sqrt(0.8)));
}

TEST_CASE("principal_components: full extraction reconstructs the correlation matrix") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::Index p = 2 + static_cast<Eigen::Index>(rng() % 19);
    CorrelationMatrix<double> corr{ids(p), random_correlation(rng, p)};
    const auto model = principal_components(corr, p);
    CHECK((model.loadings * model.loadings.transpose() - corr.cells).cwiseAbs().maxCoeff() < 1e-8);
    CHECK(std::abs(model.variance_proportions.sum() - 1.0) < 1e-8);
    for (Eigen::Index f = 0; f + 1 < p; ++f) CHECK(model.eigenvalues(f) >= model.eigenvalues(f + 1));
    for (Eigen::Index f = 0; f < p; ++f) {
      Eigen::Index arg = 0;
      model.loadings.col(f).cwiseAbs().maxCoeff(&arg);
      CHECK(model.loadings(arg, f) > 0);
    }
    const auto partial = principal_components(corr, std::max<Eigen::Index>(1, p / 2));
    CHECK(partial.variance_proportions.sum() <= 1.0 + 1e-9);
    CHECK(partial.communalities.maxCoeff() <= 1.0 + 1e-9);
  }
}

TEST_CASE("principal_components: factor count bounds and negative eigenvalues") {
  CorrelationMatrix<double> corr{ids(2), Mat::Identity(2, 2)};
  CHECK_THROWS_AS(principal_components(corr, 0), Error);
  CHECK_THROWS_AS(principal_components(corr, 3), Error);

  // Indefinite input: the negative eigenvalue is clamped with a warning.
  CorrelationMatrix<double> indefinite{ids(3), rows_of({{1, 0.9, -0.9}, {0.9, 1, 0.9}, {-0.9, 0.9, 1}})};
  const auto model = principal_components(indefinite, 3);
  CHECK(model.eigenvalues.minCoeff() >= 0.0);
  CHECK_FALSE(model.warnings.empty());
}

TEST_CASE("kaiser_factor_count counts eigenvalues above one") {
  CorrelationMatrix<double> corr{ids(2), rows_of({{1, 0.6}, {0.6, 1}})};
  CHECK(kaiser_factor_count(corr) == 1);
  CorrelationMatrix<double> identity{ids(4), Mat::Identity(4, 4)};
  CHECK(kaiser_factor_count(identity) == 1);
  Mat blocks = Mat::Identity(4, 4);
  blocks(0, 1) = blocks(1, 0) = 0.8;
  blocks(2, 3) = blocks(3, 2) = 0.8;
  CHECK(kaiser_factor_count(CorrelationMatrix<double>{ids(4), blocks}) == 2);
}

TEST_CASE("varimax: k = 1 returns the input") {
  const auto in = model_of(rows_of({{0.9}, {0.4}, {-0.2}}));
  const auto out = varimax(in);
  CHECK(out.loadings == in.loadings);
  CHECK_FALSE(out.rotation.has_value());
}

TEST_CASE("varimax: simple structure is a fixed point up to permutation and sign") {
  const Mat simple = rows_of({{0.8, 0, 0}, {0, 0.7, 0}, {0.6, 0, 0}, {0, 0, -0.9}, {0, 0.5, 0}});
  for (bool kaiser : {true, false}) {
    const auto out = varimax(model_of(simple), kaiser, 1e-6, 100);
    CHECK(distance_up_to_signed_permutation(simple, out.loadings) < 1e-12);
  }
}

TEST_CASE("varimax: 45-degree case rotates to the identity") {
  const double h = std::sqrt(0.5);
  const auto out = varimax(model_of(rows_of({{h, h}, {h, -h}})), true, 1e-6, 100);
  CHECK(distance_up_to_signed_permutation(Mat::Identity(2, 2), out.loadings) < 1e-4);
}

TEST_CASE("varimax: two-factor rotations match the exhaustive angle search") {
  auto grid_of = [](const Mat& m) {
    oracle::Grid g;
    for (Eigen::Index i = 0; i < m.rows(); ++i) g.push_back({m(i, 0), m(i, 1)});
    return g;
  };
  auto mat_of = [](const oracle::Grid& g) {
    Mat m(static_cast<Eigen::Index>(g.size()), 2);
    for (std::size_t i = 0; i < g.size(); ++i) {
      m(static_cast<Eigen::Index>(i), 0) = g[i][0];
      m(static_cast<Eigen::Index>(i), 1) = g[i][1];
    }
    return m;
  };

  const Mat contrived = rows_of({{0.707, 0.707}, {0.707, -0.707}});
  const auto out = varimax(model_of(contrived), false, 1e-10, 100);
  CHECK(distance_up_to_signed_permutation(mat_of(oracle::varimax_grid(grid_of(contrived))), out.loadings) < 1e-4);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    Mat l(6 + static_cast<Eigen::Index>(rng() % 10), 2);
    for (Eigen::Index i = 0; i < l.rows(); ++i) {
      l(i, 0) = u(rng);
      l(i, 1) = u(rng) * 0.7;
    }
    const auto rotated = varimax(model_of(l), false, 1e-12, 200);
    const double best_grid = oracle::varimax_criterion(oracle::varimax_grid(grid_of(l)));
    // The iterative optimum is never worse than the grid's, and lies within grid resolution of it.
    CHECK(oracle::varimax_criterion(grid_of(rotated.loadings)) >= best_grid - 1e-12);
    CHECK(oracle::varimax_criterion(grid_of(rotated.loadings)) - best_grid < 1e-5);
  }
}

TEST_CASE("varimax: rotation invariants on random loadings") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index p = 3 + static_cast<Eigen::Index>(rng() % 40);
    const Eigen::Index k = 2 + static_cast<Eigen::Index>(rng() % 5);
    Mat l(p, k);
    for (Eigen::Index i = 0; i < p; ++i) {
      for (Eigen::Index f = 0; f < k; ++f) l(i, f) = u(rng) / std::sqrt(static_cast<double>(k));
    }
    const bool kaiser = trial % 2 == 0;
    const auto in = model_of(l);
    const auto out = varimax(in, kaiser, 1e-6, 100);
    REQUIRE(out.rotation.has_value());
    const auto& rot = *out.rotation;
    CHECK((out.communalities - in.communalities).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((rot.rotation.transpose() * rot.rotation - Mat::Identity(k, k)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((l * rot.rotation - out.loadings).cwiseAbs().maxCoeff() < 1e-12);
    for (std::size_t s = 1; s < rot.criterion_history.size(); ++s) {
      CHECK(rot.criterion_history[s] >= rot.criterion_history[s - 1] - 1e-12);
    }
    CHECK(varimax_criterion<double>(out.loadings, kaiser) >= varimax_criterion<double>(l, kaiser) - 1e-12);
    for (Eigen::Index f = 0; f + 1 < k; ++f) CHECK(out.eigenvalues(f) >= out.eigenvalues(f + 1));
    CHECK(std::abs(out.variance_proportions.sum() - in.variance_proportions.sum()) < 1e-9);
  }
}

TEST_CASE("varimax: sweep cap bounds the work") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  Mat l(20, 4);
  for (Eigen::Index i = 0; i < l.rows(); ++i) {
    for (Eigen::Index f = 0; f < 4; ++f) l(i, f) = u(rng);
  }
  const auto out = varimax(model_of(l), true, 1e-300, 1);
  CHECK(out.rotation->sweeps == 1);
  CHECK_FALSE(out.rotation->converged);
  CHECK_THROWS_AS(varimax(model_of(l), true, 0.0, 10), Error);
}

TEST_CASE("classify_by_max_loading") {
  const auto model = model_of(rows_of({{0.9, 0.1}, {0.5, 0.5}, {-0.8, 0.3}}));
  const auto absolute = classify_by_max_loading(model);
  CHECK(absolute.factors == std::vector<Eigen::Index>{0, 0, 0});
  CHECK(absolute.loadings[2] == doctest::Approx(-0.8));
  const auto signed_mode = classify_by_max_loading(model, ClassificationMode::Signed);
  CHECK(signed_mode.factors == std::vector<Eigen::Index>{0, 0, 1});
  CHECK(signed_mode.factor_of("J2") == 1);
  CHECK(signed_mode.factor_of("missing") == -1);
}

TEST_CASE("classification is invariant under positive row rescaling") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 30; ++trial) {
    Mat l(10, 4);
    for (Eigen::Index i = 0; i < 10; ++i) {
      for (Eigen::Index f = 0; f < 4; ++f) l(i, f) = u(rng);
    }
    Mat scaled = l;
    for (Eigen::Index i = 0; i < 10; ++i) scaled.row(i) *= 0.1 + 3 * (u(rng) + 1);
    for (auto mode : {ClassificationMode::Absolute, ClassificationMode::Signed}) {
      CHECK(classify_by_max_loading(model_of(l), mode).factors == classify_by_max_loading(model_of(scaled), mode).factors);
    }
  }
}

TEST_CASE("factor report round-trip") {
  const auto model = model_of(rows_of({{0.9, 0.1}, {0.25, -0.5}, {-0.8, 0.3}}));
  const auto assignment = classify_by_max_loading(model);
  std::ostringstream out;
  write_factor_report(out, model, assignment);
  CHECK(out.str() ==
        "id,factor,loading_1,loading_2,communality\n"
        "J0,1,0.9,0.1,0.8200000000000001\n"
        "J1,2,0.25,-0.5,0.3125\n"
        "J2,1,-0.8,0.3,0.7300000000000001\n"
        "\n"
        "eigenvalue,1.5125000000000002,0.35\n"
        "variance_proportion,0.5041666666666668,0.11666666666666665\n");
  std::istringstream in(out.str());
  const auto back = read_factor_report(in);
  CHECK(back.model.loadings == model.loadings);
  CHECK(back.model.communalities == model.communalities);
  CHECK(back.model.eigenvalues == model.eigenvalues);
  CHECK(back.assignment.factors == assignment.factors);
  CHECK(back.assignment.journals == assignment.journals);

  std::istringstream truncated("id,factor,loading_1,loading_2,communality\nJ0,1,0.9,0.1,0.82\n");
  CHECK_THROWS_AS(read_factor_report(truncated), ParseError);
  std::istringstream bad_factor("id,factor,loading_1,loading_2,communality\nJ0,3,0.9,0.1,0.82\n");
  CHECK_THROWS_AS(read_factor_report(bad_factor), ParseError);
}
