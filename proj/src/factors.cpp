#include <algorithm>
#include <istream>
#include <ostream>

#include "citeco/csv.hpp"
#include "citeco/factors.hpp"

namespace citeco {

std::string_view to_string(ClassificationMode mode) {
  return mode == ClassificationMode::Absolute ? "absolute" : "signed";
}

ClassificationMode parse_classification_mode(std::string_view text) {
  if (text == "absolute" || text == "abs") return ClassificationMode::Absolute;
  if (text == "signed") return ClassificationMode::Signed;
  throw Error(ErrorKind::Usage, "unknown classification mode '" + std::string(text) + "'");
}

Eigen::Index FactorAssignment::factor_of(std::string_view id) const {
  auto it = std::find(journals.begin(), journals.end(), id);
  return it == journals.end() ? -1 : factors[static_cast<std::size_t>(it - journals.begin())];
}

FactorAnalysis analyze_factors(const CitationMatrix& matrix, const FactorSettings& settings) {
  const auto corr = pearson_matrix(matrix, settings.orientation);
  FactorAnalysis out;
  out.k = settings.auto_factors ? kaiser_factor_count(corr) : settings.factors;
  out.unrotated = principal_components(corr, out.k);
  out.rotated = varimax(out.unrotated, settings.varimax);
  out.assignment = classify_by_max_loading(out.rotated, settings.classification);
  return out;
}

void write_factor_report(std::ostream& out, const FactorModel<double>& model, const FactorAssignment& assignment) {
  const Eigen::Index k = model.k();
  std::vector<std::string> header{"id", "factor"};
  for (Eigen::Index f = 0; f < k; ++f) header.push_back("loading_" + std::to_string(f + 1));
  header.push_back("communality");
  out << csv::join(header) << '\n';

  for (Eigen::Index i = 0; i < model.p(); ++i) {
    const auto& id = model.journals[static_cast<std::size_t>(i)];
    const Eigen::Index factor = assignment.factor_of(id);
    if (factor < 0) throw IncompleteAssignmentError(id);
    out << csv::quote(id) << ',' << factor + 1;
    for (Eigen::Index f = 0; f < k; ++f) out << ',' << csv::format_exact(model.loadings(i, f));
    out << ',' << csv::format_exact(model.communalities(i)) << '\n';
  }
  out << '\n';
  out << "eigenvalue";
  for (Eigen::Index f = 0; f < k; ++f) out << ',' << csv::format_exact(model.eigenvalues(f));
  out << "\nvariance_proportion";
  for (Eigen::Index f = 0; f < k; ++f) out << ',' << csv::format_exact(model.variance_proportions(f));
  out << '\n';
}

FactorReport read_factor_report(std::istream& in) {
  csv::LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(1, "empty factor report");
  auto header = csv::split(line);
  if (!header || header->size() < 4 || (*header)[0] != "id" || (*header)[1] != "factor" ||
      header->back() != "communality") {
    throw ParseError(1, "expected header 'id,factor,loading_1..loading_k,communality'");
  }
  const auto k = static_cast<Eigen::Index>(header->size() - 3);

  std::vector<std::vector<double>> rows;
  std::vector<double> communalities;
  FactorReport report;
  report.assignment.factor_count = k;
  while (reader.next(line) && !line.empty()) {
    const auto ln = reader.line_number();
    auto fields = csv::split(line);
    if (!fields || static_cast<Eigen::Index>(fields->size()) != k + 3) throw ParseError(ln, "wrong number of fields");
    auto factor = csv::parse_int((*fields)[1]);
    if (!factor || *factor < 1 || *factor > k) throw ParseError(ln, "factor index out of range");
    std::vector<double> values;
    for (Eigen::Index f = 0; f <= k; ++f) {
      auto v = csv::parse_double((*fields)[static_cast<std::size_t>(f + 2)]);
      if (!v) throw ParseError(ln, "bad number");
      values.push_back(*v);
    }
    communalities.push_back(values.back());
    values.pop_back();
    report.assignment.journals.push_back((*fields)[0]);
    report.assignment.factors.push_back(*factor - 1);
    report.assignment.loadings.push_back(values[static_cast<std::size_t>(*factor - 1)]);
    rows.push_back(std::move(values));
  }

  auto read_footer = [&](std::string_view name) {
    if (!reader.next(line)) throw ParseError(reader.line_number() + 1, "missing footer row '" + std::string(name) + "'");
    auto fields = csv::split(line);
    if (!fields || static_cast<Eigen::Index>(fields->size()) != k + 1 || (*fields)[0] != name) {
      throw ParseError(reader.line_number(), "expected footer row '" + std::string(name) + "'");
    }
    DenseVector<double> v(k);
    for (Eigen::Index f = 0; f < k; ++f) {
      auto x = csv::parse_double((*fields)[static_cast<std::size_t>(f + 1)]);
      if (!x) throw ParseError(reader.line_number(), "bad number");
      v(f) = *x;
    }
    return v;
  };

  auto& model = report.model;
  model.journals = report.assignment.journals;
  const auto p = static_cast<Eigen::Index>(rows.size());
  model.loadings.resize(p, k);
  model.communalities.resize(p);
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index f = 0; f < k; ++f) model.loadings(i, f) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)];
    model.communalities(i) = communalities[static_cast<std::size_t>(i)];
  }
  model.eigenvalues = read_footer("eigenvalue");
  model.variance_proportions = read_footer("variance_proportion");
  return report;
}

}  // namespace citeco
