#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "attribpaint/evaluation/judge.hpp"

namespace attribpaint::eval {

/// Fraction of images whose argmax on the judge's `axis` head equals the
/// conditioning label. Order-invariant; throws DataError on an empty set.
double classification_accuracy(const JudgeClassifier& judge, const torch::Tensor& images,
                               const torch::Tensor& target_labels, int axis);

/// Inception Score over the judge's artist posteriors: the set is cut into
/// `splits` consecutive chunks; each contributes
/// exp(mean_x KL(p(class|x) || mean_x p(class|x))). Probabilities are
/// floored at 1e-12 before logs. Returns (mean, population std) over
/// splits; requires set size >= splits.
std::pair<double, double> inception_score(const JudgeClassifier& judge,
                                          const torch::Tensor& images, std::int64_t splits);

/// Same computation from an explicit posterior matrix (N, K); the judge
/// variant reduces to this.
std::pair<double, double> inception_score_from_posteriors(const torch::Tensor& posteriors,
                                                          std::int64_t splits);

/// One row of a metrics report.
struct MetricRow {
  std::string metric;     // "accuracy" | "inception_score"
  std::string axis;       // evaluated axis ("artist", ...)
  std::string direction;  // conditioning label, empty for pooled rows
  double value = 0;
  double std_dev = 0;
  std::int64_t set_size = 0;
};

// Structured report: a header record disclosing the desk-scale judge
// substitution plus judge/checkpoint ids, then one JSON line per row.
struct MetricsReport {
  std::string judge_id;
  std::string checkpoint_id;
  std::int64_t splits = 0;
  std::vector<MetricRow> rows;

  void write(const std::string& path) const;
  std::string to_text() const;
};

}  // namespace attribpaint::eval
