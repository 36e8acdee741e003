#include "attribpaint/evaluation/metrics.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "attribpaint/core/errors.hpp"

namespace attribpaint::eval {

double classification_accuracy(const JudgeClassifier& judge, const torch::Tensor& images,
                               const torch::Tensor& target_labels, int axis) {
  if (images.size(0) == 0) throw DataError("classification_accuracy: empty evaluation set");
  if (images.size(0) != target_labels.size(0)) {
    throw DataError("classification_accuracy: image/label count mismatch");
  }
  return judge_axis_accuracy(judge, images, target_labels, axis);
}

std::pair<double, double> inception_score_from_posteriors(const torch::Tensor& posteriors,
                                                          std::int64_t splits) {
  if (posteriors.dim() != 2) {
    throw std::invalid_argument("inception_score: posteriors must be (N, K)");
  }
  const auto n = posteriors.size(0);
  if (splits <= 0) throw std::invalid_argument("inception_score: splits must be positive");
  if (n < splits) {
    throw DataError("inception_score: set of size " + std::to_string(n) +
                    " is smaller than " + std::to_string(splits) + " splits");
  }

  const auto p = posteriors.to(torch::kFloat64).clamp_min(1e-12);
  std::vector<double> scores;
  for (std::int64_t s = 0; s < splits; ++s) {
    const auto begin = s * n / splits;
    const auto end = (s + 1) * n / splits;
    const auto chunk = p.slice(0, begin, end);
    const auto marginal = chunk.mean(0, /*keepdim=*/true).clamp_min(1e-12);
    const auto kl = (chunk * (chunk.log() - marginal.log())).sum(1).mean();
    scores.push_back(std::exp(kl.item<double>()));
  }

  double mean = 0;
  for (const double s : scores) mean += s;
  mean /= static_cast<double>(scores.size());
  double var = 0;
  for (const double s : scores) var += (s - mean) * (s - mean);
  var /= static_cast<double>(scores.size());
  return {mean, std::sqrt(var)};
}

std::pair<double, double> inception_score(const JudgeClassifier& judge,
                                          const torch::Tensor& images, std::int64_t splits) {
  if (images.size(0) == 0) throw DataError("inception_score: empty evaluation set");
  return inception_score_from_posteriors(judge.posteriors(images, /*axis=*/0), splits);
}

std::string MetricsReport::to_text() const {
  std::ostringstream out;
  nlohmann::json header{
      {"record", "header"},
      {"note", "desk-scale protocol: one small judge classifier substitutes for the "
               "finetuned ResNet-18/Inception-V3 judges; absolute paper-scale numbers are "
               "not comparable"},
      {"judge_id", judge_id},
      {"checkpoint_id", checkpoint_id},
      {"splits", splits}};
  out << header.dump() << "\n";
  for (const auto& row : rows) {
    nlohmann::json j{{"record", "metric"},   {"metric", row.metric},
                     {"axis", row.axis},     {"direction", row.direction},
                     {"value", row.value},   {"std", row.std_dev},
                     {"set_size", row.set_size}};
    out << j.dump() << "\n";
  }
  return out.str();
}

void MetricsReport::write(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("metrics report: cannot write '" + path + "'");
  out << to_text();
  if (!out) throw DataError("metrics report: write failure on '" + path + "'");
}

}  // namespace attribpaint::eval
