#pragma once

#include <string>

#include <torch/torch.h>

#include "attribpaint/core/rng.hpp"
#include "attribpaint/core/schema.hpp"

namespace attribpaint::eval {

/// Small conv classifier with one head per attribute axis. Stands in for
/// the paper-scale finetuned judges at desk scale; every metrics report
/// discloses the substitution in its header.
struct JudgeNetImpl : torch::nn::Module {
  JudgeNetImpl(std::int64_t n_artists, std::int64_t n_periods, std::int64_t n_genres);

  struct Logits {
    torch::Tensor artist, period, genre;
  };
  Logits forward(const torch::Tensor& images);

  torch::nn::Sequential trunk{nullptr};
  torch::nn::Linear artist_head{nullptr}, period_head{nullptr}, genre_head{nullptr};
};
TORCH_MODULE(JudgeNet);

struct JudgeTrainConfig {
  std::int64_t steps = 400;
  std::int64_t batch_size = 8;
  double lr = 1e-3;
};

// Trained on real style images only, then frozen; generated images never
// enter its training set.
struct JudgeClassifier {
  JudgeNet net{nullptr};
  AttributeSchema schema;
  std::string id;  // content fingerprint of the trained weights

  /// Per-image class posteriors on one axis (softmax of the head).
  torch::Tensor posteriors(const torch::Tensor& images, int axis) const;
};

/// Trains a judge on (images, labels) from the style set. Throws DataError
/// if any axis has fewer than two distinct labels present. Deterministic
/// given the rng.
JudgeClassifier train_judge(const torch::Tensor& style_images,
                            const torch::Tensor& style_labels,
                            const AttributeSchema& schema, const JudgeTrainConfig& config,
                            RngSource& rng);

/// Train-set accuracy of a judge on one axis (0 = artist, 1 = period,
/// 2 = genre).
double judge_axis_accuracy(const JudgeClassifier& judge, const torch::Tensor& images,
                           const torch::Tensor& labels, int axis);

}  // namespace attribpaint::eval
