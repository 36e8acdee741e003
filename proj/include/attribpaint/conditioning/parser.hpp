#pragma once

#include <cstdint>
#include <vector>

#include <torch/torch.h>

#include "attribpaint/core/rng.hpp"

namespace attribpaint::cond {

// Per-site AdaIN affine parameters produced by the condition parser.
//
// Slicing convention (fixed so checkpoints stay portable): one (gamma, beta)
// pair per AdaIN normalization site, sites enumerated in network forward
// order (an AdaIN residual block contributes its two norms back to back),
// gamma before beta within a site. Total scalar count per condition is
// therefore 2 * sum(site channel counts).
struct AdaInParams {
  struct Site {
    torch::Tensor gamma;  // (C) or (B, C)
    torch::Tensor beta;   // same shape as gamma
  };
  std::vector<Site> sites;

  std::int64_t total_scalars() const;
};

// MLP that unfolds the concatenated condition vector into AdaIN parameters:
// `layers` fully connected layers of width `hidden` with ReLU, then a linear
// head of size 2 * sum(site channels). The head's bias starts at 1 on the
// gamma slices so the initial AdaIN transform is near identity.
class ConditionParserImpl : public torch::nn::Module {
 public:
  ConditionParserImpl(std::int64_t input_dim, std::vector<std::int64_t> site_channels,
                      std::int64_t hidden, std::int64_t layers);

  /// cond is (D) for one condition or (B, D) for a batch; D must equal the
  /// construction-time input_dim. Deterministic given weights.
  AdaInParams forward(const torch::Tensor& cond);

  std::int64_t input_dim() const { return input_dim_; }
  const std::vector<std::int64_t>& site_channels() const { return site_channels_; }

  /// Reset gamma-slice biases of the head to 1 (called after weight init).
  void reset_head_bias();

 private:
  std::int64_t input_dim_;
  std::vector<std::int64_t> site_channels_;
  torch::nn::Sequential body_{nullptr};
  torch::nn::Linear head_{nullptr};
};

TORCH_MODULE(ConditionParser);

}  // namespace attribpaint::cond
