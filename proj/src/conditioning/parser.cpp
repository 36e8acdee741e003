#include "attribpaint/conditioning/parser.hpp"

#include <numeric>
#include <stdexcept>

namespace attribpaint::cond {

std::int64_t AdaInParams::total_scalars() const {
  std::int64_t total = 0;
  for (const auto& site : sites) total += site.gamma.size(-1) + site.beta.size(-1);
  return total;
}

ConditionParserImpl::ConditionParserImpl(std::int64_t input_dim,
                                         std::vector<std::int64_t> site_channels,
                                         std::int64_t hidden, std::int64_t layers)
    : input_dim_(input_dim), site_channels_(std::move(site_channels)) {
  if (input_dim_ <= 0 || hidden <= 0 || layers <= 0 || site_channels_.empty()) {
    throw std::invalid_argument("ConditionParser: all dimensions must be positive");
  }
  const std::int64_t out_dim =
      2 * std::accumulate(site_channels_.begin(), site_channels_.end(), std::int64_t{0});

  body_ = torch::nn::Sequential();
  std::int64_t width = input_dim_;
  for (std::int64_t i = 0; i < layers; ++i) {
    body_->push_back(torch::nn::Linear(width, hidden));
    body_->push_back(torch::nn::ReLU());
    width = hidden;
  }
  head_ = torch::nn::Linear(width, out_dim);
  register_module("body", body_);
  register_module("head", head_);
}

void ConditionParserImpl::reset_head_bias() {
  torch::NoGradGuard no_grad;
  head_->bias.zero_();
  std::int64_t offset = 0;
  for (const auto channels : site_channels_) {
    head_->bias.slice(0, offset, offset + channels).fill_(1.0);
    offset += 2 * channels;
  }
}

AdaInParams ConditionParserImpl::forward(const torch::Tensor& cond) {
  const bool single = cond.dim() == 1;
  auto input = single ? cond.unsqueeze(0) : cond;
  if (input.dim() != 2 || input.size(1) != input_dim_) {
    throw std::invalid_argument("ConditionParser: condition dimension " +
                                std::to_string(input.size(-1)) + " does not match MLP input " +
                                std::to_string(input_dim_));
  }
  auto flat = head_->forward(body_->forward(input));  // (B, 2 * sum C)

  AdaInParams params;
  std::int64_t offset = 0;
  for (const auto channels : site_channels_) {
    auto gamma = flat.slice(1, offset, offset + channels);
    auto beta = flat.slice(1, offset + channels, offset + 2 * channels);
    offset += 2 * channels;
    if (single) {
      gamma = gamma.squeeze(0);
      beta = beta.squeeze(0);
    }
    params.sites.push_back({gamma, beta});
  }
  return params;
}

}  // namespace attribpaint::cond
