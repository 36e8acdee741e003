#include "attribpaint/networks/generators.hpp"

#include <stdexcept>

namespace attribpaint::nets {

ForwardGeneratorImpl::ForwardGeneratorImpl(std::int64_t channel_base,
                                           std::int64_t n_downsample,
                                           std::int64_t n_res_blocks,
                                           std::int64_t n_adain_blocks) {
  stem_ = register_module("stem", ConvStem(3, channel_base));

  std::int64_t width = channel_base;
  for (std::int64_t i = 0; i < n_downsample; ++i) {
    down_.push_back(register_module("down" + std::to_string(i), DownBlock(width, width * 2)));
    width *= 2;
  }
  bottleneck_ = width;

  for (std::int64_t i = 0; i < n_res_blocks; ++i) {
    res_.push_back(register_module("res" + std::to_string(i), ResBlock(width)));
  }
  for (std::int64_t i = 0; i < n_adain_blocks; ++i) {
    adain_.push_back(register_module("adain" + std::to_string(i), AdainResBlock(width)));
  }

  for (std::int64_t i = 0; i < n_downsample; ++i) {
    up_.push_back(register_module("up" + std::to_string(i), UpBlock(width, width / 2)));
    width /= 2;
  }
  head_ = register_module("head", ToImage(width));
}

std::vector<std::int64_t> ForwardGeneratorImpl::adain_site_channels() const {
  std::vector<std::int64_t> channels;
  for (const auto& block : adain_) {
    channels.push_back(block->channels);
    channels.push_back(block->channels);
  }
  return channels;
}

torch::Tensor ForwardGeneratorImpl::forward(const torch::Tensor& x,
                                            const cond::AdaInParams& params) {
  if (params.sites.size() != 2 * adain_.size()) {
    throw std::invalid_argument("ForwardGenerator: expected " +
                                std::to_string(2 * adain_.size()) + " AdaIN sites, got " +
                                std::to_string(params.sites.size()));
  }
  auto h = stem_->forward(x);
  for (auto& block : down_) h = block->forward(h);
  for (auto& block : res_) h = block->forward(h);
  for (std::size_t i = 0; i < adain_.size(); ++i) {
    h = adain_[i]->forward(h, params.sites[2 * i], params.sites[2 * i + 1]);
  }
  for (auto& block : up_) h = block->forward(h);
  return head_->forward(h);
}

BackwardGeneratorImpl::BackwardGeneratorImpl(std::int64_t channel_base,
                                             std::int64_t n_downsample,
                                             std::int64_t n_blocks) {
  stem_ = register_module("stem", ConvStem(3, channel_base));
  std::int64_t width = channel_base;
  for (std::int64_t i = 0; i < n_downsample; ++i) {
    down_.push_back(register_module("down" + std::to_string(i), DownBlock(width, width * 2)));
    width *= 2;
  }
  for (std::int64_t i = 0; i < n_blocks; ++i) {
    res_.push_back(register_module("res" + std::to_string(i), ResBlock(width)));
  }
  for (std::int64_t i = 0; i < n_downsample; ++i) {
    up_.push_back(register_module("up" + std::to_string(i), UpBlock(width, width / 2)));
    width /= 2;
  }
  head_ = register_module("head", ToImage(width));
}

torch::Tensor BackwardGeneratorImpl::forward(const torch::Tensor& y) {
  auto h = stem_->forward(y);
  for (auto& block : down_) h = block->forward(h);
  for (auto& block : res_) h = block->forward(h);
  for (auto& block : up_) h = block->forward(h);
  return head_->forward(h);
}

ForwardGenerator make_forward_generator(const RunConfig& config) {
  return ForwardGenerator(config.channel_base, config.n_downsample, config.n_res_blocks,
                          config.n_adain_blocks);
}

BackwardGenerator make_backward_generator(const RunConfig& config) {
  return BackwardGenerator(config.channel_base, config.n_downsample,
                           config.n_res_blocks + config.n_adain_blocks);
}

cond::ConditionParser make_condition_parser(const RunConfig& config,
                                            std::int64_t condition_dim,
                                            const ForwardGenerator& generator) {
  return cond::ConditionParser(condition_dim, generator->adain_site_channels(),
                               config.mlp_hidden, config.mlp_layers);
}

}  // namespace attribpaint::nets
