#include "attribpaint/networks/discriminators.hpp"

namespace attribpaint::nets {

namespace {

// Three stride-2 stages; no norm on the first (standard patch-discriminator
// layout), affine-free instance norm afterwards.
torch::nn::Sequential make_trunk(std::int64_t cb) {
  using torch::nn::Conv2d;
  using torch::nn::Conv2dOptions;
  return torch::nn::Sequential(
      Conv2d(Conv2dOptions(3, cb, 4).stride(2).padding(1)),
      torch::nn::LeakyReLU(torch::nn::LeakyReLUOptions().negative_slope(0.2)),
      Conv2d(Conv2dOptions(cb, cb * 2, 4).stride(2).padding(1)),
      torch::nn::InstanceNorm2d(cb * 2),
      torch::nn::LeakyReLU(torch::nn::LeakyReLUOptions().negative_slope(0.2)),
      Conv2d(Conv2dOptions(cb * 2, cb * 4, 4).stride(2).padding(1)),
      torch::nn::InstanceNorm2d(cb * 4),
      torch::nn::LeakyReLU(torch::nn::LeakyReLUOptions().negative_slope(0.2)));
}

}  // namespace

StyleDiscriminatorImpl::StyleDiscriminatorImpl(std::int64_t channel_base,
                                               std::int64_t n_artists,
                                               std::int64_t n_periods,
                                               std::int64_t n_genres) {
  const auto top = channel_base * 4;
  trunk_ = register_module("trunk", make_trunk(channel_base));
  realness_ = register_module(
      "realness", torch::nn::Conv2d(torch::nn::Conv2dOptions(top, 1, 3).padding(1)));
  artist_head_ = register_module("artist_head", torch::nn::Linear(top, n_artists));
  period_head_ = register_module("period_head", torch::nn::Linear(top, n_periods));
  genre_head_ = register_module("genre_head", torch::nn::Linear(top, n_genres));
}

StyleScores StyleDiscriminatorImpl::forward(const torch::Tensor& img) {
  auto features = trunk_->forward(img);
  auto pooled = features.mean({2, 3});  // (B, top)
  return StyleScores{realness_->forward(features), artist_head_->forward(pooled),
                     period_head_->forward(pooled), genre_head_->forward(pooled)};
}

ContentDiscriminatorImpl::ContentDiscriminatorImpl(std::int64_t channel_base) {
  trunk_ = register_module("trunk", make_trunk(channel_base));
  realness_ = register_module(
      "realness",
      torch::nn::Conv2d(torch::nn::Conv2dOptions(channel_base * 4, 1, 3).padding(1)));
}

torch::Tensor ContentDiscriminatorImpl::forward(const torch::Tensor& img) {
  return realness_->forward(trunk_->forward(img));
}

StyleDiscriminator make_style_discriminator(const RunConfig& config,
                                            const AttributeSchema& schema) {
  return StyleDiscriminator(config.channel_base, schema.n_artists(), schema.n_periods(),
                            schema.n_genres());
}

ContentDiscriminator make_content_discriminator(const RunConfig& config) {
  return ContentDiscriminator(config.channel_base);
}

}  // namespace attribpaint::nets
