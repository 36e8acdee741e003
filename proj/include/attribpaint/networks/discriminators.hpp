#pragma once

#include <torch/torch.h>

#include "attribpaint/core/config.hpp"
#include "attribpaint/core/schema.hpp"

namespace attribpaint::nets {

/// Realness patch-logit map plus one classification head per attribute axis,
/// all fed by the same trunk features.
struct StyleScores {
  torch::Tensor realness;  // (B, 1, h, w) patch logits
  torch::Tensor artist;    // (B, N_a)
  torch::Tensor period;    // (B, N_p)
  torch::Tensor genre;     // (B, N_g)
};

// Multi-task style discriminator D_y: three stride-2 conv stages shared by
// a patch realness head and per-axis attribute heads (global average pool +
// linear).
class StyleDiscriminatorImpl : public torch::nn::Module {
 public:
  StyleDiscriminatorImpl(std::int64_t channel_base, std::int64_t n_artists,
                         std::int64_t n_periods, std::int64_t n_genres);

  StyleScores forward(const torch::Tensor& img);

 private:
  torch::nn::Sequential trunk_{nullptr};
  torch::nn::Conv2d realness_{nullptr};
  torch::nn::Linear artist_head_{nullptr}, period_head_{nullptr}, genre_head_{nullptr};
};
TORCH_MODULE(StyleDiscriminator);

// Content discriminator D_x: same trunk shape, realness head only. No
// attribute heads by construction.
class ContentDiscriminatorImpl : public torch::nn::Module {
 public:
  explicit ContentDiscriminatorImpl(std::int64_t channel_base);

  torch::Tensor forward(const torch::Tensor& img);  // (B, 1, h, w) patch logits

 private:
  torch::nn::Sequential trunk_{nullptr};
  torch::nn::Conv2d realness_{nullptr};
};
TORCH_MODULE(ContentDiscriminator);

StyleDiscriminator make_style_discriminator(const RunConfig& config,
                                            const AttributeSchema& schema);
ContentDiscriminator make_content_discriminator(const RunConfig& config);

}  // namespace attribpaint::nets
