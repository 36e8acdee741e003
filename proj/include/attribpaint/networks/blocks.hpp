#pragma once

#include <torch/torch.h>

#include "attribpaint/conditioning/adain.hpp"
#include "attribpaint/conditioning/parser.hpp"

namespace attribpaint::nets {

// Generator building blocks. All convolutions use reflection padding; the
// decoder upsamples with nearest-neighbor + conv (never transposed
// convolution). Plain blocks use affine-free instance norm; upsample stages
// use channelwise layer norm (GroupNorm with one group) so the statistics
// AdaIN imposed upstream are not re-whitened away.

struct ConvStemImpl : torch::nn::Module {
  ConvStemImpl(std::int64_t in_channels, std::int64_t out_channels);
  torch::Tensor forward(const torch::Tensor& x);

  torch::nn::Conv2d conv{nullptr};
  torch::nn::InstanceNorm2d norm{nullptr};
};
TORCH_MODULE(ConvStem);

struct DownBlockImpl : torch::nn::Module {
  DownBlockImpl(std::int64_t in_channels, std::int64_t out_channels);
  torch::Tensor forward(const torch::Tensor& x);

  torch::nn::Conv2d conv{nullptr};
  torch::nn::InstanceNorm2d norm{nullptr};
};
TORCH_MODULE(DownBlock);

struct UpBlockImpl : torch::nn::Module {
  UpBlockImpl(std::int64_t in_channels, std::int64_t out_channels);
  torch::Tensor forward(const torch::Tensor& x);

  torch::nn::Conv2d conv{nullptr};
  torch::nn::GroupNorm norm{nullptr};
};
TORCH_MODULE(UpBlock);

/// conv-norm-relu-conv-norm with additive skip, instance-normalized.
struct ResBlockImpl : torch::nn::Module {
  explicit ResBlockImpl(std::int64_t channels);
  torch::Tensor forward(const torch::Tensor& x);

  torch::nn::Conv2d conv1{nullptr}, conv2{nullptr};
  torch::nn::InstanceNorm2d norm1{nullptr}, norm2{nullptr};
};
TORCH_MODULE(ResBlock);

/// Residual block whose two norms are AdaIN sites fed by the condition
/// parser; consumes two (gamma, beta) pairs per forward pass.
struct AdainResBlockImpl : torch::nn::Module {
  explicit AdainResBlockImpl(std::int64_t channels);
  torch::Tensor forward(const torch::Tensor& x, const cond::AdaInParams::Site& site1,
                        const cond::AdaInParams::Site& site2);

  std::int64_t channels;
  torch::nn::Conv2d conv1{nullptr}, conv2{nullptr};
};
TORCH_MODULE(AdainResBlock);

/// Final 7x7 conv to RGB with tanh, bounding outputs to [-1, 1].
struct ToImageImpl : torch::nn::Module {
  explicit ToImageImpl(std::int64_t in_channels);
  torch::Tensor forward(const torch::Tensor& x);

  torch::nn::Conv2d conv{nullptr};
};
TORCH_MODULE(ToImage);

}  // namespace attribpaint::nets
