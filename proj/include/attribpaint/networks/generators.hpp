#pragma once

#include <vector>

#include <torch/torch.h>

#include "attribpaint/conditioning/parser.hpp"
#include "attribpaint/core/config.hpp"
#include "attribpaint/networks/blocks.hpp"

namespace attribpaint::nets {

// Conditional forward generator G: downsampling conv stages, plain residual
// blocks, AdaIN residual blocks modulated by the parsed condition, then
// nearest-neighbor upsampling + conv decoding back to the input resolution.
// Contains no transposed convolutions; output is tanh-bounded.
class ForwardGeneratorImpl : public torch::nn::Module {
 public:
  ForwardGeneratorImpl(std::int64_t channel_base, std::int64_t n_downsample,
                       std::int64_t n_res_blocks, std::int64_t n_adain_blocks);

  /// `params` must carry exactly 2 * n_adain_blocks sites of bottleneck
  /// width, in forward order.
  torch::Tensor forward(const torch::Tensor& x, const cond::AdaInParams& params);

  /// AdaIN site widths in forward order, for constructing the parser.
  std::vector<std::int64_t> adain_site_channels() const;

  std::int64_t bottleneck_channels() const { return bottleneck_; }

 private:
  std::int64_t bottleneck_ = 0;
  ConvStem stem_{nullptr};
  std::vector<DownBlock> down_;
  std::vector<ResBlock> res_;
  std::vector<AdainResBlock> adain_;
  std::vector<UpBlock> up_;
  ToImage head_{nullptr};
};
TORCH_MODULE(ForwardGenerator);

// Unconditional backward generator F: mirrors G's macro-structure with the
// same depth of plain residual blocks and no conditioning pathway at all.
class BackwardGeneratorImpl : public torch::nn::Module {
 public:
  BackwardGeneratorImpl(std::int64_t channel_base, std::int64_t n_downsample,
                        std::int64_t n_blocks);

  torch::Tensor forward(const torch::Tensor& y);

 private:
  ConvStem stem_{nullptr};
  std::vector<DownBlock> down_;
  std::vector<ResBlock> res_;
  std::vector<UpBlock> up_;
  ToImage head_{nullptr};
};
TORCH_MODULE(BackwardGenerator);

ForwardGenerator make_forward_generator(const RunConfig& config);
BackwardGenerator make_backward_generator(const RunConfig& config);

/// Parser sized to G's AdaIN sites and the schema's condition dimension.
cond::ConditionParser make_condition_parser(const RunConfig& config,
                                            std::int64_t condition_dim,
                                            const ForwardGenerator& generator);

}  // namespace attribpaint::nets
