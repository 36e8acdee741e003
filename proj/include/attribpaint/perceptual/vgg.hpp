#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <torch/torch.h>

namespace attribpaint::perceptual {

/// The four tap activations, spatial size strictly decreasing with depth.
struct FeaturePyramid {
  static constexpr std::array<const char*, 4> kTapNames = {"relu1_2", "relu2_2",
                                                           "relu3_3", "relu4_3"};
  std::array<torch::Tensor, 4> maps;
};

// Frozen VGG16-topology feature extractor backing the style-preserving
// loss. Taps are the last activation of each of the first four conv stages
// (widths 64/128/256/512). Weights either come from a container file
// (config key perceptual.weights, exportable via scripts/export_vgg16.py)
// or, for offline tests, from a deterministic seeded init with
// variance-preserving scale. Parameters never require grad; gradients flow
// only into the inputs.
class Vgg16BackboneImpl : public torch::nn::Module {
 public:
  Vgg16BackboneImpl();

  /// img is a [-1, 1] image tensor; ImageNet normalization is applied
  /// internally so callers only ever handle one range.
  FeaturePyramid features(const torch::Tensor& img);

  void freeze();

  /// Layer widths of the published topology, stage-major.
  static const std::array<std::int64_t, 4>& stage_widths();

 private:
  torch::nn::Sequential stage1_{nullptr}, stage2_{nullptr}, stage3_{nullptr},
      stage4_{nullptr};
};
TORCH_MODULE(Vgg16Backbone);

/// Deterministic random backbone for download-free test and fixture runs.
Vgg16Backbone make_test_backbone(std::uint64_t seed);

/// Loads backbone weights from a container archive (kind "vgg16_backbone").
Vgg16Backbone load_backbone(const std::string& path);

/// Seeded test backbone when `weights_path` is empty, file-backed otherwise.
Vgg16Backbone make_backbone(const std::string& weights_path, std::uint64_t seed);

/// Per-sample Gram matrices: flatten spatial dims to N and return
/// (F F^T) / (C N), shape (B, C, C). Symmetric PSD by construction.
torch::Tensor gram(const torch::Tensor& feature_map);

/// Style-preserving distance: sum over the four taps of the entrywise L1
/// distance between Gram matrices, averaged over the batch.
torch::Tensor style_distance(Vgg16Backbone& backbone, const torch::Tensor& a,
                             const torch::Tensor& b);

}  // namespace attribpaint::perceptual
