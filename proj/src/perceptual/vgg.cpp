#include "attribpaint/perceptual/vgg.hpp"

#include <cmath>
#include <stdexcept>

#include "attribpaint/core/errors.hpp"
#include "attribpaint/core/rng.hpp"
#include "attribpaint/io/container.hpp"

namespace attribpaint::perceptual {

namespace {

torch::nn::Conv2d vgg_conv(std::int64_t in, std::int64_t out) {
  return torch::nn::Conv2d(torch::nn::Conv2dOptions(in, out, 3).padding(1));
}

torch::nn::Sequential make_stage(std::int64_t in, std::int64_t out, int convs) {
  torch::nn::Sequential stage;
  stage->push_back(vgg_conv(in, out));
  stage->push_back(torch::nn::ReLU());
  for (int i = 1; i < convs; ++i) {
    stage->push_back(vgg_conv(out, out));
    stage->push_back(torch::nn::ReLU());
  }
  return stage;
}

const torch::Tensor& imagenet_mean() {
  static const torch::Tensor mean =
      torch::tensor({0.485, 0.456, 0.406}, torch::kFloat64).reshape({1, 3, 1, 1});
  return mean;
}

const torch::Tensor& imagenet_std() {
  static const torch::Tensor std =
      torch::tensor({0.229, 0.224, 0.225}, torch::kFloat64).reshape({1, 3, 1, 1});
  return std;
}

}  // namespace

const std::array<std::int64_t, 4>& Vgg16BackboneImpl::stage_widths() {
  static const std::array<std::int64_t, 4> widths = {64, 128, 256, 512};
  return widths;
}

Vgg16BackboneImpl::Vgg16BackboneImpl() {
  stage1_ = register_module("stage1", make_stage(3, 64, 2));
  stage2_ = register_module("stage2", make_stage(64, 128, 2));
  stage3_ = register_module("stage3", make_stage(128, 256, 3));
  stage4_ = register_module("stage4", make_stage(256, 512, 3));
}

void Vgg16BackboneImpl::freeze() {
  for (auto& param : parameters()) param.set_requires_grad(false);
}

FeaturePyramid Vgg16BackboneImpl::features(const torch::Tensor& img) {
  if (img.dim() != 4 || img.size(1) != 3) {
    throw std::invalid_argument("Vgg16Backbone: expected (B, 3, H, W) input");
  }
  const auto opts = torch::TensorOptions().dtype(img.dtype());
  const auto mean = imagenet_mean().to(opts);
  const auto std = imagenet_std().to(opts);
  auto x = ((img + 1.0) * 0.5 - mean) / std;

  FeaturePyramid pyramid;
  namespace F = torch::nn::functional;
  const auto pool = F::MaxPool2dFuncOptions(2).stride(2);
  x = stage1_->forward(x);
  pyramid.maps[0] = x;
  x = stage2_->forward(F::max_pool2d(x, pool));
  pyramid.maps[1] = x;
  x = stage3_->forward(F::max_pool2d(x, pool));
  pyramid.maps[2] = x;
  x = stage4_->forward(F::max_pool2d(x, pool));
  pyramid.maps[3] = x;
  return pyramid;
}

Vgg16Backbone make_test_backbone(std::uint64_t seed) {
  Vgg16Backbone backbone;
  RngSource rng(mix_seed(seed ^ 0x7c67a443a2f1d5ULL));
  torch::NoGradGuard no_grad;
  for (auto& named : backbone->named_parameters()) {
    auto& param = named.value();
    if (named.key().ends_with("bias")) {
      param.zero_();
      continue;
    }
    // variance-preserving scale so taps carry O(1) activations
    const double fan_in = static_cast<double>(param.size(1) * param.size(2) * param.size(3));
    const double scale = std::sqrt(2.0 / fan_in);
    auto flat = param.view({-1});
    auto acc = flat.accessor<float, 1>();
    for (std::int64_t i = 0; i < flat.size(0); ++i) {
      acc[i] = static_cast<float>(rng.normal(0.0, scale));
    }
  }
  backbone->freeze();
  backbone->eval();
  return backbone;
}

Vgg16Backbone load_backbone(const std::string& path) {
  const auto archive = io::Archive::load(path);
  if (archive.meta.value("kind", "") != "vgg16_backbone") {
    throw DataError("backbone file '" + path + "' has kind '" +
                    archive.meta.value("kind", "") + "', expected 'vgg16_backbone'");
  }
  Vgg16Backbone backbone;
  torch::NoGradGuard no_grad;
  for (auto& named : backbone->named_parameters()) {
    const auto& stored = archive.tensor(named.key());
    if (!stored.sizes().equals(named.value().sizes())) {
      throw DataError("backbone tensor '" + named.key() + "' has unexpected shape");
    }
    named.value().copy_(stored);
  }
  backbone->freeze();
  backbone->eval();
  return backbone;
}

Vgg16Backbone make_backbone(const std::string& weights_path, std::uint64_t seed) {
  if (weights_path.empty()) return make_test_backbone(seed);
  return load_backbone(weights_path);
}

torch::Tensor gram(const torch::Tensor& feature_map) {
  if (feature_map.dim() != 4) {
    throw std::invalid_argument("gram: expected a rank-4 feature map");
  }
  const auto batch = feature_map.size(0);
  const auto channels = feature_map.size(1);
  const auto spatial = feature_map.size(2) * feature_map.size(3);
  auto flat = feature_map.reshape({batch, channels, spatial});
  return torch::bmm(flat, flat.transpose(1, 2)) /
         static_cast<double>(channels * spatial);
}

torch::Tensor style_distance(Vgg16Backbone& backbone, const torch::Tensor& a,
                             const torch::Tensor& b) {
  if (a.size(0) != b.size(0)) {
    throw std::invalid_argument("style_distance: batch sizes differ");
  }
  const auto pyramid_a = backbone->features(a);
  const auto pyramid_b = backbone->features(b);
  torch::Tensor total;
  for (std::size_t i = 0; i < pyramid_a.maps.size(); ++i) {
    auto diff = (gram(pyramid_a.maps[i]) - gram(pyramid_b.maps[i])).abs().sum({1, 2});
    total = total.defined() ? total + diff : diff;
  }
  return total.mean();
}

}  // namespace attribpaint::perceptual
