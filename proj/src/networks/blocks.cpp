#include "attribpaint/networks/blocks.hpp"

namespace attribpaint::nets {

namespace {

torch::nn::Conv2d reflect_conv(std::int64_t in, std::int64_t out, std::int64_t kernel,
                               std::int64_t stride) {
  return torch::nn::Conv2d(torch::nn::Conv2dOptions(in, out, kernel)
                               .stride(stride)
                               .padding(kernel / 2)
                               .padding_mode(torch::kReflect));
}

}  // namespace

ConvStemImpl::ConvStemImpl(std::int64_t in_channels, std::int64_t out_channels) {
  conv = register_module("conv", reflect_conv(in_channels, out_channels, 7, 1));
  norm = register_module("norm", torch::nn::InstanceNorm2d(out_channels));
}

torch::Tensor ConvStemImpl::forward(const torch::Tensor& x) {
  return torch::relu(norm->forward(conv->forward(x)));
}

DownBlockImpl::DownBlockImpl(std::int64_t in_channels, std::int64_t out_channels) {
  conv = register_module("conv", reflect_conv(in_channels, out_channels, 3, 2));
  norm = register_module("norm", torch::nn::InstanceNorm2d(out_channels));
}

torch::Tensor DownBlockImpl::forward(const torch::Tensor& x) {
  return torch::relu(norm->forward(conv->forward(x)));
}

UpBlockImpl::UpBlockImpl(std::int64_t in_channels, std::int64_t out_channels) {
  conv = register_module("conv", reflect_conv(in_channels, out_channels, 3, 1));
  norm = register_module("norm", torch::nn::GroupNorm(
                                     torch::nn::GroupNormOptions(1, out_channels)));
}

torch::Tensor UpBlockImpl::forward(const torch::Tensor& x) {
  namespace F = torch::nn::functional;
  auto up = F::interpolate(x, F::InterpolateFuncOptions()
                                  .scale_factor(std::vector<double>{2.0, 2.0})
                                  .mode(torch::kNearest));
  return torch::relu(norm->forward(conv->forward(up)));
}

ResBlockImpl::ResBlockImpl(std::int64_t channels) {
  conv1 = register_module("conv1", reflect_conv(channels, channels, 3, 1));
  conv2 = register_module("conv2", reflect_conv(channels, channels, 3, 1));
  norm1 = register_module("norm1", torch::nn::InstanceNorm2d(channels));
  norm2 = register_module("norm2", torch::nn::InstanceNorm2d(channels));
}

torch::Tensor ResBlockImpl::forward(const torch::Tensor& x) {
  auto h = torch::relu(norm1->forward(conv1->forward(x)));
  h = norm2->forward(conv2->forward(h));
  return x + h;
}

AdainResBlockImpl::AdainResBlockImpl(std::int64_t channels_) : channels(channels_) {
  conv1 = register_module("conv1", reflect_conv(channels, channels, 3, 1));
  conv2 = register_module("conv2", reflect_conv(channels, channels, 3, 1));
}

torch::Tensor AdainResBlockImpl::forward(const torch::Tensor& x,
                                         const cond::AdaInParams::Site& site1,
                                         const cond::AdaInParams::Site& site2) {
  auto h = torch::relu(cond::adain(conv1->forward(x), site1.gamma, site1.beta));
  h = cond::adain(conv2->forward(h), site2.gamma, site2.beta);
  return x + h;
}

ToImageImpl::ToImageImpl(std::int64_t in_channels) {
  conv = register_module("conv", reflect_conv(in_channels, 3, 7, 1));
}

torch::Tensor ToImageImpl::forward(const torch::Tensor& x) {
  return torch::tanh(conv->forward(x));
}

}  // namespace attribpaint::nets
