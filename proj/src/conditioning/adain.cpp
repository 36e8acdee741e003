#include "attribpaint/conditioning/adain.hpp"

#include <stdexcept>
#include <string>

namespace attribpaint::cond {

torch::Tensor adain(const torch::Tensor& features, const torch::Tensor& gamma,
                    const torch::Tensor& beta, double epsilon) {
  if (features.dim() != 4) {
    throw std::invalid_argument("adain: features must be rank-4 (B, C, H, W)");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("adain: epsilon must be positive");
  }
  const auto batch = features.size(0);
  const auto channels = features.size(1);

  auto check_affine = [&](const torch::Tensor& t, const char* name) {
    const bool per_channel = t.dim() == 1 && t.size(0) == channels;
    const bool per_sample = t.dim() == 2 && t.size(0) == batch && t.size(1) == channels;
    if (!per_channel && !per_sample) {
      throw std::invalid_argument(std::string("adain: ") + name +
                                  " must be (C) or (B, C) with C=" + std::to_string(channels));
    }
    return per_sample ? t.reshape({batch, channels, 1, 1})
                      : t.reshape({1, channels, 1, 1});
  };
  const auto g = check_affine(gamma, "gamma");
  const auto b = check_affine(beta, "beta");

  const auto mean = features.mean({2, 3}, /*keepdim=*/true);
  const auto var = features.var({2, 3}, /*unbiased=*/false, /*keepdim=*/true);
  const auto normalized = (features - mean) / torch::sqrt(var + epsilon);
  return g * normalized + b;
}

}  // namespace attribpaint::cond
