#pragma once

#include <torch/torch.h>

namespace attribpaint::cond {

inline constexpr double kAdainEpsilon = 1e-5;

/// Adaptive instance normalization: per sample and channel, re-normalizes
/// the spatial statistics of `features` (B, C, H, W) and applies the
/// externally supplied affine:
///
///   out = gamma * (z - mean(z)) / sqrt(var(z) + epsilon) + beta
///
/// gamma/beta are (C) shared across the batch or (B, C) per sample. The
/// epsilon keeps spatially constant channels finite. Differentiable in
/// features, gamma and beta.
torch::Tensor adain(const torch::Tensor& features, const torch::Tensor& gamma,
                    const torch::Tensor& beta, double epsilon = kAdainEpsilon);

}  // namespace attribpaint::cond
