#pragma once

#include <string>

#include <torch/torch.h>

namespace attribpaint {

// Image tensors everywhere in this repo are rank-4 float (batch, 3, H, W)
// with values in [-1, 1] (tanh range) and H, W multiples of 4 so the two
// default downsampling stages invert exactly.
inline constexpr double kImageRangeSlack = 1e-6;

/// Throws NumericsError (non-finite / out-of-range values) or
/// std::invalid_argument (wrong shape) with `what` naming the tensor.
void validate_image(const torch::Tensor& image, const std::string& what);

/// Shape/range predicate form of validate_image.
bool is_valid_image(const torch::Tensor& image);

}  // namespace attribpaint
