#include "attribpaint/core/image.hpp"

#include "attribpaint/core/errors.hpp"

namespace attribpaint {

void validate_image(const torch::Tensor& image, const std::string& what) {
  if (!image.defined() || image.dim() != 4) {
    throw std::invalid_argument(what + ": expected a rank-4 (B, C, H, W) tensor");
  }
  if (image.size(1) != 3) {
    throw std::invalid_argument(what + ": expected 3 channels, got " +
                                std::to_string(image.size(1)));
  }
  if (image.size(2) % 4 != 0 || image.size(3) % 4 != 0) {
    throw std::invalid_argument(what + ": H and W must be multiples of 4, got " +
                                std::to_string(image.size(2)) + "x" +
                                std::to_string(image.size(3)));
  }
  if (!torch::isfinite(image).all().item<bool>()) {
    throw NumericsError(what + ": contains non-finite values");
  }
  const double lo = image.min().item<double>();
  const double hi = image.max().item<double>();
  if (lo < -1.0 - kImageRangeSlack || hi > 1.0 + kImageRangeSlack) {
    throw NumericsError(what + ": values outside [-1, 1], range [" +
                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

bool is_valid_image(const torch::Tensor& image) {
  try {
    validate_image(image, "image");
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace attribpaint
