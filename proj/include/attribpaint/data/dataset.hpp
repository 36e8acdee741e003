#pragma once

#include <string>
#include <vector>

#include <torch/torch.h>

#include "attribpaint/core/rng.hpp"
#include "attribpaint/core/schema.hpp"
#include "attribpaint/data/manifest.hpp"

namespace attribpaint::data {

/// Decodes an image file to a (1, 3, size, size) tensor in [-1, 1]:
/// center-crop to square, bilinear resize, linear range map. Rejects
/// undecodable files and non-3-channel images.
torch::Tensor preprocess(const std::string& file, std::int64_t image_size);

/// Aligned content/style batch; labels are (B, 3) schema indices for the
/// style rows.
struct Batch {
  torch::Tensor content;  // (B, 3, S, S)
  torch::Tensor style;    // (B, 3, S, S)
  torch::Tensor labels;   // (B, 3) int64
};

// Preprocessed in-memory pools of content and style images with uniform
// with-replacement sampling and horizontal-flip augmentation. The decoded
// cache is filled at construction and read-only afterwards; all sampling
// randomness comes from the caller's RngSource.
class Dataset {
 public:
  Dataset(const std::string& style_manifest_path,
          const std::string& content_manifest_path, std::int64_t image_size,
          double holdout_fraction = 0.0);

  Batch sample(RngSource& rng, std::int64_t batch_size) const;

  const AttributeSchema& schema() const { return schema_; }
  std::int64_t style_count() const { return static_cast<std::int64_t>(style_.size()); }
  std::int64_t content_count() const { return static_cast<std::int64_t>(content_.size()); }
  std::int64_t image_size() const { return image_size_; }

  /// All style images stacked with their label triples (judge training).
  std::pair<torch::Tensor, torch::Tensor> all_style() const;
  /// All content images stacked.
  torch::Tensor all_content() const;

  const std::map<std::pair<std::string, std::string>, std::int64_t>& pair_counts() const {
    return pair_counts_;
  }

 private:
  struct StyleItem {
    torch::Tensor image;  // (1, 3, S, S)
    std::array<std::int64_t, 3> labels;
  };

  std::int64_t image_size_;
  AttributeSchema schema_;
  std::vector<StyleItem> style_;
  std::vector<torch::Tensor> content_;
  std::map<std::pair<std::string, std::string>, std::int64_t> pair_counts_;
};

}  // namespace attribpaint::data
