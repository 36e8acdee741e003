#pragma once

#include <cstdint>
#include <string>

namespace attribpaint::data {

/// Parameters for the shipped synthetic fixture: 4 artists x 2 periods x
/// 2 genres, one style image per combination, plus unlabeled content images.
/// Artists map to well-separated hue families (the set is color-separable by
/// construction), periods to brightness, genres to stamp texture.
struct FixtureSpec {
  std::int64_t image_size = 64;
  std::int64_t content_count = 8;
  std::uint64_t seed = 0;
};

/// Writes `<dir>/images/*.png`, `<dir>/style.tsv` and `<dir>/content.tsv`.
/// Deterministic: the same spec always produces byte-identical files.
void write_fixture(const std::string& dir, const FixtureSpec& spec);

}  // namespace attribpaint::data
