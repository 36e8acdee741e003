#include "attribpaint/data/dataset.hpp"

#include <filesystem>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "attribpaint/core/errors.hpp"

namespace attribpaint::data {

torch::Tensor preprocess(const std::string& file, std::int64_t image_size) {
  cv::Mat raw = cv::imread(file, cv::IMREAD_UNCHANGED);
  if (raw.empty()) throw DataError("preprocess: cannot decode image '" + file + "'");
  if (raw.channels() != 3) {
    throw DataError("preprocess: '" + file + "' has " + std::to_string(raw.channels()) +
                    " channels, expected 3");
  }

  // center-crop to square, then bilinear resize
  const int side = std::min(raw.rows, raw.cols);
  const int off_y = (raw.rows - side) / 2;
  const int off_x = (raw.cols - side) / 2;
  cv::Mat square = raw(cv::Rect(off_x, off_y, side, side));
  cv::Mat resized;
  cv::resize(square, resized, cv::Size(static_cast<int>(image_size), static_cast<int>(image_size)),
             0, 0, cv::INTER_LINEAR);

  cv::Mat rgb;
  cv::cvtColor(resized, rgb, cv::COLOR_BGR2RGB);
  cv::Mat as_float;
  rgb.convertTo(as_float, CV_32FC3, 1.0 / 127.5, -1.0);

  auto tensor = torch::from_blob(as_float.data, {image_size, image_size, 3}, torch::kFloat32)
                    .permute({2, 0, 1})
                    .clone()
                    .unsqueeze(0);
  return tensor.clamp(-1.0, 1.0);
}

Dataset::Dataset(const std::string& style_manifest_path,
                 const std::string& content_manifest_path, std::int64_t image_size,
                 double holdout_fraction)
    : image_size_(image_size) {
  auto style_manifest = load_manifest(style_manifest_path);
  if (!style_manifest.schema) {
    throw DataError("dataset: '" + style_manifest_path +
                    "' is not a labeled style manifest (header must be path/artist/period/genre)");
  }
  auto content_manifest = load_manifest(content_manifest_path);
  if (content_manifest.schema) {
    throw DataError("dataset: '" + content_manifest_path +
                    "' must be an unlabeled content manifest (header 'path')");
  }
  schema_ = *style_manifest.schema;
  pair_counts_ = style_manifest.pair_counts;

  const auto style_dir = std::filesystem::path(style_manifest_path).parent_path();
  const auto content_dir = std::filesystem::path(content_manifest_path).parent_path();

  auto [style_entries, style_held] = split_holdout(style_manifest.entries, holdout_fraction);
  (void)style_held;
  for (const auto& entry : style_entries) {
    StyleItem item;
    item.image = preprocess((style_dir / entry.path).string(), image_size_);
    item.labels = {schema_.artist_index(entry.artist), schema_.period_index(entry.period),
                   schema_.genre_index(entry.genre)};
    style_.push_back(std::move(item));
  }
  for (const auto& entry : content_manifest.entries) {
    content_.push_back(preprocess((content_dir / entry.path).string(), image_size_));
  }
  if (style_.empty()) throw DataError("dataset: style pool is empty after holdout");
  if (content_.empty()) throw DataError("dataset: content pool is empty");
}

Batch Dataset::sample(RngSource& rng, std::int64_t batch_size) const {
  if (batch_size <= 0) throw std::invalid_argument("sample: batch_size must be positive");

  auto flip = [](const torch::Tensor& img) { return img.flip(3); };

  std::vector<torch::Tensor> content_rows, style_rows;
  auto labels = torch::zeros({batch_size, 3}, torch::kInt64);
  for (std::int64_t i = 0; i < batch_size; ++i) {
    const auto idx = rng.uniform_int(0, content_count());
    auto img = content_[idx];
    content_rows.push_back(rng.bernoulli(0.5) ? flip(img) : img);
  }
  for (std::int64_t i = 0; i < batch_size; ++i) {
    const auto idx = rng.uniform_int(0, style_count());
    const auto& item = style_[idx];
    style_rows.push_back(rng.bernoulli(0.5) ? flip(item.image) : item.image);
    labels[i][0] = item.labels[0];
    labels[i][1] = item.labels[1];
    labels[i][2] = item.labels[2];
  }
  return Batch{torch::cat(content_rows, 0), torch::cat(style_rows, 0), labels};
}

std::pair<torch::Tensor, torch::Tensor> Dataset::all_style() const {
  std::vector<torch::Tensor> rows;
  auto labels = torch::zeros({style_count(), 3}, torch::kInt64);
  for (std::int64_t i = 0; i < style_count(); ++i) {
    rows.push_back(style_[i].image);
    labels[i][0] = style_[i].labels[0];
    labels[i][1] = style_[i].labels[1];
    labels[i][2] = style_[i].labels[2];
  }
  return {torch::cat(rows, 0), labels};
}

torch::Tensor Dataset::all_content() const {
  std::vector<torch::Tensor> rows(content_.begin(), content_.end());
  return torch::cat(rows, 0);
}

}  // namespace attribpaint::data
