#include "attribpaint/data/fixture.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "attribpaint/core/errors.hpp"
#include "attribpaint/core/rng.hpp"

namespace attribpaint::data {

namespace {

struct ArtistPalette {
  const char* name;
  cv::Scalar base;  // BGR
};

// Hue families far apart in RGB so a nearest-mean-color rule separates the
// artists perfectly.
constexpr int kArtistCount = 4;
const std::array<ArtistPalette, kArtistCount>& palettes() {
  static const std::array<ArtistPalette, kArtistCount> p = {{
      {"cezanne", cv::Scalar(40, 190, 50)},    // green
      {"monet", cv::Scalar(215, 90, 35)},      // blue
      {"picasso", cv::Scalar(35, 35, 215)},    // red
      {"vangogh", cv::Scalar(35, 205, 225)},   // yellow
  }};
  return p;
}

const std::array<const char*, 2> kPeriods = {"early", "late"};
const std::array<const char*, 2> kGenres = {"cubism", "impressionism"};

cv::Scalar scale_color(const cv::Scalar& c, double f) {
  return {std::clamp(c[0] * f, 0.0, 255.0), std::clamp(c[1] * f, 0.0, 255.0),
          std::clamp(c[2] * f, 0.0, 255.0)};
}

cv::Scalar lighten(const cv::Scalar& c, double amount) {
  return {std::clamp(c[0] + amount, 0.0, 255.0), std::clamp(c[1] + amount, 0.0, 255.0),
          std::clamp(c[2] + amount, 0.0, 255.0)};
}

void add_noise(cv::Mat& img, RngSource& rng, double amplitude) {
  for (int y = 0; y < img.rows; ++y) {
    auto* row = img.ptr<cv::Vec3b>(y);
    for (int x = 0; x < img.cols; ++x) {
      for (int c = 0; c < 3; ++c) {
        const double jitter = (rng.uniform() * 2.0 - 1.0) * amplitude;
        row[x][c] = cv::saturate_cast<uchar>(row[x][c] + jitter);
      }
    }
  }
}

cv::Mat style_image(int size, const cv::Scalar& base, const std::string& genre,
                    RngSource& rng) {
  cv::Mat img(size, size, CV_8UC3, base);
  const auto accent = lighten(base, 70.0);
  if (genre == "cubism") {
    // diagonal stripe lattice
    const int step = std::max(6, size / 8);
    for (int d = -size; d < 2 * size; d += step) {
      cv::line(img, {d, 0}, {d + size, size}, accent, std::max(2, step / 3));
    }
  } else {
    // impressionist dabs
    const int step = std::max(8, size / 8);
    for (int y = step / 2; y < size; y += step) {
      for (int x = step / 2; x < size; x += step) {
        const int jx = static_cast<int>(rng.uniform_int(-step / 4, step / 4 + 1));
        const int jy = static_cast<int>(rng.uniform_int(-step / 4, step / 4 + 1));
        cv::circle(img, {x + jx, y + jy}, std::max(2, step / 3), accent, cv::FILLED);
      }
    }
  }
  add_noise(img, rng, 8.0);
  return img;
}

cv::Mat content_image(int size, int index, RngSource& rng) {
  cv::Mat img(size, size, CV_8UC3);
  // desaturated gradient backdrop, direction varies per image
  const bool horizontal = index % 2 == 0;
  for (int y = 0; y < size; ++y) {
    auto* row = img.ptr<cv::Vec3b>(y);
    for (int x = 0; x < size; ++x) {
      const double t = horizontal ? static_cast<double>(x) / size
                                  : static_cast<double>(y) / size;
      const auto v = cv::saturate_cast<uchar>(60 + t * 140);
      row[x] = {v, v, v};
    }
  }
  // a few mid-gray shapes so reconstruction has structure to preserve
  const int shapes = 2 + index % 3;
  for (int s = 0; s < shapes; ++s) {
    const auto gray = cv::Scalar::all(70 + 30 * ((index + s) % 5));
    const int cx = static_cast<int>(rng.uniform_int(size / 6, size - size / 6));
    const int cy = static_cast<int>(rng.uniform_int(size / 6, size - size / 6));
    const int r = static_cast<int>(rng.uniform_int(size / 10, size / 4));
    if ((index + s) % 2 == 0) {
      cv::circle(img, {cx, cy}, r, gray, cv::FILLED);
    } else {
      cv::rectangle(img, {cx - r, cy - r}, {cx + r, cy + r}, gray, cv::FILLED);
    }
  }
  add_noise(img, rng, 5.0);
  return img;
}

}  // namespace

void write_fixture(const std::string& dir, const FixtureSpec& spec) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  fs::create_directories(root / "images");

  RngSource rng(mix_seed(spec.seed ^ 0xf1c7u));
  const int size = static_cast<int>(spec.image_size);

  std::ofstream style_manifest(root / "style.tsv");
  if (!style_manifest) throw DataError("fixture: cannot write manifests under '" + dir + "'");
  style_manifest << "path\tartist\tperiod\tgenre\n";
  for (const auto& palette : palettes()) {
    for (std::size_t pi = 0; pi < kPeriods.size(); ++pi) {
      const double brightness = pi == 0 ? 0.45 : 1.0;
      for (const auto* genre : kGenres) {
        const auto img = style_image(size, scale_color(palette.base, brightness), genre, rng);
        const std::string name = std::string("images/style_") + palette.name + "_" +
                                 kPeriods[pi] + "_" + genre + ".png";
        if (!cv::imwrite((root / name).string(), img)) {
          throw DataError("fixture: failed to write " + name);
        }
        style_manifest << name << '\t' << palette.name << '\t' << kPeriods[pi] << '\t'
                       << genre << '\n';
      }
    }
  }

  std::ofstream content_manifest(root / "content.tsv");
  content_manifest << "path\n";
  for (std::int64_t i = 0; i < spec.content_count; ++i) {
    const auto img = content_image(size, static_cast<int>(i), rng);
    const std::string name = "images/content_" + std::to_string(i) + ".png";
    if (!cv::imwrite((root / name).string(), img)) {
      throw DataError("fixture: failed to write " + name);
    }
    content_manifest << name << '\n';
  }
}

}  // namespace attribpaint::data
