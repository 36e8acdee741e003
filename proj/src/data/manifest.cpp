#include "attribpaint/data/manifest.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "attribpaint/core/errors.hpp"

namespace attribpaint::data {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, '\t')) fields.push_back(field);
  return fields;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

}  // namespace

LoadedManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("manifest: cannot open '" + path + "'");
  const auto base_dir = std::filesystem::path(path).parent_path();

  std::string line;
  if (!std::getline(in, line)) throw DataError("manifest: empty manifest '" + path + "'");
  const auto header = split_tabs(strip_cr(line));

  bool labeled = false;
  if (header == std::vector<std::string>{"path", "artist", "period", "genre"}) {
    labeled = true;
  } else if (header != std::vector<std::string>{"path"}) {
    std::string got;
    for (const auto& f : header) got += (got.empty() ? "" : ", ") + f;
    throw DataError("manifest: '" + path + "' line 1: unknown field set [" + got +
                    "]; expected 'path' or 'path, artist, period, genre'");
  }

  LoadedManifest result;
  std::set<std::string> artists, periods, genres;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    const std::size_t expected = labeled ? 4 : 1;
    if (fields.size() != expected) {
      throw DataError("manifest: '" + path + "' line " + std::to_string(line_no) + ": expected " +
                      std::to_string(expected) + " tab-separated fields, got " +
                      std::to_string(fields.size()));
    }
    ManifestEntry entry;
    entry.path = fields[0];
    if (entry.path.empty()) {
      throw DataError("manifest: '" + path + "' line " + std::to_string(line_no) + ": empty path");
    }
    if (labeled) {
      entry.artist = fields[1];
      entry.period = fields[2];
      entry.genre = fields[3];
      if (entry.artist.empty() || entry.period.empty() || entry.genre.empty()) {
        throw DataError("manifest: '" + path + "' line " + std::to_string(line_no) +
                        ": empty label field");
      }
      artists.insert(entry.artist);
      periods.insert(entry.period);
      genres.insert(entry.genre);
      ++result.pair_counts[{entry.artist, entry.period}];
    }
    const auto image_path = base_dir / entry.path;
    if (!std::filesystem::exists(image_path)) {
      throw DataError("manifest: '" + path + "' line " + std::to_string(line_no) +
                      ": image file not found: " + image_path.string());
    }
    result.entries.push_back(std::move(entry));
  }

  if (result.entries.empty()) {
    throw DataError("manifest: empty manifest '" + path + "' (header only)");
  }
  if (labeled) {
    AttributeSchema schema;
    schema.artists.assign(artists.begin(), artists.end());
    schema.periods.assign(periods.begin(), periods.end());
    schema.genres.assign(genres.begin(), genres.end());
    schema.validate();
    result.schema = std::move(schema);
  }
  return result;
}

std::pair<std::vector<ManifestEntry>, std::vector<ManifestEntry>> split_holdout(
    const std::vector<ManifestEntry>& entries, double fraction) {
  if (!(fraction >= 0.0 && fraction < 1.0)) {
    throw std::invalid_argument("split_holdout: fraction must lie in [0, 1)");
  }
  const auto held = static_cast<std::size_t>(
      std::floor(fraction * static_cast<double>(entries.size())));
  const auto kept = entries.size() - held;
  return {{entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(kept)},
          {entries.begin() + static_cast<std::ptrdiff_t>(kept), entries.end()}};
}

}  // namespace attribpaint::data
