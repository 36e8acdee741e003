#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "attribpaint/core/schema.hpp"

namespace attribpaint::data {

/// One manifest line. Style entries carry all three labels; content entries
/// carry only the path.
struct ManifestEntry {
  std::string path;  // relative to the manifest's directory
  std::string artist, period, genre;

  bool labeled() const { return !artist.empty(); }
};

struct LoadedManifest {
  std::vector<ManifestEntry> entries;
  /// Present for labeled manifests: sorted unique labels per axis.
  std::optional<AttributeSchema> schema;
  /// Image counts per (artist, period), for the training log.
  std::map<std::pair<std::string, std::string>, std::int64_t> pair_counts;
};

// Loads a tab-separated manifest. The header line is either
// `path<TAB>artist<TAB>period<TAB>genre` (style) or `path` (content); field
// names are fixed. Malformed lines are reported with their line number and
// every referenced image file must exist next to the manifest.
LoadedManifest load_manifest(const std::string& path);

/// Deterministic holdout: keeps the first ceil((1-fraction)*n) entries for
/// training and returns the tail. Entry order is the manifest order.
std::pair<std::vector<ManifestEntry>, std::vector<ManifestEntry>> split_holdout(
    const std::vector<ManifestEntry>& entries, double fraction);

}  // namespace attribpaint::data
