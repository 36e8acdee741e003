#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace attribpaint {

/// Ordered label lists for the three painting attributes. List lengths fix
/// the one-hot dimensions; every label lookup in the repo resolves here.
struct AttributeSchema {
  std::vector<std::string> artists;
  std::vector<std::string> periods;
  std::vector<std::string> genres;

  /// Throws UsageError unless labels are unique, non-empty, and every axis
  /// has at least two of them.
  void validate() const;

  std::int64_t n_artists() const { return static_cast<std::int64_t>(artists.size()); }
  std::int64_t n_periods() const { return static_cast<std::int64_t>(periods.size()); }
  std::int64_t n_genres() const { return static_cast<std::int64_t>(genres.size()); }
  std::int64_t condition_dim() const { return n_artists() + n_periods() + n_genres(); }

  std::int64_t artist_index(const std::string& label) const;
  std::int64_t period_index(const std::string& label) const;
  std::int64_t genre_index(const std::string& label) const;

  bool operator==(const AttributeSchema&) const = default;

  nlohmann::json to_json() const;
  static AttributeSchema from_json(const nlohmann::json& j);
};

/// Index of `label` in `axis`; throws UsageError naming the label and axis.
std::int64_t axis_index(const std::vector<std::string>& axis,
                        const std::string& axis_name, const std::string& label);

}  // namespace attribpaint
