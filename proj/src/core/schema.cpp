#include "attribpaint/core/schema.hpp"

#include <algorithm>
#include <unordered_set>

#include "attribpaint/core/errors.hpp"

namespace attribpaint {

namespace {

void validate_axis(const std::vector<std::string>& axis, const char* name) {
  if (axis.size() < 2) {
    throw UsageError(std::string(name) + " axis needs at least 2 labels, got " +
                     std::to_string(axis.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : axis) {
    if (label.empty()) throw UsageError(std::string(name) + " axis contains an empty label");
    if (!seen.insert(label).second) {
      throw UsageError(std::string(name) + " axis contains duplicate label '" + label + "'");
    }
  }
}

}  // namespace

void AttributeSchema::validate() const {
  validate_axis(artists, "artist");
  validate_axis(periods, "period");
  validate_axis(genres, "genre");
}

std::int64_t axis_index(const std::vector<std::string>& axis,
                        const std::string& axis_name, const std::string& label) {
  const auto it = std::find(axis.begin(), axis.end(), label);
  if (it == axis.end()) {
    std::string known;
    for (const auto& l : axis) known += (known.empty() ? "" : ", ") + l;
    throw UsageError("unknown " + axis_name + " label '" + label + "' (known: " + known + ")");
  }
  return static_cast<std::int64_t>(it - axis.begin());
}

std::int64_t AttributeSchema::artist_index(const std::string& label) const {
  return axis_index(artists, "artist", label);
}
std::int64_t AttributeSchema::period_index(const std::string& label) const {
  return axis_index(periods, "period", label);
}
std::int64_t AttributeSchema::genre_index(const std::string& label) const {
  return axis_index(genres, "genre", label);
}

nlohmann::json AttributeSchema::to_json() const {
  return nlohmann::json{{"artists", artists}, {"periods", periods}, {"genres", genres}};
}

AttributeSchema AttributeSchema::from_json(const nlohmann::json& j) {
  AttributeSchema schema;
  schema.artists = j.at("artists").get<std::vector<std::string>>();
  schema.periods = j.at("periods").get<std::vector<std::string>>();
  schema.genres = j.at("genres").get<std::vector<std::string>>();
  schema.validate();
  return schema;
}

}  // namespace attribpaint
