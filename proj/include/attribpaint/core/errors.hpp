#pragma once

#include <stdexcept>
#include <string>

namespace attribpaint {

/// Bad flags, bad config documents, unknown keys/labels.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Missing or malformed manifests, images, checkpoints.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite losses, failed checksums on numeric state, dimension clashes.
struct NumericsError : std::runtime_error {
  explicit NumericsError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace attribpaint
