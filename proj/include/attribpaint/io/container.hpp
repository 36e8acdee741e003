#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>
#include <torch/torch.h>

namespace attribpaint::io {

// On-disk container for every weight artifact in the repo (model
// checkpoints, training snapshots, perceptual backbone files).
//
// Layout, little-endian:
//   "APCK" | u32 format version | u64 json length | metadata JSON
//   per tensor: raw buffer in the order listed by meta["tensors"]
//   u32 crc32 over everything above
//
// meta["tensors"] is an array of {name, dtype, shape} records, so loading
// verifies names, dtypes and shapes before touching tensor bytes, and the
// trailing checksum catches any tampered byte.
inline constexpr std::uint32_t kFormatVersion = 1;

struct Archive {
  nlohmann::json meta;  // free-form; "tensors" is reserved for the index
  std::vector<std::pair<std::string, torch::Tensor>> tensors;

  void add(const std::string& name, const torch::Tensor& tensor);

  /// Tensor by name; throws DataError if absent.
  const torch::Tensor& tensor(const std::string& name) const;
  bool has_tensor(const std::string& name) const;

  void save(const std::string& path) const;

  /// Verifies magic, version and checksum; throws DataError on any mismatch.
  static Archive load(const std::string& path);
};

/// crc32 (zlib polynomial) of a tensor's raw contiguous bytes; used for
/// content fingerprints such as judge/checkpoint ids.
std::uint32_t tensor_crc32(const torch::Tensor& tensor);

}  // namespace attribpaint::io
