#include "attribpaint/io/container.hpp"

#include <zlib.h>

#include <bit>
#include <cstring>
#include <fstream>

#include "attribpaint/core/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "container format assumes a little-endian host");

namespace attribpaint::io {

namespace {

constexpr char kMagic[4] = {'A', 'P', 'C', 'K'};

torch::Dtype dtype_from_tag(const std::string& tag) {
  if (tag == "f32") return torch::kFloat32;
  if (tag == "f64") return torch::kFloat64;
  if (tag == "i64") return torch::kInt64;
  throw DataError("container: unsupported dtype tag '" + tag + "'");
}

std::string dtype_tag(torch::Dtype dtype) {
  switch (dtype) {
    case torch::kFloat32: return "f32";
    case torch::kFloat64: return "f64";
    case torch::kInt64: return "i64";
    default: throw DataError("container: unsupported tensor dtype");
  }
}

class CrcWriter {
 public:
  explicit CrcWriter(std::ostream& out) : out_(out) {}
  void write(const void* data, std::size_t size) {
    out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    crc_ = ::crc32(crc_, static_cast<const Bytef*>(data), static_cast<uInt>(size));
  }
  std::uint32_t crc() const { return static_cast<std::uint32_t>(crc_); }

 private:
  std::ostream& out_;
  uLong crc_ = ::crc32(0L, Z_NULL, 0);
};

class CrcReader {
 public:
  explicit CrcReader(std::istream& in, const std::string& path) : in_(in), path_(path) {}
  void read(void* data, std::size_t size) {
    in_.read(static_cast<char*>(data), static_cast<std::streamsize>(size));
    if (in_.gcount() != static_cast<std::streamsize>(size)) {
      throw DataError("container: truncated file '" + path_ + "'");
    }
    crc_ = ::crc32(crc_, static_cast<const Bytef*>(data), static_cast<uInt>(size));
  }
  std::uint32_t crc() const { return static_cast<std::uint32_t>(crc_); }

 private:
  std::istream& in_;
  std::string path_;
  uLong crc_ = ::crc32(0L, Z_NULL, 0);
};

}  // namespace

void Archive::add(const std::string& name, const torch::Tensor& tensor) {
  tensors.emplace_back(name, tensor.detach().cpu().contiguous());
}

bool Archive::has_tensor(const std::string& name) const {
  for (const auto& [n, t] : tensors) {
    if (n == name) return true;
  }
  return false;
}

const torch::Tensor& Archive::tensor(const std::string& name) const {
  for (const auto& [n, t] : tensors) {
    if (n == name) return t;
  }
  throw DataError("container: missing tensor '" + name + "'");
}

void Archive::save(const std::string& path) const {
  nlohmann::json meta_out = meta;
  auto& index = meta_out["tensors"] = nlohmann::json::array();
  for (const auto& [name, tensor] : tensors) {
    index.push_back({{"name", name},
                     {"dtype", dtype_tag(tensor.scalar_type())},
                     {"shape", tensor.sizes().vec()}});
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("container: cannot write '" + path + "'");
  CrcWriter writer(out);

  writer.write(kMagic, sizeof(kMagic));
  const std::uint32_t version = kFormatVersion;
  writer.write(&version, sizeof(version));

  const std::string meta_text = meta_out.dump();
  const std::uint64_t meta_len = meta_text.size();
  writer.write(&meta_len, sizeof(meta_len));
  writer.write(meta_text.data(), meta_text.size());

  for (const auto& [name, tensor] : tensors) {
    const auto contiguous = tensor.contiguous();
    writer.write(contiguous.const_data_ptr(),
                 static_cast<std::size_t>(contiguous.numel() * contiguous.element_size()));
  }

  const std::uint32_t crc = writer.crc();
  out.write(reinterpret_cast<const char*>(&crc), sizeof(crc));
  if (!out) throw DataError("container: write failure on '" + path + "'");
}

Archive Archive::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("container: cannot open '" + path + "'");
  CrcReader reader(in, path);

  char magic[4];
  reader.read(magic, sizeof(magic));
  if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw DataError("container: '" + path + "' is not an attribpaint archive");
  }
  std::uint32_t version = 0;
  reader.read(&version, sizeof(version));
  if (version != kFormatVersion) {
    throw DataError("container: '" + path + "' has format version " +
                    std::to_string(version) + ", expected " + std::to_string(kFormatVersion));
  }

  std::uint64_t meta_len = 0;
  reader.read(&meta_len, sizeof(meta_len));
  if (meta_len > (1ULL << 30)) throw DataError("container: metadata block too large");
  std::string meta_text(meta_len, '\0');
  reader.read(meta_text.data(), meta_len);

  Archive archive;
  try {
    archive.meta = nlohmann::json::parse(meta_text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError("container: corrupt metadata in '" + path + "': " + e.what());
  }

  for (const auto& entry : archive.meta.at("tensors")) {
    const std::string name = entry.at("name").get<std::string>();
    const auto dtype = dtype_from_tag(entry.at("dtype").get<std::string>());
    const auto shape = entry.at("shape").get<std::vector<std::int64_t>>();
    auto tensor = torch::empty(shape, torch::TensorOptions().dtype(dtype));
    reader.read(tensor.data_ptr(),
                static_cast<std::size_t>(tensor.numel() * tensor.element_size()));
    archive.tensors.emplace_back(name, std::move(tensor));
  }
  archive.meta.erase("tensors");

  std::uint32_t stored_crc = 0;
  in.read(reinterpret_cast<char*>(&stored_crc), sizeof(stored_crc));
  if (in.gcount() != sizeof(stored_crc)) {
    throw DataError("container: truncated checksum in '" + path + "'");
  }
  if (stored_crc != reader.crc()) {
    throw DataError("container: checksum mismatch in '" + path +
                    "' (file corrupt or tampered)");
  }
  return archive;
}

std::uint32_t tensor_crc32(const torch::Tensor& tensor) {
  const auto t = tensor.detach().cpu().contiguous();
  uLong crc = ::crc32(0L, Z_NULL, 0);
  crc = ::crc32(crc, static_cast<const Bytef*>(t.const_data_ptr()),
                static_cast<uInt>(t.numel() * t.element_size()));
  return static_cast<std::uint32_t>(crc);
}

}  // namespace attribpaint::io
