#include "attribpaint/training/checkpoint.hpp"

#include <zlib.h>

#include <fstream>
#include <sstream>
#include <vector>

#include "attribpaint/core/errors.hpp"
#include "attribpaint/io/container.hpp"
#include "attribpaint/networks/init.hpp"

namespace attribpaint::train {

namespace {

constexpr const char* kModelKind = "model";
constexpr const char* kSnapshotKind = "train_state";

void add_module_tensors(io::Archive& archive, const std::string& prefix,
                        const torch::nn::Module& module) {
  for (const auto& named : module.named_parameters()) {
    archive.add(prefix + "." + named.key(), named.value());
  }
}

void load_module_tensors(const io::Archive& archive, const std::string& prefix,
                         torch::nn::Module& module) {
  torch::NoGradGuard no_grad;
  for (auto& named : module.named_parameters()) {
    const auto name = prefix + "." + named.key();
    const auto& stored = archive.tensor(name);
    if (!stored.sizes().equals(named.value().sizes())) {
      throw DataError("checkpoint: tensor '" + name + "' has shape " +
                      c10::str(stored.sizes()) + ", expected " +
                      c10::str(named.value().sizes()));
    }
    named.value().copy_(stored);
  }
}

std::uint32_t params_crc32(const torch::nn::Module& module) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  for (const auto& p : module.parameters()) {
    const auto t = p.detach().contiguous();
    crc = ::crc32(crc, static_cast<const Bytef*>(t.const_data_ptr()),
                  static_cast<uInt>(t.numel() * t.element_size()));
  }
  return static_cast<std::uint32_t>(crc);
}

void add_model(io::Archive& archive, const TrainState& state) {
  archive.meta["config"] = serialize_config(state.config);
  archive.meta["schema"] = state.schema.to_json();
  add_module_tensors(archive, "model.g", *state.g);
  add_module_tensors(archive, "model.f", *state.f);
  add_module_tensors(archive, "model.dy", *state.dy);
  add_module_tensors(archive, "model.dx", *state.dx);
  add_module_tensors(archive, "model.mlp", *state.parser);
}

LoadedModel model_from_archive(const io::Archive& archive, const std::string& path) {
  LoadedModel model;
  std::istringstream config_in(archive.meta.at("config").get<std::string>());
  model.config = parse_config(config_in, path + ":config");
  model.schema = AttributeSchema::from_json(archive.meta.at("schema"));

  model.g = nets::make_forward_generator(model.config);
  model.f = nets::make_backward_generator(model.config);
  model.dy = nets::make_style_discriminator(model.config, model.schema);
  model.dx = nets::make_content_discriminator(model.config);
  model.parser = nets::make_condition_parser(model.config, model.schema.condition_dim(),
                                             model.g);
  load_module_tensors(archive, "model.g", *model.g);
  load_module_tensors(archive, "model.f", *model.f);
  load_module_tensors(archive, "model.dy", *model.dy);
  load_module_tensors(archive, "model.dx", *model.dx);
  load_module_tensors(archive, "model.mlp", *model.parser);
  return model;
}

void add_moments(io::Archive& archive, const std::string& prefix, const AdamUpdater& opt) {
  for (std::size_t i = 0; i < opt.first_moments().size(); ++i) {
    archive.add(prefix + ".m." + std::to_string(i), opt.first_moments()[i]);
    archive.add(prefix + ".v." + std::to_string(i), opt.second_moments()[i]);
  }
}

void restore_moments(const io::Archive& archive, const std::string& prefix,
                     std::int64_t step_count, AdamUpdater& opt) {
  std::vector<torch::Tensor> m, v;
  for (std::size_t i = 0; i < opt.params().size(); ++i) {
    m.push_back(archive.tensor(prefix + ".m." + std::to_string(i)));
    v.push_back(archive.tensor(prefix + ".v." + std::to_string(i)));
  }
  opt.restore(step_count, m, v);
}

}  // namespace

void save_model_checkpoint(const TrainState& state, const std::string& path) {
  io::Archive archive;
  archive.meta["kind"] = kModelKind;
  archive.meta["step"] = state.step;
  add_model(archive, state);
  archive.save(path);
}

LoadedModel load_model_checkpoint(const std::string& path) {
  const auto archive = io::Archive::load(path);
  const auto kind = archive.meta.value("kind", "");
  if (kind != kModelKind && kind != kSnapshotKind) {
    throw DataError("checkpoint: '" + path + "' has kind '" + kind + "'");
  }
  return model_from_archive(archive, path);
}

void save_snapshot(const TrainState& state, const std::string& path) {
  io::Archive archive;
  archive.meta["kind"] = kSnapshotKind;
  archive.meta["step"] = state.step;
  archive.meta["rng"] = state.rng.serialize();
  archive.meta["opt_g_steps"] = state.opt_g->step_count();
  archive.meta["opt_d_steps"] = state.opt_d->step_count();
  archive.meta["backbone_crc32"] = params_crc32(*state.backbone);
  add_model(archive, state);
  add_moments(archive, "opt_g", *state.opt_g);
  add_moments(archive, "opt_d", *state.opt_d);
  archive.save(path);
}

TrainState load_snapshot(const std::string& path) {
  const auto archive = io::Archive::load(path);
  if (archive.meta.value("kind", "") != kSnapshotKind) {
    throw DataError("checkpoint: '" + path + "' is not a train_state snapshot");
  }
  auto model = model_from_archive(archive, path);

  TrainState state;
  state.config = model.config;
  state.schema = model.schema;
  state.g = model.g;
  state.f = model.f;
  state.dy = model.dy;
  state.dx = model.dx;
  state.parser = model.parser;

  state.backbone = perceptual::make_backbone(state.config.perceptual_weights,
                                             state.config.seed);
  const auto expected_crc = archive.meta.at("backbone_crc32").get<std::uint32_t>();
  if (params_crc32(*state.backbone) != expected_crc) {
    throw DataError("checkpoint: perceptual backbone derived from the config does not match "
                    "the snapshot's backbone checksum");
  }

  state.opt_g = std::make_unique<AdamUpdater>(state.generator_params(), state.config.optimizer);
  state.opt_d = std::make_unique<AdamUpdater>(state.discriminator_params(),
                                              state.config.optimizer);
  restore_moments(archive, "opt_g", archive.meta.at("opt_g_steps").get<std::int64_t>(),
                  *state.opt_g);
  restore_moments(archive, "opt_d", archive.meta.at("opt_d_steps").get<std::int64_t>(),
                  *state.opt_d);
  state.rng = RngSource::deserialize(archive.meta.at("rng").get<std::string>());
  state.step = archive.meta.at("step").get<std::int64_t>();
  return state;
}

std::uint32_t file_crc32(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("file_crc32: cannot open '" + path + "'");
  uLong crc = ::crc32(0L, Z_NULL, 0);
  std::vector<char> buffer(1 << 16);
  while (in) {
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    crc = ::crc32(crc, reinterpret_cast<const Bytef*>(buffer.data()),
                  static_cast<uInt>(in.gcount()));
  }
  return static_cast<std::uint32_t>(crc);
}

}  // namespace attribpaint::train
