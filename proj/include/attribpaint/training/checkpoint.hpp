#pragma once

#include <string>

#include "attribpaint/training/trainer.hpp"

namespace attribpaint::train {

// Checkpoint archives come in two kinds, both carried by the checksummed
// container format: "model" holds the config echo, attribute schema and the
// named weight arrays of G, F, D_y, D_x and the condition parser; a
// "train_state" snapshot additionally holds optimizer moments, the rng
// state and the step counter. Loading verifies schema and shape agreement.

void save_model_checkpoint(const TrainState& state, const std::string& path);

/// Networks reconstructed from the stored config echo + schema. Accepts
/// either kind (a snapshot's model part loads the same way).
struct LoadedModel {
  RunConfig config;
  AttributeSchema schema;
  nets::ForwardGenerator g{nullptr};
  nets::BackwardGenerator f{nullptr};
  nets::StyleDiscriminator dy{nullptr};
  nets::ContentDiscriminator dx{nullptr};
  cond::ConditionParser parser{nullptr};
};

LoadedModel load_model_checkpoint(const std::string& path);

void save_snapshot(const TrainState& state, const std::string& path);

TrainState load_snapshot(const std::string& path);

/// crc32 of a whole file, used for checkpoint ids in reports.
std::uint32_t file_crc32(const std::string& path);

}  // namespace attribpaint::train
