#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "attribpaint/conditioning/parser.hpp"
#include "attribpaint/core/config.hpp"
#include "attribpaint/core/rng.hpp"
#include "attribpaint/core/schema.hpp"
#include "attribpaint/data/dataset.hpp"
#include "attribpaint/losses/losses.hpp"
#include "attribpaint/networks/discriminators.hpp"
#include "attribpaint/networks/generators.hpp"
#include "attribpaint/perceptual/vgg.hpp"
#include "attribpaint/training/optim.hpp"

namespace attribpaint::train {

// Everything one training run owns: the four networks, the condition
// parser, the frozen perceptual backbone, both optimizers, the step counter
// and the run's single randomness stream. Snapshots round-trip all of it
// except the backbone, which is re-derived from the config (and verified by
// checksum on restore).
struct TrainState {
  RunConfig config;
  AttributeSchema schema;
  nets::ForwardGenerator g{nullptr};
  nets::BackwardGenerator f{nullptr};
  nets::StyleDiscriminator dy{nullptr};
  nets::ContentDiscriminator dx{nullptr};
  cond::ConditionParser parser{nullptr};
  perceptual::Vgg16Backbone backbone{nullptr};
  std::unique_ptr<AdamUpdater> opt_g;  // G + F + parser parameters
  std::unique_ptr<AdamUpdater> opt_d;  // D_y + D_x parameters
  RngSource rng{0};
  std::int64_t step = 0;

  /// Generator-side / discriminator-side parameter lists, in the fixed
  /// order the optimizers and snapshots use.
  std::vector<torch::Tensor> generator_params() const;
  std::vector<torch::Tensor> discriminator_params() const;
};

/// Fresh state with seeded deterministic initialization of all weights.
TrainState init_train_state(const RunConfig& config, const AttributeSchema& schema);

/// One alternating optimization step: a discriminator update (minimize
/// full_d over D_y, D_x) followed by a generator update (minimize full_g
/// over G, F, parser), with train-mode genre perturbation. Throws
/// NumericsError naming the first non-finite loss component.
losses::LossReport train_step(TrainState& state, const data::Batch& batch);

struct FitOptions {
  std::string out_dir;
  std::optional<std::string> resume;  // snapshot path
};

struct FitResult {
  std::vector<losses::LossReport> reports;  // steps executed by this call
  std::string model_checkpoint;             // final model-only checkpoint
  std::string final_snapshot;
  std::int64_t final_step = 0;
};

/// Runs config.total_steps steps over the given manifests, appending one
/// metrics line per step to <out_dir>/metrics.jsonl and writing snapshots
/// every config.checkpoint_interval steps plus a final model checkpoint.
FitResult fit(const RunConfig& config, const std::string& style_manifest,
              const std::string& content_manifest, const FitOptions& options);

}  // namespace attribpaint::train
