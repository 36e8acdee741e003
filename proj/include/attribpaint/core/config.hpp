#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "attribpaint/conditioning/perturbation.hpp"

namespace attribpaint {

/// Objective weights of the full loss. Defaults are the training values
/// lambda_rec=10, lambda_reg=1, lambda_s=1e-4; the two adversarial terms
/// always carry unit weight.
struct LossWeights {
  double lambda_rec = 10.0;
  double lambda_reg = 1.0;
  double lambda_s = 1e-4;

  bool operator==(const LossWeights&) const = default;
};

struct OptimizerParams {
  double lr = 2e-4;
  double beta1 = 0.5;
  double beta2 = 0.999;

  bool operator==(const OptimizerParams&) const = default;
};

// Full run configuration. A config file is a flat `key = value` document
// ('#' starts a comment); omitted keys keep the defaults below and unknown
// keys are hard errors. The documented key set is kConfigKeys in config.cpp
// and the README table.
struct RunConfig {
  std::int64_t image_size = 64;
  std::int64_t channel_base = 32;
  std::int64_t n_downsample = 2;
  std::int64_t n_res_blocks = 2;
  std::int64_t n_adain_blocks = 2;
  std::int64_t mlp_hidden = 256;
  std::int64_t mlp_layers = 3;
  LossWeights loss_weights;
  GenrePerturbationParams perturbation;
  OptimizerParams optimizer;
  std::int64_t batch_size = 2;
  std::int64_t total_steps = 500;
  std::uint64_t seed = 0;
  std::int64_t checkpoint_interval = 100;
  double holdout_fraction = 0.0;
  std::string perceptual_weights;  // empty -> seeded random test backbone

  bool operator==(const RunConfig&) const = default;
};

/// Throws UsageError naming the offending key on any invariant violation.
void validate_config(const RunConfig& config);

/// Loads and validates a config document. Missing file, malformed lines,
/// unknown keys and invariant violations all throw UsageError.
RunConfig load_config(const std::string& path);

/// Parses a config document from a stream; `origin` tags error messages.
RunConfig parse_config(std::istream& in, const std::string& origin);

/// Canonical document listing every key; parse_config round-trips it.
std::string serialize_config(const RunConfig& config);

}  // namespace attribpaint
