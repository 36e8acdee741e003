#pragma once

#include <string>
#include <vector>

#include <torch/torch.h>

#include "attribpaint/conditioning/perturbation.hpp"
#include "attribpaint/core/rng.hpp"
#include "attribpaint/core/schema.hpp"

namespace attribpaint::cond {

/// Train mode perturbs the genre one-hot; test mode is the fixed one-hot.
enum class Mode { kTrain, kTest };

// The attribute triple c = (a, p, g). artist and period stay exact one-hots;
// genre carries 1 + delta at its hot index during training. `concatenated`
// is always the in-order concatenation [artist || period || genre].
struct AttributeSet {
  torch::Tensor artist;
  torch::Tensor period;
  torch::Tensor genre;
  torch::Tensor concatenated;
};

/// One-hot vector for `label` on `axis`; unknown labels throw UsageError
/// naming both the label and the axis.
torch::Tensor encode_attribute(const std::string& label,
                               const std::vector<std::string>& axis,
                               const std::string& axis_name);

/// Adds a N(mu, sigma^2) draw to the single hot entry (value clamped to
/// [0.5, 1.5]); zero entries pass through untouched. Disabled params return
/// the input unchanged. Requires exactly one non-zero entry equal to 1.
torch::Tensor perturb_genre(const torch::Tensor& onehot,
                            const GenrePerturbationParams& params, RngSource& rng);

/// Builds the full condition for one (artist, period, genre) label triple.
/// The genre is perturbed iff mode is kTrain and params.enabled.
AttributeSet build_condition(const std::string& artist, const std::string& period,
                             const std::string& genre, Mode mode,
                             const AttributeSchema& schema,
                             const GenrePerturbationParams& params, RngSource& rng);

/// Batch variant: one row per (artist_idx, period_idx, genre_idx) triple in
/// `labels` (B, 3); returns the stacked concatenated conditions (B, dim).
torch::Tensor build_condition_batch(const torch::Tensor& labels, Mode mode,
                                    const AttributeSchema& schema,
                                    const GenrePerturbationParams& params,
                                    RngSource& rng);

}  // namespace attribpaint::cond
