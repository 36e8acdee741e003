#pragma once

namespace attribpaint {

/// Gaussian perturbation applied to the hot entry of the genre one-hot
/// during training. The perturbed value is clamped to [0.5, 1.5] so the
/// attribute identity stays unambiguous; test mode never perturbs.
struct GenrePerturbationParams {
  double mu = 0.0;
  double sigma = 0.2;
  bool enabled = true;

  bool operator==(const GenrePerturbationParams&) const = default;
};

}  // namespace attribpaint
