#pragma once

#include <torch/torch.h>

#include "attribpaint/core/rng.hpp"

namespace attribpaint::nets {

/// Deterministic weight init from a seeded source: conv/linear weights are
/// N(0, 0.02), biases and norm shifts zero, norm scales one. Parameters are
/// visited in registration order, so the draw sequence is reproducible.
void init_weights(torch::nn::Module& module, RngSource& rng);

}  // namespace attribpaint::nets
