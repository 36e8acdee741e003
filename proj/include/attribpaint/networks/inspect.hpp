#pragma once

#include "attribpaint/networks/generators.hpp"

namespace attribpaint::nets {

/// Structural facts asserted by tests: the cycle is asymmetric (F carries no
/// conditioning machinery) and neither generator uses transposed convolutions.
struct StructureReport {
  std::int64_t transposed_convs_in_forward = 0;
  std::int64_t transposed_convs_in_backward = 0;
  std::int64_t adain_blocks_in_forward = 0;
  std::int64_t adain_blocks_in_backward = 0;

  bool backward_is_unconditional() const { return adain_blocks_in_backward == 0; }
};

StructureReport inspect_structure(const ForwardGenerator& g, const BackwardGenerator& f);

/// Counts instances of a layer kind in a module tree.
std::int64_t count_transposed_convs(const torch::nn::Module& module);
std::int64_t count_adain_blocks(const torch::nn::Module& module);

}  // namespace attribpaint::nets
