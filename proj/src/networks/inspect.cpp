#include "attribpaint/networks/inspect.hpp"

#include "attribpaint/networks/blocks.hpp"

namespace attribpaint::nets {

std::int64_t count_transposed_convs(const torch::nn::Module& module) {
  std::int64_t count = 0;
  for (const auto& sub : module.modules(/*include_self=*/true)) {
    if (dynamic_cast<const torch::nn::ConvTranspose2dImpl*>(sub.get()) ||
        dynamic_cast<const torch::nn::ConvTranspose1dImpl*>(sub.get()) ||
        dynamic_cast<const torch::nn::ConvTranspose3dImpl*>(sub.get())) {
      ++count;
    }
  }
  return count;
}

std::int64_t count_adain_blocks(const torch::nn::Module& module) {
  std::int64_t count = 0;
  for (const auto& sub : module.modules(/*include_self=*/true)) {
    if (dynamic_cast<const AdainResBlockImpl*>(sub.get())) ++count;
  }
  return count;
}

StructureReport inspect_structure(const ForwardGenerator& g, const BackwardGenerator& f) {
  StructureReport report;
  report.transposed_convs_in_forward = count_transposed_convs(*g);
  report.transposed_convs_in_backward = count_transposed_convs(*f);
  report.adain_blocks_in_forward = count_adain_blocks(*g);
  report.adain_blocks_in_backward = count_adain_blocks(*f);
  return report;
}

}  // namespace attribpaint::nets
