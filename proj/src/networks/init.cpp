#include "attribpaint/networks/init.hpp"

namespace attribpaint::nets {

void init_weights(torch::nn::Module& module, RngSource& rng) {
  torch::NoGradGuard no_grad;
  for (auto& named : module.named_parameters()) {
    auto& param = named.value();
    const auto& name = named.key();
    const bool is_bias = name.ends_with("bias");
    if (is_bias) {
      param.zero_();
    } else if (param.dim() == 1) {
      // rank-1 weights are norm scales
      param.fill_(1.0);
    } else {
      auto flat = param.reshape({-1});
      auto acc = flat.accessor<float, 1>();
      for (std::int64_t i = 0; i < flat.size(0); ++i) {
        acc[i] = static_cast<float>(rng.normal(0.0, 0.02));
      }
    }
  }
}

}  // namespace attribpaint::nets
