#pragma once

#include <vector>

#include <torch/torch.h>

#include "attribpaint/core/config.hpp"

namespace attribpaint::train {

// Adam with bias correction (eps 1e-8, no weight decay). Kept in-repo so the
// moment tensors serialize bit-exactly into the snapshot container. The
// parameter list order is fixed at construction and is part of the snapshot
// format.
class AdamUpdater {
 public:
  AdamUpdater(std::vector<torch::Tensor> params, OptimizerParams hp);

  void zero_grad();

  /// Applies one update from the current .grad() values (missing grads are
  /// treated as zero, leaving the parameter untouched).
  void step();

  std::int64_t step_count() const { return step_count_; }
  const std::vector<torch::Tensor>& params() const { return params_; }
  const std::vector<torch::Tensor>& first_moments() const { return m_; }
  const std::vector<torch::Tensor>& second_moments() const { return v_; }

  /// Snapshot restore; moment shapes must match the parameter list.
  void restore(std::int64_t step_count, const std::vector<torch::Tensor>& m,
               const std::vector<torch::Tensor>& v);

 private:
  std::vector<torch::Tensor> params_;
  std::vector<torch::Tensor> m_, v_;
  OptimizerParams hp_;
  std::int64_t step_count_ = 0;
};

}  // namespace attribpaint::train
