#include "attribpaint/training/optim.hpp"

#include <cmath>
#include <stdexcept>

namespace attribpaint::train {

namespace {
constexpr double kEpsilon = 1e-8;
}

AdamUpdater::AdamUpdater(std::vector<torch::Tensor> params, OptimizerParams hp)
    : params_(std::move(params)), hp_(hp) {
  for (const auto& p : params_) {
    m_.push_back(torch::zeros_like(p));
    v_.push_back(torch::zeros_like(p));
  }
}

void AdamUpdater::zero_grad() {
  for (auto& p : params_) {
    if (p.grad().defined()) p.mutable_grad().zero_();
  }
}

void AdamUpdater::step() {
  torch::NoGradGuard no_grad;
  ++step_count_;
  const double bias1 = 1.0 - std::pow(hp_.beta1, static_cast<double>(step_count_));
  const double bias2 = 1.0 - std::pow(hp_.beta2, static_cast<double>(step_count_));
  for (std::size_t i = 0; i < params_.size(); ++i) {
    const auto& grad = params_[i].grad();
    if (!grad.defined()) continue;
    m_[i].mul_(hp_.beta1).add_(grad, 1.0 - hp_.beta1);
    v_[i].mul_(hp_.beta2).addcmul_(grad, grad, 1.0 - hp_.beta2);
    const auto m_hat = m_[i] / bias1;
    const auto v_hat = v_[i] / bias2;
    params_[i].add_(-hp_.lr * m_hat / (v_hat.sqrt() + kEpsilon));
  }
}

void AdamUpdater::restore(std::int64_t step_count, const std::vector<torch::Tensor>& m,
                          const std::vector<torch::Tensor>& v) {
  if (m.size() != params_.size() || v.size() != params_.size()) {
    throw std::invalid_argument("AdamUpdater::restore: moment count mismatch");
  }
  torch::NoGradGuard no_grad;
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (!m[i].sizes().equals(params_[i].sizes()) || !v[i].sizes().equals(params_[i].sizes())) {
      throw std::invalid_argument("AdamUpdater::restore: moment shape mismatch at index " +
                                  std::to_string(i));
    }
    m_[i].copy_(m[i]);
    v_[i].copy_(v[i]);
  }
  step_count_ = step_count;
}

}  // namespace attribpaint::train
