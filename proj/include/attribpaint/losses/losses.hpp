#pragma once

#include <torch/torch.h>

#include <json.hpp>

#include "attribpaint/core/config.hpp"
#include "attribpaint/networks/discriminators.hpp"

namespace attribpaint::losses {

/// Which side of the min-max game a term is evaluated for.
enum class Side { kGenerator, kDiscriminator };

/// Patch logit map -> per-sample realness probability in (0, 1): sigmoid of
/// logits clamped to +/-30, averaged over patch positions.
torch::Tensor realness_probability(const torch::Tensor& patch_logits);

// Adversarial losses over post-sigmoid scores. The discriminator side is
// -[mean log d_real + mean log(1 - d_fake)] (minimizing it maximizes the
// payoff); the generator side is the non-saturating -mean log d_fake, which
// shares the fixed points of the minimax form without its stalled gradient.
torch::Tensor adversarial_forward(const torch::Tensor& d_real, const torch::Tensor& d_fake,
                                  Side side);

/// Same functional form with the content discriminator's scores on x (real)
/// and F(y) (fake).
torch::Tensor adversarial_backward(const torch::Tensor& d_real, const torch::Tensor& d_fake,
                                   Side side);

/// Attribute regression: sum over the three axes of mean softmax
/// cross-entropy. The real term scores real images against their true
/// labels (trains D_y); the fake term scores generated images against the
/// conditioning labels (trains G). labels are (B, 3) index triples.
std::pair<torch::Tensor, torch::Tensor> attribute_regression(
    const nets::StyleScores& real, const torch::Tensor& real_labels,
    const nets::StyleScores& fake, const torch::Tensor& cond_labels);

/// Per-axis helper: mean cross-entropy of logits (B, N) against indices (B).
torch::Tensor cross_entropy(const torch::Tensor& logits, const torch::Tensor& labels);

/// Sum of the three per-axis cross-entropies for one side of Eq. 2.
torch::Tensor attribute_class_loss(const nets::StyleScores& scores,
                                   const torch::Tensor& labels);

/// The four pixel-space L1 terms of the reconstruction objective; each is a
/// mean over elements so lambda_rec transfers across resolutions.
struct ReconstructionTerms {
  torch::Tensor cycle_x;  // || F(G(x,c)) - x ||
  torch::Tensor cycle_y;  // || G(F(y),c) - y ||
  torch::Tensor idt_y;    // || G(y,c) - y ||
  torch::Tensor idt_x;    // || F(x) - x ||
  torch::Tensor total;
};

ReconstructionTerms reconstruction(const torch::Tensor& x, const torch::Tensor& x_cycle,
                                   const torch::Tensor& y, const torch::Tensor& y_cycle,
                                   const torch::Tensor& y_idt, const torch::Tensor& x_idt);

/// Scalar inputs to the full objective (any may carry autograd history).
struct LossParts {
  torch::Tensor adv_f_gen, adv_f_disc;
  torch::Tensor adv_b_gen, adv_b_disc;
  torch::Tensor rec;
  torch::Tensor reg_real, reg_fake;
  torch::Tensor sp;
};

/// full_g = adv_f(gen) + adv_b(gen) + lambda_rec*rec + lambda_reg*reg_fake
///          + lambda_s*sp
/// full_d = adv_f(disc) + adv_b(disc) + lambda_reg*reg_real
std::pair<torch::Tensor, torch::Tensor> full_objective(const LossParts& parts,
                                                       const LossWeights& weights);

// Per-step scalar record; serializes to one flat metrics-log line. adv_f
// and adv_b hold the discriminator-side values (the objective's two
// adversarial terms); the generator-side values enter full_g.
struct LossReport {
  std::int64_t step = 0;
  double adv_f = 0, adv_b = 0;
  double reg_real = 0, reg_fake = 0;
  double sp = 0;
  double rec = 0, rec_cycle_x = 0, rec_cycle_y = 0, rec_idt_y = 0, rec_idt_x = 0;
  double full_g = 0, full_d = 0;

  nlohmann::json to_json() const;
  static LossReport from_json(const nlohmann::json& j);
  bool operator==(const LossReport&) const = default;
};

}  // namespace attribpaint::losses
