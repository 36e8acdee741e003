#include "attribpaint/losses/losses.hpp"

#include <stdexcept>

namespace attribpaint::losses {

namespace {

void check_scores(const torch::Tensor& scores, const char* name) {
  if (!scores.defined() || scores.numel() == 0) {
    throw std::invalid_argument(std::string("adversarial: empty score batch for ") + name);
  }
  const double lo = scores.min().item<double>();
  const double hi = scores.max().item<double>();
  if (!(lo > 0.0 && hi < 1.0)) {
    throw std::invalid_argument(std::string("adversarial: ") + name +
                                " scores must lie strictly in (0, 1), got range [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

torch::Tensor adversarial(const torch::Tensor& d_real, const torch::Tensor& d_fake,
                          Side side) {
  check_scores(d_fake, "fake");
  if (side == Side::kGenerator) {
    return -torch::log(d_fake).mean();
  }
  check_scores(d_real, "real");
  return -(torch::log(d_real).mean() + torch::log(1.0 - d_fake).mean());
}

}  // namespace

torch::Tensor realness_probability(const torch::Tensor& patch_logits) {
  if (patch_logits.dim() != 4 || patch_logits.size(1) != 1) {
    throw std::invalid_argument("realness_probability: expected (B, 1, h, w) patch logits");
  }
  // The outer clamp keeps the average strictly inside (0, 1) even at
  // float32, where sigmoid(30) already rounds to 1.
  return torch::sigmoid(patch_logits.clamp(-30.0, 30.0))
      .mean({1, 2, 3})
      .clamp(1e-7, 1.0 - 1e-7);
}

torch::Tensor adversarial_forward(const torch::Tensor& d_real, const torch::Tensor& d_fake,
                                  Side side) {
  return adversarial(d_real, d_fake, side);
}

torch::Tensor adversarial_backward(const torch::Tensor& d_real, const torch::Tensor& d_fake,
                                   Side side) {
  return adversarial(d_real, d_fake, side);
}

torch::Tensor cross_entropy(const torch::Tensor& logits, const torch::Tensor& labels) {
  if (logits.dim() != 2 || labels.dim() != 1 || logits.size(0) != labels.size(0)) {
    throw std::invalid_argument("cross_entropy: logits must be (B, N) with labels (B)");
  }
  const auto n_classes = logits.size(1);
  if ((labels < 0).any().item<bool>() || (labels >= n_classes).any().item<bool>()) {
    throw std::invalid_argument("cross_entropy: label index out of range for " +
                                std::to_string(n_classes) + " classes");
  }
  auto log_probs = torch::log_softmax(logits, 1);
  return -log_probs.gather(1, labels.unsqueeze(1)).mean();
}

std::pair<torch::Tensor, torch::Tensor> attribute_regression(
    const nets::StyleScores& real, const torch::Tensor& real_labels,
    const nets::StyleScores& fake, const torch::Tensor& cond_labels) {
  auto check_labels = [](const torch::Tensor& labels, const char* name) {
    if (labels.dim() != 2 || labels.size(1) != 3) {
      throw std::invalid_argument(std::string("attribute_regression: ") + name +
                                  " labels must be (B, 3)");
    }
  };
  check_labels(real_labels, "real");
  check_labels(cond_labels, "conditioning");
  return {attribute_class_loss(real, real_labels), attribute_class_loss(fake, cond_labels)};
}

torch::Tensor attribute_class_loss(const nets::StyleScores& scores,
                                   const torch::Tensor& labels) {
  return cross_entropy(scores.artist, labels.select(1, 0)) +
         cross_entropy(scores.period, labels.select(1, 1)) +
         cross_entropy(scores.genre, labels.select(1, 2));
}

ReconstructionTerms reconstruction(const torch::Tensor& x, const torch::Tensor& x_cycle,
                                   const torch::Tensor& y, const torch::Tensor& y_cycle,
                                   const torch::Tensor& y_idt, const torch::Tensor& x_idt) {
  auto term = [](const torch::Tensor& got, const torch::Tensor& want, const char* name) {
    if (!got.sizes().equals(want.sizes())) {
      throw std::invalid_argument(std::string("reconstruction: shape mismatch in ") + name);
    }
    return (got - want).abs().mean();
  };
  ReconstructionTerms terms;
  terms.cycle_x = term(x_cycle, x, "F(G(x,c)) vs x");
  terms.cycle_y = term(y_cycle, y, "G(F(y),c) vs y");
  terms.idt_y = term(y_idt, y, "G(y,c) vs y");
  terms.idt_x = term(x_idt, x, "F(x) vs x");
  terms.total = terms.cycle_x + terms.cycle_y + terms.idt_y + terms.idt_x;
  return terms;
}

std::pair<torch::Tensor, torch::Tensor> full_objective(const LossParts& parts,
                                                       const LossWeights& weights) {
  auto full_g = parts.adv_f_gen + parts.adv_b_gen + weights.lambda_rec * parts.rec +
                weights.lambda_reg * parts.reg_fake + weights.lambda_s * parts.sp;
  auto full_d = parts.adv_f_disc + parts.adv_b_disc + weights.lambda_reg * parts.reg_real;
  return {full_g, full_d};
}

nlohmann::json LossReport::to_json() const {
  return nlohmann::json{{"step", step},
                        {"adv_f", adv_f},
                        {"adv_b", adv_b},
                        {"reg_real", reg_real},
                        {"reg_fake", reg_fake},
                        {"sp", sp},
                        {"rec", rec},
                        {"rec_cycle_x", rec_cycle_x},
                        {"rec_cycle_y", rec_cycle_y},
                        {"rec_idt_y", rec_idt_y},
                        {"rec_idt_x", rec_idt_x},
                        {"full_g", full_g},
                        {"full_d", full_d}};
}

LossReport LossReport::from_json(const nlohmann::json& j) {
  LossReport r;
  r.step = j.at("step").get<std::int64_t>();
  r.adv_f = j.at("adv_f").get<double>();
  r.adv_b = j.at("adv_b").get<double>();
  r.reg_real = j.at("reg_real").get<double>();
  r.reg_fake = j.at("reg_fake").get<double>();
  r.sp = j.at("sp").get<double>();
  r.rec = j.at("rec").get<double>();
  r.rec_cycle_x = j.at("rec_cycle_x").get<double>();
  r.rec_cycle_y = j.at("rec_cycle_y").get<double>();
  r.rec_idt_y = j.at("rec_idt_y").get<double>();
  r.rec_idt_x = j.at("rec_idt_x").get<double>();
  r.full_g = j.at("full_g").get<double>();
  r.full_d = j.at("full_d").get<double>();
  return r;
}

}  // namespace attribpaint::losses
