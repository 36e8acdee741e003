#include "attribpaint/training/trainer.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "attribpaint/conditioning/condition.hpp"
#include "attribpaint/core/errors.hpp"
#include "attribpaint/networks/init.hpp"
#include "attribpaint/training/checkpoint.hpp"

namespace attribpaint::train {

namespace {

void append_params(std::vector<torch::Tensor>& out, const torch::nn::Module& module) {
  for (const auto& p : module.parameters()) out.push_back(p);
}

void check_finite(double value, const char* name, std::int64_t step) {
  if (!std::isfinite(value)) {
    throw NumericsError(std::string("train_step: non-finite loss component '") + name +
                        "' at step " + std::to_string(step));
  }
}

}  // namespace

std::vector<torch::Tensor> TrainState::generator_params() const {
  std::vector<torch::Tensor> params;
  append_params(params, *g);
  append_params(params, *f);
  append_params(params, *parser);
  return params;
}

std::vector<torch::Tensor> TrainState::discriminator_params() const {
  std::vector<torch::Tensor> params;
  append_params(params, *dy);
  append_params(params, *dx);
  return params;
}

TrainState init_train_state(const RunConfig& config, const AttributeSchema& schema) {
  validate_config(config);
  schema.validate();

  TrainState state;
  state.config = config;
  state.schema = schema;
  state.g = nets::make_forward_generator(config);
  state.f = nets::make_backward_generator(config);
  state.dy = nets::make_style_discriminator(config, schema);
  state.dx = nets::make_content_discriminator(config);
  state.parser = nets::make_condition_parser(config, schema.condition_dim(), state.g);

  RngSource root(config.seed);
  auto init_rng = root.child(0x11);
  nets::init_weights(*state.g, init_rng);
  nets::init_weights(*state.f, init_rng);
  nets::init_weights(*state.dy, init_rng);
  nets::init_weights(*state.dx, init_rng);
  nets::init_weights(*state.parser, init_rng);
  state.parser->reset_head_bias();

  state.backbone = perceptual::make_backbone(config.perceptual_weights, config.seed);
  state.opt_g = std::make_unique<AdamUpdater>(state.generator_params(), config.optimizer);
  state.opt_d = std::make_unique<AdamUpdater>(state.discriminator_params(), config.optimizer);
  state.rng = root.child(0x22);
  state.step = 0;
  return state;
}

losses::LossReport train_step(TrainState& state, const data::Batch& batch) {
  using losses::Side;
  namespace L = losses;

  if (batch.content.size(0) != batch.style.size(0) ||
      batch.labels.size(0) != batch.style.size(0)) {
    throw std::invalid_argument("train_step: content/style/label batch sizes differ");
  }
  const auto next_step = state.step + 1;

  // One perturbed condition per style row, shared by both phases.
  const auto cond_vec = cond::build_condition_batch(
      batch.labels, cond::Mode::kTrain, state.schema, state.config.perturbation, state.rng);

  // -- discriminator update --------------------------------------------
  torch::Tensor y_fake_detached, x_fake_detached;
  {
    torch::NoGradGuard no_grad;
    y_fake_detached = state.g->forward(batch.content, state.parser->forward(cond_vec));
    x_fake_detached = state.f->forward(batch.style);
  }
  state.opt_d->zero_grad();
  const auto real_scores = state.dy->forward(batch.style);
  const auto fake_scores_d = state.dy->forward(y_fake_detached);
  const auto adv_f_d = L::adversarial_forward(L::realness_probability(real_scores.realness),
                                              L::realness_probability(fake_scores_d.realness),
                                              Side::kDiscriminator);
  const auto adv_b_d = L::adversarial_backward(
      L::realness_probability(state.dx->forward(batch.content)),
      L::realness_probability(state.dx->forward(x_fake_detached)), Side::kDiscriminator);
  const auto reg_pair =
      L::attribute_regression(real_scores, batch.labels, fake_scores_d, batch.labels);
  const auto reg_real = reg_pair.first;

  const auto zero = torch::zeros({}, adv_f_d.options());
  L::LossParts d_parts;
  d_parts.adv_f_gen = zero;
  d_parts.adv_b_gen = zero;
  d_parts.adv_f_disc = adv_f_d;
  d_parts.adv_b_disc = adv_b_d;
  d_parts.rec = zero;
  d_parts.reg_real = reg_real;
  d_parts.reg_fake = zero;
  d_parts.sp = zero;
  const auto full_d = L::full_objective(d_parts, state.config.loss_weights).second;
  full_d.backward();
  state.opt_d->step();

  // -- generator update -------------------------------------------------
  state.opt_g->zero_grad();
  const auto adain = state.parser->forward(cond_vec);
  const auto y_tilde = state.g->forward(batch.content, adain);
  const auto x_cycle = state.f->forward(y_tilde);
  const auto x_fake = state.f->forward(batch.style);
  const auto y_cycle = state.g->forward(x_fake, adain);
  const auto y_idt = state.g->forward(batch.style, adain);
  const auto x_idt = state.f->forward(batch.content);

  const auto fake_scores_g = state.dy->forward(y_tilde);
  const auto fake_p = L::realness_probability(fake_scores_g.realness);
  const auto fake_p_x = L::realness_probability(state.dx->forward(x_fake));
  // real scores are unused on the generator side
  const auto adv_f_g = L::adversarial_forward(fake_p, fake_p, Side::kGenerator);
  const auto adv_b_g = L::adversarial_backward(fake_p_x, fake_p_x, Side::kGenerator);
  const auto reg_fake = L::attribute_class_loss(fake_scores_g, batch.labels);
  const auto sp = perceptual::style_distance(state.backbone, y_tilde, batch.style);
  const auto rec = L::reconstruction(batch.content, x_cycle, batch.style, y_cycle, y_idt, x_idt);

  L::LossParts g_parts;
  g_parts.adv_f_gen = adv_f_g;
  g_parts.adv_b_gen = adv_b_g;
  g_parts.adv_f_disc = zero;
  g_parts.adv_b_disc = zero;
  g_parts.rec = rec.total;
  g_parts.reg_real = zero;
  g_parts.reg_fake = reg_fake;
  g_parts.sp = sp;
  const auto full_g = L::full_objective(g_parts, state.config.loss_weights).first;
  full_g.backward();
  state.opt_g->step();

  losses::LossReport report;
  report.step = next_step;
  report.adv_f = adv_f_d.item<double>();
  report.adv_b = adv_b_d.item<double>();
  report.reg_real = reg_real.item<double>();
  report.reg_fake = reg_fake.item<double>();
  report.sp = sp.item<double>();
  report.rec_cycle_x = rec.cycle_x.item<double>();
  report.rec_cycle_y = rec.cycle_y.item<double>();
  report.rec_idt_y = rec.idt_y.item<double>();
  report.rec_idt_x = rec.idt_x.item<double>();
  report.rec = rec.total.item<double>();
  report.full_g = full_g.item<double>();
  report.full_d = full_d.item<double>();

  check_finite(report.adv_f, "adv_f", next_step);
  check_finite(report.adv_b, "adv_b", next_step);
  check_finite(report.reg_real, "reg_real", next_step);
  check_finite(report.reg_fake, "reg_fake", next_step);
  check_finite(report.sp, "sp", next_step);
  check_finite(report.rec, "rec", next_step);
  check_finite(report.full_g, "full_g", next_step);
  check_finite(report.full_d, "full_d", next_step);

  state.step = next_step;
  return report;
}

FitResult fit(const RunConfig& config, const std::string& style_manifest,
              const std::string& content_manifest, const FitOptions& options) {
  namespace fs = std::filesystem;
  validate_config(config);

  data::Dataset dataset(style_manifest, content_manifest, config.image_size,
                        config.holdout_fraction);

  TrainState state;
  if (options.resume) {
    state = load_snapshot(*options.resume);
    if (serialize_config(state.config) != serialize_config(config)) {
      throw UsageError("resume: snapshot config differs from the supplied config");
    }
    auto check_axis = [](const std::vector<std::string>& a, const std::vector<std::string>& b,
                         const char* axis) {
      if (a != b) {
        throw DataError(std::string("resume: checkpoint ") + axis +
                        " axis does not match the dataset's");
      }
    };
    check_axis(state.schema.artists, dataset.schema().artists, "artist");
    check_axis(state.schema.periods, dataset.schema().periods, "period");
    check_axis(state.schema.genres, dataset.schema().genres, "genre");
  } else {
    state = init_train_state(config, dataset.schema());
  }

  fs::create_directories(fs::path(options.out_dir) / "checkpoints");
  const auto metrics_path = fs::path(options.out_dir) / "metrics.jsonl";
  std::ofstream metrics(metrics_path,
                        options.resume ? std::ios::app : std::ios::trunc);
  if (!metrics) throw DataError("fit: cannot open metrics log " + metrics_path.string());

  FitResult result;
  if (state.step >= config.total_steps) {
    std::cout << "fit: nothing to do, snapshot already at step " << state.step << " of "
              << config.total_steps << "\n";
  }
  while (state.step < config.total_steps) {
    const auto batch = dataset.sample(state.rng, config.batch_size);
    auto report = train_step(state, batch);
    metrics << report.to_json().dump() << "\n";
    if (!metrics) throw DataError("fit: metrics log write failure");
    metrics.flush();
    result.reports.push_back(report);
    if (state.step % config.checkpoint_interval == 0 && state.step < config.total_steps) {
      const auto snap = fs::path(options.out_dir) / "checkpoints" /
                        ("snapshot_" + std::to_string(state.step) + ".apck");
      save_snapshot(state, snap.string());
    }
  }

  const auto final_snap = fs::path(options.out_dir) / "checkpoints" /
                          ("snapshot_" + std::to_string(state.step) + ".apck");
  save_snapshot(state, final_snap.string());
  const auto model_path = fs::path(options.out_dir) / "model.apck";
  save_model_checkpoint(state, model_path.string());

  result.model_checkpoint = model_path.string();
  result.final_snapshot = final_snap.string();
  result.final_step = state.step;
  return result;
}

}  // namespace attribpaint::train
