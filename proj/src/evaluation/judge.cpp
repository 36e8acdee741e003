#include "attribpaint/evaluation/judge.hpp"

#include <set>
#include <vector>

#include "attribpaint/core/errors.hpp"
#include "attribpaint/io/container.hpp"
#include "attribpaint/losses/losses.hpp"
#include "attribpaint/networks/init.hpp"
#include "attribpaint/training/optim.hpp"

namespace attribpaint::eval {

JudgeNetImpl::JudgeNetImpl(std::int64_t n_artists, std::int64_t n_periods,
                           std::int64_t n_genres) {
  using torch::nn::Conv2d;
  using torch::nn::Conv2dOptions;
  trunk = register_module(
      "trunk", torch::nn::Sequential(
                   Conv2d(Conv2dOptions(3, 16, 4).stride(2).padding(1)),
                   torch::nn::LeakyReLU(torch::nn::LeakyReLUOptions().negative_slope(0.2)),
                   Conv2d(Conv2dOptions(16, 32, 4).stride(2).padding(1)),
                   torch::nn::LeakyReLU(torch::nn::LeakyReLUOptions().negative_slope(0.2)),
                   Conv2d(Conv2dOptions(32, 64, 4).stride(2).padding(1)),
                   torch::nn::LeakyReLU(torch::nn::LeakyReLUOptions().negative_slope(0.2))));
  artist_head = register_module("artist_head", torch::nn::Linear(64, n_artists));
  period_head = register_module("period_head", torch::nn::Linear(64, n_periods));
  genre_head = register_module("genre_head", torch::nn::Linear(64, n_genres));
}

JudgeNetImpl::Logits JudgeNetImpl::forward(const torch::Tensor& images) {
  auto pooled = trunk->forward(images).mean({2, 3});
  return {artist_head->forward(pooled), period_head->forward(pooled),
          genre_head->forward(pooled)};
}

torch::Tensor JudgeClassifier::posteriors(const torch::Tensor& images, int axis) const {
  torch::NoGradGuard no_grad;
  auto shared_net = net;  // holder copy shares the frozen impl
  auto logits = shared_net->forward(images);
  const auto& head = axis == 0 ? logits.artist : axis == 1 ? logits.period : logits.genre;
  return torch::softmax(head, 1);
}

JudgeClassifier train_judge(const torch::Tensor& style_images,
                            const torch::Tensor& style_labels,
                            const AttributeSchema& schema, const JudgeTrainConfig& config,
                            RngSource& rng) {
  if (style_images.size(0) == 0) throw DataError("train_judge: empty style set");
  if (style_images.size(0) != style_labels.size(0)) {
    throw DataError("train_judge: image/label count mismatch");
  }
  for (int axis = 0; axis < 3; ++axis) {
    std::set<std::int64_t> distinct;
    const auto col = style_labels.select(1, axis);
    for (std::int64_t i = 0; i < col.size(0); ++i) distinct.insert(col[i].item<std::int64_t>());
    if (distinct.size() < 2) {
      const char* names[] = {"artist", "period", "genre"};
      throw DataError(std::string("train_judge: degenerate single-class data on the ") +
                      names[axis] + " axis");
    }
  }

  JudgeClassifier judge;
  judge.schema = schema;
  judge.net = JudgeNet(schema.n_artists(), schema.n_periods(), schema.n_genres());
  nets::init_weights(*judge.net, rng);

  std::vector<torch::Tensor> params;
  for (const auto& p : judge.net->parameters()) params.push_back(p);
  train::AdamUpdater opt(params, OptimizerParams{config.lr, 0.9, 0.999});

  const auto n = style_images.size(0);
  for (std::int64_t step = 0; step < config.steps; ++step) {
    auto indices = torch::zeros({config.batch_size}, torch::kInt64);
    for (std::int64_t i = 0; i < config.batch_size; ++i) {
      indices[i] = rng.uniform_int(0, n);
    }
    const auto images = style_images.index_select(0, indices);
    const auto labels = style_labels.index_select(0, indices);

    opt.zero_grad();
    auto logits = judge.net->forward(images);
    auto loss = losses::cross_entropy(logits.artist, labels.select(1, 0)) +
                losses::cross_entropy(logits.period, labels.select(1, 1)) +
                losses::cross_entropy(logits.genre, labels.select(1, 2));
    loss.backward();
    opt.step();
  }

  judge.net->eval();
  for (auto& p : judge.net->parameters()) p.set_requires_grad(false);

  std::uint32_t crc = 0;
  for (const auto& p : judge.net->parameters()) {
    crc ^= io::tensor_crc32(p);
  }
  char id[16];
  std::snprintf(id, sizeof(id), "judge-%08x", crc);
  judge.id = id;
  return judge;
}

double judge_axis_accuracy(const JudgeClassifier& judge, const torch::Tensor& images,
                           const torch::Tensor& labels, int axis) {
  if (images.size(0) == 0) throw DataError("judge_axis_accuracy: empty evaluation set");
  const auto posteriors = judge.posteriors(images, axis);
  const auto predicted = posteriors.argmax(1);
  return predicted.eq(labels).to(torch::kFloat64).mean().item<double>();
}

}  // namespace attribpaint::eval
