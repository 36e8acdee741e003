#include "attribpaint/conditioning/condition.hpp"

#include <algorithm>

#include "attribpaint/core/errors.hpp"

namespace attribpaint::cond {

namespace {

constexpr double kHotClampLo = 0.5;
constexpr double kHotClampHi = 1.5;

torch::Tensor onehot(std::int64_t index, std::int64_t length) {
  auto v = torch::zeros({length}, torch::kFloat32);
  v[index] = 1.0f;
  return v;
}

}  // namespace

torch::Tensor encode_attribute(const std::string& label,
                               const std::vector<std::string>& axis,
                               const std::string& axis_name) {
  const auto index = axis_index(axis, axis_name, label);
  return onehot(index, static_cast<std::int64_t>(axis.size()));
}

torch::Tensor perturb_genre(const torch::Tensor& onehot_in,
                            const GenrePerturbationParams& params, RngSource& rng) {
  if (onehot_in.dim() != 1) {
    throw std::invalid_argument("perturb_genre: expected a rank-1 vector");
  }
  const auto nonzero = onehot_in.nonzero();
  if (nonzero.size(0) != 1) {
    throw std::invalid_argument("perturb_genre: input must have exactly one non-zero entry, got " +
                                std::to_string(nonzero.size(0)));
  }
  const auto hot = nonzero[0][0].item<std::int64_t>();
  if (std::abs(onehot_in[hot].item<double>() - 1.0) > 1e-6) {
    throw std::invalid_argument("perturb_genre: hot entry must equal 1");
  }
  if (!params.enabled) return onehot_in.clone();

  const double delta = rng.normal(params.mu, params.sigma);
  auto out = onehot_in.clone();
  out[hot] = static_cast<float>(std::clamp(1.0 + delta, kHotClampLo, kHotClampHi));
  return out;
}

AttributeSet build_condition(const std::string& artist, const std::string& period,
                             const std::string& genre, Mode mode,
                             const AttributeSchema& schema,
                             const GenrePerturbationParams& params, RngSource& rng) {
  AttributeSet set;
  set.artist = encode_attribute(artist, schema.artists, "artist");
  set.period = encode_attribute(period, schema.periods, "period");
  set.genre = encode_attribute(genre, schema.genres, "genre");
  if (mode == Mode::kTrain && params.enabled) {
    set.genre = perturb_genre(set.genre, params, rng);
  }
  set.concatenated = torch::cat({set.artist, set.period, set.genre});
  return set;
}

torch::Tensor build_condition_batch(const torch::Tensor& labels, Mode mode,
                                    const AttributeSchema& schema,
                                    const GenrePerturbationParams& params,
                                    RngSource& rng) {
  if (labels.dim() != 2 || labels.size(1) != 3) {
    throw std::invalid_argument("build_condition_batch: labels must be (B, 3)");
  }
  const auto batch = labels.size(0);
  auto out = torch::zeros({batch, schema.condition_dim()}, torch::kFloat32);
  const auto acc = labels.accessor<std::int64_t, 2>();
  for (std::int64_t i = 0; i < batch; ++i) {
    const auto a = acc[i][0];
    const auto p = acc[i][1];
    const auto g = acc[i][2];
    if (a < 0 || a >= schema.n_artists() || p < 0 || p >= schema.n_periods() ||
        g < 0 || g >= schema.n_genres()) {
      throw std::invalid_argument("build_condition_batch: label index out of range at row " +
                                  std::to_string(i));
    }
    auto set = build_condition(schema.artists[a], schema.periods[p], schema.genres[g],
                               mode, schema, params, rng);
    out[i] = set.concatenated;
  }
  return out;
}

}  // namespace attribpaint::cond
