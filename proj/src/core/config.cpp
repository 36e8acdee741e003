#include "attribpaint/core/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "attribpaint/core/errors.hpp"

namespace attribpaint {

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
  throw UsageError("config error (" + origin + "): " + msg);
}

std::int64_t parse_int(const std::string& key, const std::string& value,
                       const std::string& origin) {
  std::int64_t out = 0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
    fail(origin, "key '" + key + "': expected integer, got '" + value + "'");
  }
  return out;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value,
                         const std::string& origin) {
  std::uint64_t out = 0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
    fail(origin, "key '" + key + "': expected unsigned integer, got '" + value + "'");
  }
  return out;
}

double parse_real(const std::string& key, const std::string& value,
                  const std::string& origin) {
  try {
    std::size_t used = 0;
    const double out = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return out;
  } catch (const std::exception&) {
    fail(origin, "key '" + key + "': expected real number, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value,
                const std::string& origin) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  fail(origin, "key '" + key + "': expected true/false, got '" + value + "'");
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// One setter per documented key; the map doubles as the key whitelist.
using Setter = std::function<void(RunConfig&, const std::string& key,
                                  const std::string& value, const std::string& origin)>;

const std::map<std::string, Setter>& config_keys() {
  static const std::map<std::string, Setter> keys = {
      {"image_size", [](RunConfig& c, auto& k, auto& v, auto& o) { c.image_size = parse_int(k, v, o); }},
      {"channel_base", [](RunConfig& c, auto& k, auto& v, auto& o) { c.channel_base = parse_int(k, v, o); }},
      {"n_downsample", [](RunConfig& c, auto& k, auto& v, auto& o) { c.n_downsample = parse_int(k, v, o); }},
      {"n_res_blocks", [](RunConfig& c, auto& k, auto& v, auto& o) { c.n_res_blocks = parse_int(k, v, o); }},
      {"n_adain_blocks", [](RunConfig& c, auto& k, auto& v, auto& o) { c.n_adain_blocks = parse_int(k, v, o); }},
      {"mlp_hidden", [](RunConfig& c, auto& k, auto& v, auto& o) { c.mlp_hidden = parse_int(k, v, o); }},
      {"mlp_layers", [](RunConfig& c, auto& k, auto& v, auto& o) { c.mlp_layers = parse_int(k, v, o); }},
      {"lambda_rec", [](RunConfig& c, auto& k, auto& v, auto& o) { c.loss_weights.lambda_rec = parse_real(k, v, o); }},
      {"lambda_reg", [](RunConfig& c, auto& k, auto& v, auto& o) { c.loss_weights.lambda_reg = parse_real(k, v, o); }},
      {"lambda_s", [](RunConfig& c, auto& k, auto& v, auto& o) { c.loss_weights.lambda_s = parse_real(k, v, o); }},
      {"perturb.mu", [](RunConfig& c, auto& k, auto& v, auto& o) { c.perturbation.mu = parse_real(k, v, o); }},
      {"perturb.sigma", [](RunConfig& c, auto& k, auto& v, auto& o) { c.perturbation.sigma = parse_real(k, v, o); }},
      {"perturb.enabled", [](RunConfig& c, auto& k, auto& v, auto& o) { c.perturbation.enabled = parse_bool(k, v, o); }},
      {"optimizer.lr", [](RunConfig& c, auto& k, auto& v, auto& o) { c.optimizer.lr = parse_real(k, v, o); }},
      {"optimizer.beta1", [](RunConfig& c, auto& k, auto& v, auto& o) { c.optimizer.beta1 = parse_real(k, v, o); }},
      {"optimizer.beta2", [](RunConfig& c, auto& k, auto& v, auto& o) { c.optimizer.beta2 = parse_real(k, v, o); }},
      {"batch_size", [](RunConfig& c, auto& k, auto& v, auto& o) { c.batch_size = parse_int(k, v, o); }},
      {"total_steps", [](RunConfig& c, auto& k, auto& v, auto& o) { c.total_steps = parse_int(k, v, o); }},
      {"seed", [](RunConfig& c, auto& k, auto& v, auto& o) { c.seed = parse_uint(k, v, o); }},
      {"checkpoint.interval", [](RunConfig& c, auto& k, auto& v, auto& o) { c.checkpoint_interval = parse_int(k, v, o); }},
      {"data.holdout_fraction", [](RunConfig& c, auto& k, auto& v, auto& o) { c.holdout_fraction = parse_real(k, v, o); }},
      {"perceptual.weights", [](RunConfig& c, auto&, auto& v, auto&) { c.perceptual_weights = v; }},
  };
  return keys;
}

void require_positive(const char* key, std::int64_t value) {
  if (value <= 0) {
    throw UsageError(std::string("config error: ") + key + " must be positive, got " +
                     std::to_string(value));
  }
}

void require_non_negative(const char* key, double value) {
  if (!(value >= 0.0)) {
    throw UsageError(std::string("config error: ") + key + " must be non-negative, got " +
                     std::to_string(value));
  }
}

}  // namespace

void validate_config(const RunConfig& c) {
  require_positive("image_size", c.image_size);
  require_positive("channel_base", c.channel_base);
  require_positive("n_downsample", c.n_downsample);
  require_positive("n_res_blocks", c.n_res_blocks);
  require_positive("n_adain_blocks", c.n_adain_blocks);
  require_positive("mlp_hidden", c.mlp_hidden);
  require_positive("mlp_layers", c.mlp_layers);
  require_positive("batch_size", c.batch_size);
  require_positive("checkpoint.interval", c.checkpoint_interval);
  if (c.total_steps < 0) {
    throw UsageError("config error: total_steps must be >= 0, got " +
                     std::to_string(c.total_steps));
  }
  if (c.n_downsample > 16) {
    throw UsageError("config error: n_downsample too large (max 16)");
  }

  // Two invariants on the spatial size: the downsampling stages must invert
  // exactly, and image tensors are required to be multiples of 4.
  const std::int64_t stride = std::int64_t(1) << c.n_downsample;
  if (c.image_size % stride != 0) {
    throw UsageError("config error: image_size not divisible by " + std::to_string(stride) +
                     " (image_size=" + std::to_string(c.image_size) +
                     ", n_downsample=" + std::to_string(c.n_downsample) + ")");
  }
  if (c.image_size % 4 != 0) {
    throw UsageError("config error: image_size not divisible by 4 (image_size=" +
                     std::to_string(c.image_size) + ")");
  }

  require_non_negative("lambda_rec", c.loss_weights.lambda_rec);
  require_non_negative("lambda_reg", c.loss_weights.lambda_reg);
  require_non_negative("lambda_s", c.loss_weights.lambda_s);
  require_non_negative("perturb.sigma", c.perturbation.sigma);
  if (!std::isfinite(c.perturbation.mu)) {
    throw UsageError("config error: perturb.mu must be finite");
  }
  if (!(c.optimizer.lr > 0.0)) {
    throw UsageError("config error: optimizer.lr must be positive");
  }
  if (!(c.optimizer.beta1 >= 0.0 && c.optimizer.beta1 < 1.0) ||
      !(c.optimizer.beta2 >= 0.0 && c.optimizer.beta2 < 1.0)) {
    throw UsageError("config error: optimizer betas must lie in [0, 1)");
  }
  if (!(c.holdout_fraction >= 0.0 && c.holdout_fraction < 1.0)) {
    throw UsageError("config error: data.holdout_fraction must lie in [0, 1)");
  }
}

RunConfig parse_config(std::istream& in, const std::string& origin) {
  RunConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(origin, "line " + std::to_string(line_no) + ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(origin, "line " + std::to_string(line_no) + ": empty key");

    const auto it = config_keys().find(key);
    if (it == config_keys().end()) {
      fail(origin, "line " + std::to_string(line_no) + ": unknown config key '" + key + "'");
    }
    it->second(config, key, value, origin + ":" + std::to_string(line_no));
  }
  validate_config(config);
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("config error: cannot open config file '" + path + "'");
  return parse_config(in, path);
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream out;
  out.precision(17);
  out << "image_size = " << c.image_size << "\n"
      << "channel_base = " << c.channel_base << "\n"
      << "n_downsample = " << c.n_downsample << "\n"
      << "n_res_blocks = " << c.n_res_blocks << "\n"
      << "n_adain_blocks = " << c.n_adain_blocks << "\n"
      << "mlp_hidden = " << c.mlp_hidden << "\n"
      << "mlp_layers = " << c.mlp_layers << "\n"
      << "lambda_rec = " << c.loss_weights.lambda_rec << "\n"
      << "lambda_reg = " << c.loss_weights.lambda_reg << "\n"
      << "lambda_s = " << c.loss_weights.lambda_s << "\n"
      << "perturb.mu = " << c.perturbation.mu << "\n"
      << "perturb.sigma = " << c.perturbation.sigma << "\n"
      << "perturb.enabled = " << (c.perturbation.enabled ? "true" : "false") << "\n"
      << "optimizer.lr = " << c.optimizer.lr << "\n"
      << "optimizer.beta1 = " << c.optimizer.beta1 << "\n"
      << "optimizer.beta2 = " << c.optimizer.beta2 << "\n"
      << "batch_size = " << c.batch_size << "\n"
      << "total_steps = " << c.total_steps << "\n"
      << "seed = " << c.seed << "\n"
      << "checkpoint.interval = " << c.checkpoint_interval << "\n"
      << "data.holdout_fraction = " << c.holdout_fraction << "\n"
      << "perceptual.weights = " << c.perceptual_weights << "\n";
  return out.str();
}

}  // namespace attribpaint
