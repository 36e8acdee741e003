#include "attribpaint/core/rng.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace attribpaint {

std::uint64_t mix_seed(std::uint64_t value) {
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

RngSource::RngSource(std::uint64_t seed) : engine_(mix_seed(seed)) {}

std::uint64_t RngSource::next_u64() { return engine_(); }

double RngSource::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::int64_t RngSource::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo >= hi) throw std::invalid_argument("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo);
  return lo + static_cast<std::int64_t>(next_u64() % span);
}

double RngSource::normal(double mu, double sigma) {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double z = std::sqrt(-2.0 * std::log(u1)) *
                   std::cos(2.0 * std::numbers::pi * u2);
  return mu + sigma * z;
}

bool RngSource::bernoulli(double p) { return uniform() < p; }

RngSource RngSource::child(std::uint64_t stream) {
  return RngSource(mix_seed(next_u64() ^ mix_seed(stream)));
}

std::string RngSource::serialize() const {
  std::ostringstream out;
  out << engine_;
  return out.str();
}

RngSource RngSource::deserialize(const std::string& state) {
  RngSource src;
  std::istringstream in(state);
  in >> src.engine_;
  if (in.fail()) throw std::invalid_argument("RngSource: corrupt engine state");
  return src;
}

}  // namespace attribpaint
