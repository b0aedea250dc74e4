#include "qseries/sampling.hpp"

#include <numbers>

#include "qseries/errors.hpp"

namespace qseries {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

void SampleConfig::validate() const {
  if (count < 1) throw DomainError("count must be at least 1");
  if (!(margin > 0.0 && margin < 1.0)) throw DomainError("margin must lie in (0, 1)");
  if (!(pole_distance > 0.0)) throw DomainError("pole_distance must be positive");
  if (!(q_min > 0.0 && q_min <= q_max && q_max < 1.0)) throw DomainError("need 0 < q_min <= q_max < 1");
  if (!(param_min > 0.0 && param_min <= param_max)) throw DomainError("need 0 < param_min <= param_max");
  if (n_max < 0 || k_max < 1) throw DomainError("need n_max >= 0 and k_max >= 1");
  if (!(max_condition >= 1.0)) throw DomainError("max_condition must be at least 1");
}

Rng::Rng(std::uint64_t seed) {
  for (auto& s : s_) s = splitmix64(seed);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t stable_hash(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Scalar ParamDraw::with_magnitude(double mag) {
  const double phase = uniform(0.0, 2.0 * std::numbers::pi);
  return std::polar(mag, phase);
}

std::int64_t ParamDraw::integer(const std::string& name, std::int64_t lo, std::int64_t hi, IntCap cap) {
  if (cap == IntCap::N) hi = std::min(hi, std::max(lo, cfg_.n_max));
  if (cap == IntCap::K) hi = std::min(hi, std::max(lo, cfg_.k_max));
  if (auto it = cfg_.fixed_ints.find(name); it != cfg_.fixed_ints.end()) {
    if (it->second < lo || it->second > hi) {
      throw DomainError("fixed value of '" + name + "' is outside [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    }
    return it->second;
  }
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng_.next() % span);
}

}  // namespace qseries
