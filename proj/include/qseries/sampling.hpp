#pragma once

// Deterministic random parameter draws for identity checking.

#include <cstdint>
#include <map>
#include <string>

#include "qseries/scalar.hpp"

namespace qseries {

struct SampleConfig {
  std::uint64_t seed = 1;
  std::int64_t count = 100;
  double margin = 0.9;
  double pole_distance = 1e-6;
  double q_min = 0.2;
  double q_max = 0.8;
  double param_min = 0.1;
  double param_max = 3.0;
  std::int64_t n_max = 8;
  std::int64_t k_max = 3;
  /// Points whose sum of |terms| exceeds this multiple of |sum| are redrawn.
  double max_condition = 1e5;
  /// Integer parameters pinned to a value (e.g. the family size k).
  std::map<std::string, std::int64_t> fixed_ints;

  void validate() const;
};

/// splitmix64-seeded xoshiro256**; bit-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform in [0, 1).
  double uniform();

 private:
  std::uint64_t s_[4];
};

/// Stable 64-bit hash for deriving per-identity streams.
std::uint64_t stable_hash(const std::string& text);

enum class IntCap { None, N, K };

/// Draw helpers that follow the configured boxes and ranges.
class ParamDraw {
 public:
  ParamDraw(Rng& rng, const SampleConfig& cfg) : rng_(rng), cfg_(cfg) {}

  double uniform(double lo, double hi) { return lo + (hi - lo) * rng_.uniform(); }
  /// Magnitude uniform in [param_min, param_max], uniform phase.
  Scalar complex() { return complex(cfg_.param_min, cfg_.param_max); }
  Scalar complex(double min_mag, double max_mag) { return with_magnitude(uniform(min_mag, max_mag)); }
  Scalar with_magnitude(double mag);
  /// Real base in [q_min, q_max].
  Scalar q_inside() { return Scalar(uniform(cfg_.q_min, cfg_.q_max)); }
  /// Real base in [1/q_max, 1/q_min].
  Scalar q_outside() { return Scalar(1.0 / uniform(cfg_.q_min, cfg_.q_max)); }
  std::int64_t integer(const std::string& name, std::int64_t lo, std::int64_t hi, IntCap cap = IntCap::None);

  const SampleConfig& config() const { return cfg_; }
  double margin() const { return cfg_.margin; }

 private:
  Rng& rng_;
  const SampleConfig& cfg_;
};

}  // namespace qseries
