#pragma once

// Run configuration: defaults, then QS_DEFAULT_TOL, then a key = value file.

#include <string>

#include "qseries/sampling.hpp"

namespace qseries {

struct RunConfig {
  SampleConfig sample;
  double tol = 1e-9;
};

/// Applies QS_DEFAULT_TOL when set.
void apply_environment(RunConfig& cfg);

/// Reads `key = value` lines ('#' starts a comment). Keys: seed, count, tol,
/// margin, q_min, q_max, n_max, k_max.
void load_config_file(const std::string& path, RunConfig& cfg);
void parse_config(const std::string& text, RunConfig& cfg);

}  // namespace qseries
