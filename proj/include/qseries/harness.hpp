#pragma once

// Seeded sampling of admissible points and suite execution over the registry.

#include <functional>
#include <string>
#include <vector>

#include "qseries/identities.hpp"

namespace qseries {

struct PointResult {
  std::string id;
  std::int64_t point_index = 0;
  Params params;
  CheckResult check;
};

struct IdentityReport {
  std::string id;
  std::vector<PointResult> points;
  std::int64_t pass = 0;
  std::int64_t fail = 0;
  std::int64_t skip = 0;
};

struct SuiteReport {
  SampleConfig config;
  double tol = 1e-9;
  std::vector<IdentityReport> identities;
  std::int64_t pass = 0;
  std::int64_t fail = 0;
  std::int64_t skip = 0;
  /// Seconds; kept out of the JSON report so identical runs stay byte-identical.
  double wall_time = 0.0;
};

/// Every declared parameter from the standard box, integers from their ranges.
Params default_draw(const IdentityEntry& entry, ParamDraw& draw);

/// Exactly cfg.count admissible points for `id`, deterministic in (id, cfg).
/// Throws ExhaustionError after 1000 * count rejected draws.
std::vector<Params> sample_params(const std::string& id, const SampleConfig& cfg);

using Checker = std::function<CheckResult(const IdentityEntry&, const Params&, const EvalOptions&, double)>;

/// The checker used by run_suite unless another one is supplied.
CheckResult default_checker(const IdentityEntry& entry, const Params& params, const EvalOptions& opts, double tol);

SuiteReport run_suite(const std::vector<std::string>& ids, const SampleConfig& cfg, const EvalOptions& opts = {},
                      double tol = 1e-9, const Checker& checker = default_checker);

}  // namespace qseries
