#include "qseries/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

namespace qseries {

namespace {

bool well_conditioned(const SeriesResult& r, double max_condition) {
  if (!is_finite(r.value)) return false;
  const double mag = std::abs(r.value);
  if (mag == 0.0) return r.abs_sum == 0.0;
  return r.abs_sum / mag <= max_condition;
}

bool admissible(const IdentityEntry& entry, const Params& p, const SampleConfig& cfg, const EvalOptions& strict) {
  for (const auto& c : entry.constraints) {
    if (!c.holds(p, cfg.margin)) return false;
  }
  try {
    const SeriesResult lhs = entry.lhs(p, strict);
    const SeriesResult rhs = entry.rhs(p, strict);
    if (entry.absolute_check) return is_finite(lhs.value) && is_finite(rhs.value);
    return well_conditioned(lhs, cfg.max_condition) && well_conditioned(rhs, cfg.max_condition);
  } catch (const Error&) {
    return false;
  }
}

IdentityReport run_identity(const IdentityEntry& entry, const SampleConfig& cfg, const EvalOptions& opts, double tol,
                            const Checker& checker) {
  IdentityReport rep;
  rep.id = entry.id;
  std::vector<Params> points;
  try {
    points = sample_params(entry.id, cfg);
  } catch (const ExhaustionError& e) {
    PointResult pr;
    pr.id = entry.id;
    pr.point_index = -1;
    pr.check.verdict = Verdict::Fail;
    pr.check.tolerance = tol;
    pr.check.diagnostics = e.what();
    rep.points.push_back(std::move(pr));
    rep.fail = 1;
    return rep;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    PointResult pr;
    pr.id = entry.id;
    pr.point_index = static_cast<std::int64_t>(i);
    pr.params = std::move(points[i]);
    try {
      pr.check = checker(entry, pr.params, opts, tol);
    } catch (const PoleError& e) {
      pr.check.verdict = Verdict::Skip;
      pr.check.tolerance = tol;
      pr.check.diagnostics = std::string("skipped: ") + e.what();
    } catch (const Error& e) {
      pr.check.verdict = Verdict::Fail;
      pr.check.pass = false;
      pr.check.tolerance = tol;
      pr.check.diagnostics = e.what();
    }
    switch (pr.check.verdict) {
      case Verdict::Pass: ++rep.pass; break;
      case Verdict::Fail: ++rep.fail; break;
      case Verdict::Skip: ++rep.skip; break;
    }
    rep.points.push_back(std::move(pr));
  }
  return rep;
}

}  // namespace

Params default_draw(const IdentityEntry& entry, ParamDraw& draw) {
  Params p;
  for (const auto& decl : entry.params) {
    p.set(decl.name, decl.name == "q" ? draw.q_inside() : draw.complex());
  }
  for (const auto& decl : entry.integer_params) p.set_int(decl.name, draw.integer(decl.name, decl.lo, decl.hi, decl.cap));
  return p;
}

std::vector<Params> sample_params(const std::string& id, const SampleConfig& cfg) {
  cfg.validate();
  const IdentityEntry& entry = registry().at(id);
  Rng rng(cfg.seed ^ stable_hash(id));
  ParamDraw draw(rng, cfg);
  EvalOptions strict;
  strict.policy = {cfg.pole_distance, true};

  std::vector<Params> out;
  const std::int64_t budget = 1000 * cfg.count;
  std::int64_t attempts = 0;
  while (static_cast<std::int64_t>(out.size()) < cfg.count) {
    if (attempts++ >= budget) {
      std::ostringstream os;
      os << id << ": found " << out.size() << " admissible points of " << cfg.count << " in " << budget
         << " draws";
      throw ExhaustionError(os.str());
    }
    Params p = entry.draw ? entry.draw(draw) : default_draw(entry, draw);
    if (admissible(entry, p, cfg, strict)) out.push_back(std::move(p));
  }
  return out;
}

CheckResult default_checker(const IdentityEntry& entry, const Params& params, const EvalOptions& opts, double tol) {
  return check_identity(entry.id, params, opts, tol);
}

SuiteReport run_suite(const std::vector<std::string>& ids, const SampleConfig& cfg, const EvalOptions& opts,
                      double tol, const Checker& checker) {
  cfg.validate();
  opts.validate();
  std::vector<const IdentityEntry*> entries;
  for (const auto& id : ids) entries.push_back(&registry().at(id));

  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.config = cfg;
  report.tol = tol;
  report.identities.resize(entries.size());

  // Identities are independent; results land in their fixed slots.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      report.identities[i] = run_identity(*entries[i], cfg, opts, tol, checker);
    }
  };
  const std::size_t n_threads =
      std::min<std::size_t>(entries.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& rep : report.identities) {
    report.pass += rep.pass;
    report.fail += rep.fail;
    report.skip += rep.skip;
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qseries
