// One line per acceptance criterion. Exit status is nonzero if any fails.
//
//   acceptance [path-to-qseries-binary]
//
// Without a binary path the reproducibility runs go through cli::run in-process.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "qseries/expansions.hpp"
#include "qseries/harness.hpp"
#include "qseries/identities.hpp"
#include "qseries/report.hpp"

using namespace qseries;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int n, const Outcome& o) {
  std::printf("criterion %d: %s  %s\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<std::string> ids_with_prefix(const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& id : registry().ids()) {
    if (id.rfind(prefix, 0) == 0) out.push_back(id);
  }
  return out;
}

double worst_rel(const SuiteReport& rep) {
  double w = 0.0;
  for (const auto& r : rep.identities) {
    for (const auto& p : r.points) {
      if (p.check.verdict == Verdict::Pass || p.check.verdict == Verdict::Fail) w = std::max(w, p.check.rel_err);
    }
  }
  return w;
}

std::string first_failure(const SuiteReport& rep) {
  for (const auto& r : rep.identities) {
    for (const auto& p : r.points) {
      if (p.check.verdict == Verdict::Fail) return r.id + " #" + std::to_string(p.point_index) + ": " + p.check.diagnostics;
    }
  }
  return {};
}

// Every listed identity at `count` points: no failures, skips under 5%.
Outcome suite_criterion(const std::vector<std::string>& ids, std::int64_t count, double tol, double max_seconds) {
  SampleConfig cfg;
  cfg.count = count;
  const SuiteReport rep = run_suite(ids, cfg, {}, tol);
  Outcome o;
  std::int64_t worst_skip = 0;
  for (const auto& r : rep.identities) {
    worst_skip = std::max(worst_skip, r.skip);
    if (r.skip * 20 >= count) o.pass = false;
    if (r.pass + r.fail + r.skip != count) o.pass = false;
  }
  if (rep.fail != 0) o.pass = false;
  if (rep.wall_time >= max_seconds) o.pass = false;
  o.detail = fmt("%zu ids x %lld points: pass %lld, fail %lld, skip %lld (max %lld per id), max rel err %.2e, %.2f s",
                 ids.size(), static_cast<long long>(count), static_cast<long long>(rep.pass),
                 static_cast<long long>(rep.fail), static_cast<long long>(rep.skip),
                 static_cast<long long>(worst_skip), worst_rel(rep), rep.wall_time);
  if (rep.fail != 0) o.detail += "; first failure " + first_failure(rep);
  return o;
}

Outcome criterion_orthogonality() {
  Rng rng(2024);
  SampleConfig cfg;
  ParamDraw draw(rng, cfg);
  Outcome o;
  double worst = 0.0;
  int checked = 0;
  for (std::int64_t n = 0; n <= 25; ++n) {
    for (int i = 0; i < 20; ++i) {
      Params p;
      p.set("q", draw.q_inside());
      p.set("a", draw.complex());
      p.set_int("n", n);
      const SeriesResult s = series_side("S13", p);
      const double score = n == 0 ? std::abs(s.value - 1.0) : std::abs(s.value) / (1.0 + s.peak_partial);
      worst = std::max(worst, score);
      if (!(score <= 1e-12)) o.pass = false;
      ++checked;
    }
  }
  o.detail = fmt("%d sums over n = 0..25, worst scaled residual %.2e", checked, worst);
  return o;
}

Outcome criterion_family() {
  Outcome o;
  std::string parts;
  double worst_agree = 0.0;
  for (std::int64_t k = 1; k <= 3; ++k) {
    SampleConfig cfg;
    cfg.count = 50;
    cfg.fixed_ints["k"] = k;
    const SuiteReport rep = run_suite({"S22"}, cfg, {}, 1e-9);
    if (rep.fail != 0 || rep.pass + rep.skip != 50 || rep.skip * 20 >= 50) o.pass = false;
    parts += fmt("k=%lld pass %lld/50 max rel %.1e; ", static_cast<long long>(k), static_cast<long long>(rep.pass),
                 worst_rel(rep));
    if (k == 3) continue;
    for (const auto& pt : rep.identities[0].points) {
      const Params& f = pt.params;
      Params p;
      for (const char* name : {"a", "b", "d", "q"}) p.set(name, f.get(name));
      p.set("e", f.get("e1"));
      p.set_int("n", f.integer("n1"));
      if (k == 2) {
        p.set("f", f.get("e2"));
        p.set_int("m", f.integer("n2"));
      }
      const CheckResult single = check_identity(k == 1 ? "S20" : "S21", p);
      worst_agree = std::max({worst_agree, relative_error(single.lhs, pt.check.lhs),
                              relative_error(single.rhs, pt.check.rhs)});
    }
  }
  if (!(worst_agree <= 1e-12)) o.pass = false;
  o.detail = parts + fmt("k=1,2 vs one-/two-pair checkers max rel diff %.1e", worst_agree);
  return o;
}

Outcome criterion_transformations() {
  Outcome o = suite_criterion(ids_with_prefix("T"), 100, 1e-9, 1e9);
  // 4W3(a; b; q, 1/b) = 0
  Rng rng(77);
  SampleConfig cfg;
  ParamDraw draw(rng, cfg);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Params p;
    p.set("q", draw.q_inside());
    p.set("a", draw.complex());
    const Scalar b = draw.complex(1.2, 3.0);
    p.set("b", b);
    p.set("z", 1.0 / b);
    const SeriesResult lhs = series_side("T5", p);
    worst = std::max(worst, std::abs(lhs.value) / (1.0 + lhs.peak_partial));
  }
  if (!(worst <= 1e-12)) o.pass = false;
  o.detail += fmt("; 4W3(a;b;q,1/b) worst |value| %.1e over 100 points", worst);
  return o;
}

Outcome criterion_expansions() {
  Outcome o = suite_criterion(ids_with_prefix("E"), 100, 1e-10, 1e9);
  // the sampled supports, and the two presets
  SampleConfig cfg;
  cfg.count = 50;
  std::int64_t max_support = 0;
  for (const char* id : {"E1", "E2", "E3"}) {
    for (const Params& p : sample_params(id, cfg)) max_support = std::max(max_support, p.integer("N"));
  }
  if (max_support > 9) o.pass = false;
  int preset_pass = 0, preset_total = 0;
  for (const Params& p : sample_params("S15", cfg)) {
    Params e1;
    e1.set("a", p.get("a")).set("q", p.get("q"));
    const WeightSequence u = six_w_five_weights(p.get("a"), p.get("b"), p.get("c"), p.integer("n"), p.base());
    if (u.values.size() > 9) continue;
    ++preset_total;
    if (check_expansion("E1", u, e1, 1e-10).pass) ++preset_pass;
  }
  for (const Params& p : sample_params("S21", cfg)) {
    if (p.integer("m") > 8) continue;
    Params e3;
    for (const char* name : {"a", "b", "d", "e", "q"}) e3.set(name, p.get(name));
    e3.set_int("n", p.integer("n"));
    const WeightSequence u = balanced_weights(p.get("a"), p.get("b"), p.get("f"), p.integer("m"), p.base());
    ++preset_total;
    if (check_expansion("E3", u, e3, 1e-10).pass) ++preset_pass;
  }
  if (preset_pass != preset_total) o.pass = false;
  o.detail += fmt("; max support %lld; preset weights pass %d/%d", static_cast<long long>(max_support), preset_pass,
                  preset_total);
  return o;
}

Outcome criterion_oracle() {
  Rng rng(99);
  SampleConfig cfg;
  ParamDraw draw(rng, cfg);
  Outcome o;
  double worst = 0.0;
  int phi = 0, psi = 0, term = 0, bitexact = 0;
  auto list = [&](int size, double lo, double hi) {
    std::vector<Scalar> v;
    for (int i = 0; i < size; ++i) v.push_back(draw.complex(lo, hi));
    return v;
  };
  while (phi < 50) {
    const int s = static_cast<int>(draw.uniform(0, 3));
    const QBase q(draw.q_inside());
    PhiSpec spec{list(s + 1, 0.1, 2.0), list(s, 0.1, 2.0), q, draw.complex(0.05, 0.8)};
    try {
      const SeriesResult r = eval_phi(spec);
      const Scalar ref = partial_sums(spec, std::max<std::int64_t>(400, r.terms_used + 50)).back();
      worst = std::max(worst, relative_error(r.value, ref));
      ++phi;
    } catch (const PoleError&) {
    }
  }
  while (psi < 50) {
    const QBase q(draw.q_inside());
    const Scalar a = draw.complex(1.0, 3.0), b = draw.complex(0.1, 0.8);
    const double lo = std::abs(b / a);
    PsiSpec spec{{a}, {b}, q, std::polar(std::sqrt(lo), draw.uniform(-3.14159, 3.14159))};
    try {
      const SeriesResult r = eval_psi(spec);
      const Scalar ref = partial_sums(spec, std::max<std::int64_t>(400, r.terms_used + 50)).back();
      worst = std::max(worst, relative_error(r.value, ref));
      ++psi;
    } catch (const PoleError&) {
    }
  }
  while (term < 50) {
    const QBase q(draw.q_inside());
    const auto n = draw.integer("n", 0, 10, IntCap::N);
    std::vector<Scalar> num = list(2, 0.1, 2.0);
    num.push_back(q.pow(-n));
    PhiSpec spec{num, list(2, 0.1, 2.0), q, q.value()};
    try {
      const SeriesResult r = eval_phi(spec);
      ++term;
      if (r.terminated && r.value == partial_sums(spec, n).back()) ++bitexact;
    } catch (const PoleError&) {
    }
  }
  if (!(worst <= 1e-13) || bitexact != term) o.pass = false;
  o.detail = fmt("%d phi + %d psi convergent specs, max rel err vs partial sums %.1e; %d/%d terminating bit-identical",
                 phi, psi, worst, bitexact, term);
  return o;
}

Outcome criterion_degenerations() {
  Outcome o;
  SampleConfig cfg;
  cfg.count = 20;
  Rng rng(5);
  ParamDraw draw(rng, cfg);

  int n13 = 0;
  double w13 = 0.0;
  bool verdicts = true;
  for (const Params& p : sample_params("S13", cfg)) {
    Params p15 = p;
    const Scalar b = draw.complex();
    p15.set("b", b).set("c", p.get("a") * p.get("q") / b);
    const SeriesResult l15 = series_side("S15", p15), l13 = series_side("S13", p);
    const double scale = p.integer("n") == 0 ? std::abs(l13.value) : 1.0 + std::max(l15.peak_partial, l13.peak_partial);
    w13 = std::max(w13, std::abs(l15.value - l13.value) / scale);
    const Verdict v13 = check_identity("S13", p).verdict;
    const Verdict v15 = p.integer("n") == 0 ? check_identity("S15", p15).verdict
                                             : compare_absolute(l15, SeriesResult{}, kAbsoluteCriterion).verdict;
    if (v13 != v15) verdicts = false;
    ++n13;
  }

  int n17 = 0;
  double w17 = 0.0;
  for (const Params& p : sample_params("S18", cfg)) {
    Params p17 = p;
    const Scalar s = std::sqrt(p.get("a"));
    p17.set("d", s).set("e", -s);
    w17 = std::max({w17, relative_error(series_side("S17", p17).value, series_side("S18", p).value),
                    relative_error(closed_form("S17", p17), closed_form("S18", p))});
    ++n17;
  }

  // the gap is of order q^30, so the base is kept at or below 0.5
  SampleConfig small_q = cfg;
  small_q.q_max = 0.5;
  int n19 = 0;
  double w19 = 0.0;
  for (const Params& p : sample_params("S16", small_q)) {
    Params p19 = p;
    p19.set_int("n", 30);
    w19 = std::max({w19, relative_error(series_side("S19", p19).value, series_side("S16", p).value),
                    relative_error(closed_form("S19", p19), closed_form("S16", p))});
    ++n19;
  }
  o.pass = verdicts && w13 <= 1e-12 && w17 <= 1e-10 && w19 <= 1e-8 && n13 >= 10 && n17 >= 10 && n19 >= 10;
  o.detail = fmt("6W5->4W3: %d points, max diff %.1e, verdicts %s; 6psi6->2psi2: %d points, max rel %.1e; "
                 "8W7(n=30)->6W5: %d points, max rel %.1e",
                 n13, w13, verdicts ? "identical" : "differ", n17, w17, n19, w19);
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome criterion_reproducibility(const char* binary) {
  Outcome o;
  const std::string a = "acceptance_run_a.json", b = "acceptance_run_b.json";
  int codes[2];
  for (int i = 0; i < 2; ++i) {
    const std::string out = i == 0 ? a : b;
    if (binary) {
      const std::string cmd = std::string("\"") + binary + "\" suite --seed 1 --count 100 --out " + out + " > /dev/null";
      codes[i] = std::system(cmd.c_str());
    } else {
      std::ostringstream sink;
      codes[i] = cli::run({"suite", "--seed", "1", "--count", "100", "--out", out}, sink, sink);
    }
  }
  const std::string ja = slurp(a), jb = slurp(b);
  o.pass = codes[0] == 0 && codes[1] == 0 && !ja.empty() && ja == jb;
  o.detail = fmt("two full suite runs, %zu and %zu bytes, %s", ja.size(), jb.size(),
                 ja == jb ? "byte-identical" : "differ");
  std::remove(a.c_str());
  std::remove(b.c_str());
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const char* binary = argc > 1 ? argv[1] : nullptr;
  try {
    report(1, suite_criterion(ids_with_prefix("S"), 100, 1e-9, 120.0));
    report(2, criterion_orthogonality());
    report(3, criterion_family());
    report(4, criterion_transformations());
    report(5, suite_criterion(ids_with_prefix("F"), 100, 1e-12, 1e9));
    report(6, criterion_expansions());
    report(7, criterion_oracle());
    report(8, criterion_degenerations());
    report(9, criterion_reproducibility(binary));
  } catch (const std::exception& e) {
    std::printf("aborted: %s\n", e.what());
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
