#include "qseries/identities.hpp"

#include <algorithm>
#include <sstream>

namespace qseries {

const char* to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::Summation: return "summation";
    case IdentityKind::Transformation: return "transformation";
    case IdentityKind::FunctionalEquation: return "functional-equation";
    case IdentityKind::Expansion: return "expansion";
    case IdentityKind::Orthogonality: return "orthogonality";
  }
  return "unknown";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skip: return "skip";
  }
  return "unknown";
}

Params& Params::set(const std::string& name, const Scalar& value) {
  values_[name] = value;
  return *this;
}

Params& Params::set_int(const std::string& name, std::int64_t value) {
  ints_[name] = value;
  return *this;
}

Scalar Params::get(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw DomainError("missing parameter '" + name + "'");
  return it->second;
}

std::int64_t Params::integer(const std::string& name) const {
  auto it = ints_.find(name);
  if (it == ints_.end()) throw DomainError("missing integer parameter '" + name + "'");
  return it->second;
}

Registry::Registry(std::vector<IdentityEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!index_.emplace(entries_[i].id, i).second) throw DomainError("duplicate identity id " + entries_[i].id);
  }
}

const IdentityEntry& Registry::at(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownIdentity(id);
  return entries_[it->second];
}

std::vector<std::string> Registry::ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.id);
  return out;
}

double relative_error(const Scalar& lhs, const Scalar& rhs) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), kRelErrFloor});
  return std::abs(lhs - rhs) / scale;
}

CheckResult compare_sides(const SeriesResult& lhs, const SeriesResult& rhs, double tol) {
  CheckResult r;
  r.lhs = lhs.value;
  r.rhs = rhs.value;
  r.rel_err = relative_error(lhs.value, rhs.value);
  r.tolerance = tol;
  r.pass = r.rel_err <= tol;
  r.verdict = r.pass ? Verdict::Pass : Verdict::Fail;
  r.terms_used = lhs.terms_used + rhs.terms_used;
  if (!r.pass) {
    std::ostringstream os;
    os.precision(17);
    os << "relative error " << r.rel_err << " exceeds " << tol << "; lhs terms " << lhs.terms_used
       << ", rhs terms " << rhs.terms_used;
    r.diagnostics = os.str();
  }
  return r;
}

CheckResult compare_absolute(const SeriesResult& lhs, const SeriesResult& rhs, double tol) {
  CheckResult r;
  r.lhs = lhs.value;
  r.rhs = rhs.value;
  const double scale = rhs.value != Scalar(0.0) ? 1.0 : 1.0 + lhs.peak_partial;
  r.rel_err = std::abs(lhs.value - rhs.value) / scale;
  r.tolerance = tol;
  r.pass = r.rel_err <= tol;
  r.verdict = r.pass ? Verdict::Pass : Verdict::Fail;
  r.terms_used = lhs.terms_used + rhs.terms_used;
  std::ostringstream os;
  os.precision(17);
  if (rhs.value != Scalar(0.0)) {
    os << "absolute criterion: |lhs - rhs| = " << r.rel_err << " vs " << tol;
  } else {
    os << "absolute criterion: |lhs| = " << std::abs(lhs.value) << " vs " << tol << " * (1 + max|S_k|), max|S_k| = "
       << lhs.peak_partial;
  }
  r.diagnostics = os.str();
  return r;
}

void require_domain(const IdentityEntry& entry, const Params& params) {
  for (const auto& c : entry.constraints) {
    if (!c.holds(params, 1.0)) throw DomainError(entry.id + ": constraint violated: " + c.description);
  }
}

Scalar closed_form(const std::string& id, const Params& params, const EvalOptions& opts) {
  const IdentityEntry& entry = registry().at(id);
  if (!entry.closed_form) throw DomainError(id + " has no closed-form side");
  require_domain(entry, params);
  return entry.rhs(params, opts).value;
}

SeriesResult series_side(const std::string& id, const Params& params, const EvalOptions& opts) {
  const IdentityEntry& entry = registry().at(id);
  require_domain(entry, params);
  return entry.lhs(params, opts);
}

CheckResult check_identity(const std::string& id, const Params& params, const EvalOptions& opts, double tol) {
  const IdentityEntry& entry = registry().at(id);
  require_domain(entry, params);
  try {
    const SeriesResult lhs = entry.lhs(params, opts);
    const SeriesResult rhs = entry.rhs(params, opts);
    if (entry.absolute_check) return compare_absolute(lhs, rhs, std::min(tol, kAbsoluteCriterion));
    return compare_sides(lhs, rhs, tol);
  } catch (const PoleError& e) {
    CheckResult r;
    r.verdict = Verdict::Skip;
    r.tolerance = tol;
    r.diagnostics = std::string("skipped: ") + e.what();
    return r;
  }
}

FamilySides family_sides(const Scalar& a, const Scalar& b, const Scalar& d, const std::vector<Scalar>& e,
                         const std::vector<std::int64_t>& n, const QBase& q, const EvalOptions& opts) {
  if (e.empty() || e.size() != n.size()) throw DomainError("family needs k = |e| = |n| >= 1");
  const Scalar Q = q.value();
  std::int64_t total = 0;
  for (auto nj : n) {
    if (nj < 0) throw DomainError("family exponents n_j must be nonnegative");
    total += nj;
  }
  const Scalar z = q.pow(1 - total) / d;
  if (!(std::abs(z) < 1.0)) throw DomainError("family needs |q^{1-sum n}/d| < 1");

  // pairs kept adjacent, as in the one- and two-pair sums
  std::vector<Scalar> tail{b, a / b, d};
  for (std::size_t j = 0; j < e.size(); ++j) {
    tail.push_back(e[j]);
    tail.push_back(a * q.pow(n[j] + 1) / e[j]);
  }

  const ProductOptions po = opts.products();
  Scalar rhs = product_ratio({Q, a * Q, a * Q / (b * d), b * Q / d}, {b * Q, a * Q / b, a * Q / d, Q / d}, q, po);
  for (std::size_t j = 0; j < e.size(); ++j) {
    rhs *= finite_ratio({a * Q / (b * e[j]), b * Q / e[j]}, {a * Q / e[j], Q / e[j]}, q, n[j], opts.policy);
  }
  SeriesResult closed;
  closed.value = rhs;
  closed.terminated = true;
  closed.abs_sum = closed.peak_partial = std::abs(rhs);
  return {eval_vwp(VwpSpec::make(a, std::move(tail), q, z), opts), closed};
}

CheckResult check_family(const Scalar& a, const Scalar& b, const Scalar& d, const std::vector<Scalar>& e,
                         const std::vector<std::int64_t>& n, const QBase& q, const EvalOptions& opts, double tol) {
  try {
    const FamilySides sides = family_sides(a, b, d, e, n, q, opts);
    return compare_sides(sides.lhs, sides.rhs, tol);
  } catch (const PoleError& err) {
    CheckResult r;
    r.verdict = Verdict::Skip;
    r.tolerance = tol;
    r.diagnostics = std::string("skipped: ") + err.what();
    return r;
  }
}

FamilySides watson_sides(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d, const Scalar& e,
                         const Scalar& f, const QBase& q, const EvalOptions& opts) {
  const Scalar Q = q.value();
  const PhiSpec four_phi_three{{b, c, d, a * Q / (e * f)}, {a * Q / e, a * Q / f, b * c * d / a}, q, Q};
  if (!detect_termination(four_phi_three)) {
    throw DomainError("the 4phi3 side must terminate: one of b, c, d, aq/ef must be q^{-n}");
  }
  const SeriesResult lhs = eval_vwp(VwpSpec::make(a, {b, c, d, e, f}, q, a * a * Q * Q / (b * c * d * e * f)), opts);
  SeriesResult rhs = eval_phi(four_phi_three, opts);
  const Scalar prefactor = product_ratio({a * Q, a * Q / (b * c), a * Q / (b * d), a * Q / (c * d)},
                                         {a * Q / b, a * Q / c, a * Q / d, a * Q / (b * c * d)}, q, opts.products());
  rhs.value *= prefactor;
  rhs.abs_sum *= std::abs(prefactor);
  rhs.peak_partial *= std::abs(prefactor);
  return {lhs, rhs};
}

}  // namespace qseries
