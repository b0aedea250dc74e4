#include "qseries/expansions.hpp"

#include <algorithm>

namespace qseries {

Scalar WeightSequence::at(std::int64_t k) const {
  if (k < first || k > last()) return Scalar(0.0);
  return values[static_cast<std::size_t>(k - first)];
}

Scalar WeightSequence::total() const {
  Scalar s(0.0);
  for (const auto& v : values) s += v;
  return s;
}

namespace {

// u_k = (num;q)_k / (den;q)_k q^k for k = 0..n.
WeightSequence saalschutz_weights(const std::vector<Scalar>& num, const std::vector<Scalar>& den, std::int64_t n,
                                  const QBase& q) {
  WeightSequence u;
  for (std::int64_t k = 0; k <= n; ++k) u.values.push_back(finite_ratio(num, den, q, k) * q.pow(k));
  return u;
}

SeriesResult finite_result(const Scalar& value, double abs_sum, std::int64_t terms) {
  SeriesResult r;
  r.value = value;
  r.abs_sum = abs_sum;
  r.peak_partial = std::abs(value);
  r.terms_used = terms;
  r.terminated = true;
  return r;
}

ExpansionSides delta_expansion(const WeightSequence& u, const Params& p, const EvalOptions& opts) {
  if (!u.empty() && u.first < 0) throw DomainError("E1 weights must be supported on k >= 0");
  const QBase q = p.base();
  const Scalar Q = q.value(), a = p.get("a"), s = std::sqrt(a);
  Scalar rhs(0.0);
  double abs_sum = 0.0;
  std::int64_t terms = 0;
  for (std::int64_t j = 0; !u.empty() && j <= u.last(); ++j) {
    Scalar inner(0.0);
    for (std::int64_t k = 0; j + k <= u.last(); ++k) {
      const Scalar w = u.at(j + k);
      if (w == Scalar(0.0)) continue;
      inner += finite_ratio({q.pow(j + 1), a * q.pow(j + 1)}, {Q, a * q.pow(2 * j + 1)}, q, k, opts.policy) * w;
      ++terms;
    }
    const Scalar outer = finite_ratio({a, Q * s, -Q * s}, {s, -s}, q, j, opts.policy) /
                         poch_finite(a * q.pow(j + 1), q, j, opts.policy) * ((j % 2 == 0) ? 1.0 : -1.0) *
                         q.pow(binom2(j));
    rhs += outer * inner;
    abs_sum += std::abs(outer * inner);
  }
  return {finite_result(u.at(0), std::abs(u.at(0)), 1), finite_result(rhs, abs_sum, terms)};
}

ExpansionSides six_psi_six_expansion(const WeightSequence& u, const Params& p, const EvalOptions& opts) {
  const QBase q = p.base();
  const Scalar Q = q.value();
  const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c"), d = p.get("d"), e = p.get("e");
  const Scalar s = std::sqrt(a), aq = a * Q;
  const Scalar A = product_ratio(
      {aq, aq / (b * c), aq / (b * d), aq / (b * e), aq / (c * d), aq / (c * e), aq / (d * e), Q, Q / a},
      {aq / b, aq / c, aq / d, aq / e, Q / b, Q / c, Q / d, Q / e, a * aq / (b * c * d * e)}, q, opts.products());
  const Scalar lambda = b * c * d * e / (a * a);
  const std::vector<Scalar> den{b * e / a, c * e / a, d * e / a};
  const bool e_is_a = e == a;
  TermWeight inner = [&](std::int64_t j) {
    Scalar sum(0.0);
    const Scalar shifted = e_is_a ? q.pow(-j) : e * q.pow(-j) / a;
    for (std::int64_t k = u.first; !u.empty() && k <= u.last(); ++k) {
      const Scalar w = u.at(k);
      if (w == Scalar(0.0)) continue;
      sum += finite_ratio({lambda, e * q.pow(j), shifted}, den, q, k, opts.policy) * w;
    }
    return sum;
  };
  const PsiSpec spec{{Q * s, -Q * s, b, c, d, e}, {s, -s, aq / b, aq / c, aq / d, aq / e}, q, a * aq / (b * c * d * e)};
  const Scalar total = u.total();
  return {finite_result(A * total, std::abs(A) * std::abs(total), static_cast<std::int64_t>(u.values.size())),
          eval_psi_weighted(spec, inner, opts)};
}

ExpansionSides eight_w_seven_expansion(const WeightSequence& u, const Params& p, const EvalOptions& opts) {
  if (!u.empty() && u.first < 0) throw DomainError("E3 weights must be supported on k >= 0");
  const QBase q = p.base();
  const Scalar Q = q.value();
  const Scalar a = p.get("a"), b = p.get("b"), d = p.get("d"), e = p.get("e"), aq = a * Q;
  const std::int64_t n = p.integer("n");
  const Scalar B = product_ratio({Q, aq, aq / (b * d), b * Q / d}, {b * Q, aq / b, aq / d, Q / d}, q, opts.products()) *
                   finite_ratio({aq / (b * e), b * Q / e}, {aq / e, Q / e}, q, n, opts.policy);
  TermWeight inner = [&](std::int64_t j) {
    Scalar sum(0.0);
    for (std::int64_t k = 0; !u.empty() && k <= std::min(j, u.last()); ++k) {
      const Scalar w = u.at(k);
      if (w == Scalar(0.0)) continue;
      sum += finite_ratio({a * q.pow(j), q.pow(-j)}, {b, a / b}, q, k, opts.policy) * w;
    }
    return sum;
  };
  const PhiSpec spec = expand_vwp(VwpSpec::make(a, {b, a / b, d, e, a * q.pow(n + 1) / e}, q, q.pow(1 - n) / d));
  const Scalar total = u.total();
  return {finite_result(B * total, std::abs(B) * std::abs(total), static_cast<std::int64_t>(u.values.size())),
          eval_phi_weighted(spec, inner, opts)};
}

}  // namespace

WeightSequence six_w_five_weights(const Scalar& a, const Scalar& b, const Scalar& c, std::int64_t n,
                                  const QBase& q) {
  if (n < 0) throw DomainError("n must be nonnegative");
  const Scalar Q = q.value();
  return saalschutz_weights({b, c, q.pow(-n)}, {Q, a * Q, b * c * q.pow(-n) / a}, n, q);
}

WeightSequence watson_weights(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d, const Scalar& e,
                              const Scalar& f, const QBase& q) {
  const Scalar Q = q.value();
  const PhiSpec spec{{b, c, d, a * Q / (e * f)}, {a * Q / e, a * Q / f, b * c * d / a}, q, Q};
  const auto n = detect_termination(spec);
  if (!n) throw DomainError("one of b, c, d, aq/ef must be of the form q^{-n}");
  return saalschutz_weights(spec.numerators, {Q, a * Q / e, a * Q / f, b * c * d / a}, *n, q);
}

WeightSequence balanced_weights(const Scalar& a, const Scalar& b, const Scalar& f, std::int64_t m,
                                const QBase& q) {
  if (m < 0) throw DomainError("m must be nonnegative");
  const Scalar Q = q.value();
  return saalschutz_weights({b, a / b, q.pow(-m)}, {Q, a * Q / f, f * q.pow(-m)}, m, q);
}

ExpansionSides expansion_sides(const std::string& id, const WeightSequence& u, const Params& params,
                               const EvalOptions& opts) {
  if (id == "E1") return delta_expansion(u, params, opts);
  if (id == "E2") return six_psi_six_expansion(u, params, opts);
  if (id == "E3") return eight_w_seven_expansion(u, params, opts);
  throw UnknownIdentity(id);
}

CheckResult check_expansion(const std::string& id, const WeightSequence& u, const Params& params, double tol,
                            const EvalOptions& opts) {
  try {
    const ExpansionSides s = expansion_sides(id, u, params, opts);
    return compare_sides(s.lhs, s.rhs, tol);
  } catch (const PoleError& e) {
    CheckResult r;
    r.verdict = Verdict::Skip;
    r.tolerance = tol;
    r.diagnostics = std::string("skipped: ") + e.what();
    return r;
  }
}

WeightSequence weights_from_params(const Params& params) {
  WeightSequence u;
  const std::int64_t N = params.integer("N");
  if (N < 0) throw DomainError("support size N must be nonnegative");
  for (std::int64_t k = 0; k < N; ++k) u.values.push_back(params.get("u" + std::to_string(k)));
  return u;
}

}  // namespace qseries
