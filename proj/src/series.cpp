#include "qseries/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qseries {

namespace {

constexpr double kBoundaryWidth = 1e-6;

bool near_zero_scaled(const Scalar& w, const Scalar& c, double distance) {
  return std::abs(w - c) < distance * (std::abs(w) + std::abs(c));
}

// One-step term ratios of sum_k prod(n;q)_k / prod(d;q)_k [(-1)^k q^{k(k-1)/2}]^e z^k.
// A unilateral series puts q among the denominators. When the raw factors
// 1 - c q^{+-j} would grow without bound they are rescaled by q^{-+j}; the
// powers cancel because e = #denominators - #numerators.
class Stepper {
 public:
  Stepper(std::vector<Scalar> nums, std::vector<Scalar> dens, const QBase& q, const Scalar& z, int e,
          const FactorPolicy& policy)
      : nums_(std::move(nums)), dens_(std::move(dens)), q_(q), z_(z), e_(e), policy_(policy) {}

  // t_{j+1} / t_j for j >= 0.
  Scalar forward(std::int64_t j) const {
    if (q_.inside()) {
      const Scalar x = q_.pow(j);
      return factors(nums_, dens_, x) * ipow(-x, e_) * z_;
    }
    const Scalar w = q_.pow(-j);
    return scaled(nums_, dens_, w) * sign() * z_;
  }

  // t_{-j} / t_{-(j-1)} for j >= 1.
  Scalar backward(std::int64_t j) const {
    if (q_.inside()) {
      const Scalar w = q_.pow(j);
      return scaled(dens_, nums_, w) * sign() / z_;
    }
    const Scalar x = q_.pow(-j);
    return factors(dens_, nums_, x) * ipow(-q_.pow(j), e_) / z_;
  }

 private:
  double sign() const { return (e_ % 2 == 0) ? 1.0 : -1.0; }

  // prod(1 - top x) / prod(1 - bottom x)
  Scalar factors(const std::vector<Scalar>& top, const std::vector<Scalar>& bottom, const Scalar& x) const {
    Scalar r(1.0);
    for (const auto& c : top) {
      const Scalar cx = c * x;
      if (policy_.guard_numerators && near_zero_factor(cx, policy_.pole_distance)) {
        throw PoleError("series numerator factor near zero");
      }
      r *= Scalar(1.0) - cx;
    }
    for (const auto& c : bottom) {
      const Scalar cx = c * x;
      if (near_zero_factor(cx, policy_.pole_distance)) throw PoleError("series denominator factor vanishes");
      r /= Scalar(1.0) - cx;
    }
    return r;
  }

  // prod(w - top) / prod(w - bottom)
  Scalar scaled(const std::vector<Scalar>& top, const std::vector<Scalar>& bottom, const Scalar& w) const {
    Scalar r(1.0);
    for (const auto& c : top) {
      if (policy_.guard_numerators && near_zero_scaled(w, c, policy_.pole_distance)) {
        throw PoleError("series numerator factor near zero");
      }
      r *= w - c;
    }
    for (const auto& c : bottom) {
      if (near_zero_scaled(w, c, policy_.pole_distance)) throw PoleError("series denominator factor vanishes");
      r /= w - c;
    }
    return r;
  }

  std::vector<Scalar> nums_;
  std::vector<Scalar> dens_;
  QBase q_;
  Scalar z_;
  int e_;
  FactorPolicy policy_;
};

// Neumaier compensated sum, kept separately for the real and imaginary parts.
class Accumulator {
 public:
  void add(const Scalar& x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  void merge(const Accumulator& other) {
    re_.add(other.re_.s);
    re_.add(other.re_.c);
    im_.add(other.im_.s);
    im_.add(other.im_.c);
  }
  Scalar value() const { return {re_.value(), im_.value()}; }

 private:
  struct Part {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
      const double t = s + x;
      c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
      s = t;
    }
    double value() const { return s + c; }
  };
  Part re_, im_;
};

struct SideSum {
  Accumulator sum;
  std::int64_t terms = 0;
  double abs_sum = 0.0;
  double peak = 0.0;
  double tail = 0.0;
};

// Sums one side of a series. The forward side includes t_0 = 1; the backward
// side starts at t_{-1}. `last` is the final nonzero index on that side.
// Terms count as small against tol * |offset + sum|, floored at rounding level
// of the absolute sum so that sums which cancel to zero still stop.
class SideRun {
 public:
  SideRun(const Stepper& stepper, bool forward, std::optional<std::int64_t> last, const TermWeight& weight,
          const EvalOptions& opts)
      : stepper_(stepper), forward_(forward), last_(last), weight_(weight), opts_(opts), j_(forward ? 0 : 1) {
    if (forward_) add(0, t_);
  }

  // Runs until the side ends or the stopping rule fires. A stopped side may be
  // resumed with a smaller reference, e.g. once the other side is known.
  void run(const Scalar& offset, std::int64_t budget_used) {
    if (ended_) return;
    if (stopped_ && tolerance(offset) >= stop_threshold_) return;
    stopped_ = false;
    int small_run = 0;
    for (;; ++j_) {
      const std::int64_t index = forward_ ? j_ + 1 : -j_;
      if (last_) {
        const std::int64_t steps_left = forward_ ? *last_ - j_ : *last_ - j_ + 1;
        if (steps_left <= 0) break;
      }
      if (side_.terms + budget_used >= opts_.max_terms) {
        throw BudgetError("series did not converge within max_terms");
      }
      prev_t_ = t_;
      t_ *= forward_ ? stepper_.forward(j_) : stepper_.backward(j_);
      const Scalar term = add(index, t_);
      if (last_) continue;
      if (t_ == Scalar(0.0)) break;
      const double threshold = tolerance(offset);
      if (std::abs(term) <= threshold) {
        if (++small_run >= opts_.consecutive_small) {
          const double rho = prev_t_ == Scalar(0.0) ? 1.0 : std::abs(t_) / std::abs(prev_t_);
          side_.tail = rho < 1.0 ? std::abs(term) * rho / (1.0 - rho) : std::abs(term);
          stop_threshold_ = threshold;
          stopped_ = true;
          ++j_;
          return;
        }
      } else {
        small_run = 0;
      }
    }
    ended_ = true;
    side_.tail = 0.0;
  }

  const SideSum& side() const { return side_; }

 private:
  double tolerance(const Scalar& offset) const {
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    return opts_.tol * std::max(std::abs(offset + side_.sum.value()), kEps * side_.abs_sum);
  }

  Scalar add(std::int64_t index, const Scalar& term_value) {
    const Scalar term = weight_ ? term_value * weight_(index) : term_value;
    if (!is_finite(term)) throw OverflowError("series term is not finite at index " + std::to_string(index));
    side_.sum.add(term);
    side_.abs_sum += std::abs(term);
    side_.peak = std::max(side_.peak, std::abs(side_.sum.value()));
    ++side_.terms;
    return term;
  }

  const Stepper& stepper_;
  bool forward_;
  std::optional<std::int64_t> last_;
  const TermWeight& weight_;
  const EvalOptions& opts_;
  SideSum side_;
  Scalar t_{1.0};
  Scalar prev_t_{0.0};
  std::int64_t j_;
  bool ended_ = false;
  bool stopped_ = false;
  double stop_threshold_ = 0.0;
};

Stepper phi_stepper(const PhiSpec& spec, const FactorPolicy& policy) {
  std::vector<Scalar> dens;
  dens.reserve(spec.denominators.size() + 1);
  dens.push_back(spec.q.value());
  dens.insert(dens.end(), spec.denominators.begin(), spec.denominators.end());
  const int e = 1 + static_cast<int>(spec.denominators.size()) - static_cast<int>(spec.numerators.size());
  return Stepper(spec.numerators, std::move(dens), spec.q, spec.z, e, policy);
}

Stepper psi_stepper(const PsiSpec& spec, const FactorPolicy& policy) {
  const int e = static_cast<int>(spec.denominators.size()) - static_cast<int>(spec.numerators.size());
  return Stepper(spec.numerators, spec.denominators, spec.q, spec.z, e, policy);
}

std::optional<std::int64_t> match_power(const std::vector<Scalar>& params, const QBase& q, std::int64_t first,
                                        std::int64_t sign, double tol, std::int64_t max_n) {
  std::optional<std::int64_t> best;
  for (const auto& a : params) {
    if (a == Scalar(0.0)) continue;
    const double mag = std::abs(a);
    for (std::int64_t n = first; n <= max_n; ++n) {
      if (best && n >= *best) break;
      const Scalar target = q.pow(sign * n);
      const double tmag = std::abs(target);
      if (rel_distance(a, target) <= tol) {
        best = n;
        break;
      }
      const bool growing = (sign < 0) == q.inside();
      if (growing ? tmag > 2.0 * mag : tmag < 0.5 * mag) break;
    }
  }
  return best;
}

int count_zero(const std::vector<Scalar>& v) {
  return static_cast<int>(std::count(v.begin(), v.end(), Scalar(0.0)));
}

double nonzero_abs_product(const std::vector<Scalar>& v) {
  double p = 1.0;
  for (const auto& x : v) {
    if (x != Scalar(0.0)) p *= std::abs(x);
  }
  return p;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

// lim |t_{k+1}/t_k| as k -> +inf; `dens` includes q for unilateral series.
double forward_limit(const std::vector<Scalar>& nums, const std::vector<Scalar>& dens, const QBase& q,
                     const Scalar& z, int e) {
  if (z == Scalar(0.0)) return 0.0;
  if (q.inside()) {
    if (e > 0) return 0.0;
    if (e < 0) return kInf;
    return std::abs(z);
  }
  const int zn = count_zero(nums), zd = count_zero(dens);
  if (zn > zd) return 0.0;
  if (zn < zd) return kInf;
  return std::abs(z) * nonzero_abs_product(nums) / nonzero_abs_product(dens);
}

// lim |t_{-k-1}/t_{-k}| as k -> +inf.
double backward_limit(const std::vector<Scalar>& nums, const std::vector<Scalar>& dens, const QBase& q,
                      const Scalar& z, int e) {
  if (q.inside()) {
    const int zn = count_zero(nums), zd = count_zero(dens);
    if (zd > zn) return 0.0;
    if (zd < zn) return kInf;
    return nonzero_abs_product(dens) / nonzero_abs_product(nums) / std::abs(z);
  }
  if (e > 0) return kInf;
  if (e < 0) return 0.0;
  return 1.0 / std::abs(z);
}

ConvergenceKind classify(double limit) {
  if (std::abs(limit - 1.0) <= kBoundaryWidth) return ConvergenceKind::Boundary;
  return limit < 1.0 ? ConvergenceKind::ConvergentAbsolute : ConvergenceKind::Divergent;
}

void require_convergent(const ConvergenceVerdict& v) {
  if (v.kind == ConvergenceKind::Divergent) throw DivergenceError("series diverges");
  if (v.kind == ConvergenceKind::Boundary) throw DivergenceError("series lies on its convergence boundary");
}

SeriesResult finish(const SideSum& pos, const SideSum* neg, bool terminated) {
  SeriesResult r;
  Accumulator total = pos.sum;
  if (neg) total.merge(neg->sum);
  r.value = total.value();
  r.terms_used = pos.terms + (neg ? neg->terms : 0);
  r.terminated = terminated;
  r.tail_bound = terminated ? 0.0 : pos.tail + (neg ? neg->tail : 0.0);
  r.abs_sum = pos.abs_sum + (neg ? neg->abs_sum : 0.0);
  r.peak_partial = std::max(pos.peak, neg ? std::max(neg->peak, std::abs(r.value)) : 0.0);
  return r;
}

}  // namespace

VwpSpec VwpSpec::make(const Scalar& a, std::vector<Scalar> tail, const QBase& q, const Scalar& z) {
  return VwpSpec{a, std::move(tail), q, z, std::sqrt(a)};
}

void EvalOptions::validate() const {
  if (!(tol > 0.0)) throw DomainError("EvalOptions.tol must be positive");
  if (max_terms < 1) throw DomainError("EvalOptions.max_terms must be positive");
  if (consecutive_small < 2) throw DomainError("EvalOptions.consecutive_small must be at least 2");
}

PhiSpec expand_vwp(const VwpSpec& spec) {
  if (spec.tail.empty()) throw DomainError("very-well-poised series needs at least one tail parameter");
  if (rel_distance(spec.sqrt_a * spec.sqrt_a, spec.a) > 1e-14) {
    throw DomainError("sqrt_a is not a square root of a");
  }
  const Scalar qv = spec.q.value();
  PhiSpec phi{{spec.a, qv * spec.sqrt_a, -qv * spec.sqrt_a}, {spec.sqrt_a, -spec.sqrt_a}, spec.q, spec.z};
  for (std::size_t i = 0; i < spec.tail.size(); ++i) {
    const Scalar& b = spec.tail[i];
    if (b == Scalar(0.0)) throw PoleError("tail parameter is zero", static_cast<int>(i));
    phi.numerators.push_back(b);
    phi.denominators.push_back(qv * spec.a / b);
  }
  return phi;
}

std::optional<std::int64_t> detect_termination(const PhiSpec& spec, double tol, std::int64_t max_n) {
  return match_power(spec.numerators, spec.q, 0, -1, tol, std::max<std::int64_t>(200, max_n));
}

std::optional<std::int64_t> detect_termination(const PsiSpec& spec, double tol, std::int64_t max_n) {
  return match_power(spec.numerators, spec.q, 0, -1, tol, std::max<std::int64_t>(200, max_n));
}

std::optional<std::int64_t> negative_cutoff(const PsiSpec& spec, double tol, std::int64_t max_n) {
  return match_power(spec.denominators, spec.q, 1, 1, tol, std::max<std::int64_t>(200, max_n));
}

ConvergenceVerdict check_convergence(const PhiSpec& spec) {
  if (auto n = detect_termination(spec)) return {ConvergenceKind::Terminating, *n, 0.0, 0.0};
  std::vector<Scalar> dens{spec.q.value()};
  dens.insert(dens.end(), spec.denominators.begin(), spec.denominators.end());
  const int e = 1 + static_cast<int>(spec.denominators.size()) - static_cast<int>(spec.numerators.size());
  const double limit = forward_limit(spec.numerators, dens, spec.q, spec.z, e);
  return {classify(limit), 0, limit, 0.0};
}

ConvergenceVerdict check_convergence(const PsiSpec& spec) {
  const int e = static_cast<int>(spec.denominators.size()) - static_cast<int>(spec.numerators.size());
  const auto pos_n = detect_termination(spec);
  const auto cut = negative_cutoff(spec);
  ConvergenceVerdict v{ConvergenceKind::ConvergentAbsolute, pos_n.value_or(0), 0.0, 0.0};
  if (spec.z == Scalar(0.0)) {
    v.kind = ConvergenceKind::Divergent;
    return v;
  }
  ConvergenceKind pos = ConvergenceKind::Terminating, neg = ConvergenceKind::Terminating;
  if (!pos_n) {
    v.positive_ratio = forward_limit(spec.numerators, spec.denominators, spec.q, spec.z, e);
    pos = classify(v.positive_ratio);
  }
  if (!cut) {
    v.negative_ratio = backward_limit(spec.numerators, spec.denominators, spec.q, spec.z, e);
    neg = classify(v.negative_ratio);
  }
  if (pos == ConvergenceKind::Divergent || neg == ConvergenceKind::Divergent) {
    v.kind = ConvergenceKind::Divergent;
  } else if (pos == ConvergenceKind::Boundary || neg == ConvergenceKind::Boundary) {
    v.kind = ConvergenceKind::Boundary;
  } else if (pos == ConvergenceKind::Terminating && neg == ConvergenceKind::Terminating) {
    v.kind = ConvergenceKind::Terminating;
  }
  return v;
}

SeriesResult eval_phi_weighted(const PhiSpec& spec, const TermWeight& weight, const EvalOptions& opts) {
  opts.validate();
  const auto n = detect_termination(spec);
  if (!n) require_convergent(check_convergence(spec));
  const Stepper stepper = phi_stepper(spec, opts.policy);
  SideRun pos(stepper, true, n, weight, opts);
  pos.run(Scalar(0.0), 0);
  return finish(pos.side(), nullptr, n.has_value());
}

SeriesResult eval_phi(const PhiSpec& spec, const EvalOptions& opts) { return eval_phi_weighted(spec, {}, opts); }

SeriesResult eval_psi_weighted(const PsiSpec& spec, const TermWeight& weight, const EvalOptions& opts) {
  opts.validate();
  if (spec.z == Scalar(0.0)) throw DomainError("bilateral series needs z != 0");
  require_convergent(check_convergence(spec));
  const auto pos_n = detect_termination(spec);
  const auto cut = negative_cutoff(spec);
  const Stepper stepper = psi_stepper(spec, opts.policy);
  std::optional<std::int64_t> neg_last;
  if (cut) neg_last = *cut - 1;
  SideRun pos(stepper, true, pos_n, weight, opts);
  SideRun neg(stepper, false, neg_last, weight, opts);
  pos.run(Scalar(0.0), 0);
  neg.run(pos.side().sum.value(), pos.side().terms);
  // the sides can cancel; both are then carried on to the scale of the total
  for (int pass = 0; pass < 4; ++pass) {
    const std::int64_t before = pos.side().terms + neg.side().terms;
    pos.run(neg.side().sum.value(), neg.side().terms);
    neg.run(pos.side().sum.value(), pos.side().terms);
    if (pos.side().terms + neg.side().terms == before) break;
  }
  return finish(pos.side(), &neg.side(), pos_n.has_value() && cut.has_value());
}

SeriesResult eval_psi(const PsiSpec& spec, const EvalOptions& opts) { return eval_psi_weighted(spec, {}, opts); }

SeriesResult eval_vwp(const VwpSpec& spec, const EvalOptions& opts) { return eval_phi(expand_vwp(spec), opts); }

std::vector<Scalar> partial_sums(const PhiSpec& spec, std::int64_t M) {
  if (M < 0) throw DomainError("partial_sums needs M >= 0");
  const auto n = detect_termination(spec);
  const Stepper stepper = phi_stepper(spec, {});
  std::vector<Scalar> sums;
  sums.reserve(static_cast<std::size_t>(M) + 1);
  Scalar t(1.0);
  Accumulator s;
  s.add(t);
  sums.push_back(s.value());
  for (std::int64_t j = 0; j < M; ++j) {
    if (!n || j < *n) {
      t *= stepper.forward(j);
      if (!is_finite(t)) throw OverflowError("series term is not finite");
      s.add(t);
    }
    sums.push_back(s.value());
  }
  return sums;
}

std::vector<Scalar> partial_sums(const PsiSpec& spec, std::int64_t M) {
  if (M < 0) throw DomainError("partial_sums needs M >= 0");
  if (spec.z == Scalar(0.0)) throw DomainError("bilateral series needs z != 0");
  const auto pos_n = detect_termination(spec);
  const auto cut = negative_cutoff(spec);
  const Stepper stepper = psi_stepper(spec, {});
  std::vector<Scalar> sums;
  sums.reserve(static_cast<std::size_t>(M) + 1);
  Scalar tp(1.0), tn(1.0);
  Accumulator s;
  s.add(tp);
  sums.push_back(s.value());
  for (std::int64_t m = 1; m <= M; ++m) {
    if (!pos_n || m <= *pos_n) {
      tp *= stepper.forward(m - 1);
      s.add(tp);
    }
    if (!cut || m < *cut) {
      tn *= stepper.backward(m);
      s.add(tn);
    }
    if (!is_finite(s.value())) throw OverflowError("series term is not finite");
    sums.push_back(s.value());
  }
  return sums;
}

}  // namespace qseries
