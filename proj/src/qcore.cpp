#include "qseries/qcore.hpp"

#include <algorithm>
#include <string>

namespace qseries {

namespace {

std::string str(const Scalar& x) {
  return "(" + std::to_string(x.real()) + "," + std::to_string(x.imag()) + ")";
}

Scalar require_finite(const Scalar& x, const char* where) {
  if (!is_finite(x)) throw OverflowError(std::string(where) + ": result is not finite");
  return x;
}

// prod_{j<k} (1 - a q^j), k >= 0. `denominator` turns a near-zero factor into a pole.
Scalar forward_product(const Scalar& a, const QBase& q, std::int64_t k, const FactorPolicy& policy,
                       bool denominator) {
  Scalar result(1.0);
  if (a == Scalar(0.0)) return result;
  const bool check = denominator || policy.guard_numerators;
  for (std::int64_t j = 0; j < k; ++j) {
    const Scalar x = a * q.pow(j);
    if (check && near_zero_factor(x, policy.pole_distance)) {
      throw PoleError("factor 1 - a q^" + std::to_string(j) + " vanishes for a = " + str(a));
    }
    result *= Scalar(1.0) - x;
  }
  return result;
}

Scalar infinite_product(const Scalar& a, const QBase& q, const ProductOptions& opts, bool denominator) {
  if (!q.inside()) throw DomainError("infinite q-product requires |q| < 1");
  if (a == Scalar(0.0)) return Scalar(1.0);
  const bool check = denominator || opts.policy.guard_numerators;
  Scalar result(1.0);
  for (std::int64_t j = 0;; ++j) {
    if (j >= opts.max_factors) throw BudgetError("infinite q-product did not converge within max_factors");
    const Scalar x = a * q.pow(j);
    if (check && near_zero_factor(x, opts.policy.pole_distance)) {
      throw PoleError("factor 1 - a q^" + std::to_string(j) + " vanishes for a = " + str(a));
    }
    const Scalar factor = Scalar(1.0) - x;
    if (factor == Scalar(0.0)) return Scalar(0.0);
    result *= factor;
    if (std::abs(x) < opts.tol) {
      const Scalar qv = q.value();
      result *= std::exp(-x * qv / (Scalar(1.0) - qv));
      break;
    }
  }
  return require_finite(result, "poch_infinite");
}

}  // namespace

QBase::QBase(Scalar q) : q_(q) {
  if (!is_finite(q)) throw DomainError("base q must be finite");
  if (q == Scalar(0.0)) throw DomainError("base q must be nonzero");
  const double r = std::abs(q);
  if (r == 1.0) throw DomainError("base q must satisfy |q| != 1");
  regime_ = r < 1.0 ? Regime::InsideUnitDisk : Regime::OutsideUnitDisk;
}

Scalar poch_finite(const Scalar& a, const QBase& q, std::int64_t k, const FactorPolicy& policy) {
  if (k >= 0) return require_finite(forward_product(a, q, k, policy, false), "poch_finite");
  // (a;q)_{-m} = 1 / prod_{j=1}^{m} (1 - a q^{-j})
  const Scalar den = forward_product(a * q.pow(k), q, -k, policy, true);
  return require_finite(Scalar(1.0) / den, "poch_finite");
}

Scalar poch_infinite(const Scalar& a, const QBase& q, const ProductOptions& opts) {
  return infinite_product(a, q, opts, false);
}

Scalar poch_infinite_denominator(const Scalar& a, const QBase& q, const ProductOptions& opts) {
  return infinite_product(a, q, opts, true);
}

Scalar poch_complex_order(const Scalar& a, const QBase& q, const Scalar& alpha, const ProductOptions& opts) {
  if (!q.inside()) throw DomainError("complex-order q-shifted factorial requires |q| < 1");
  const Scalar q_alpha = std::exp(alpha * std::log(q.value()));
  const Scalar den = poch_infinite_denominator(a * q_alpha, q, opts);
  if (den == Scalar(0.0)) throw PoleError("(a q^alpha;q)_inf vanishes");
  return require_finite(poch_infinite(a, q, opts) / den, "poch_complex_order");
}

Scalar poch_multi(const std::vector<Scalar>& args, const QBase& q, std::int64_t k, const FactorPolicy& policy) {
  Scalar result(1.0);
  for (std::size_t i = 0; i < args.size(); ++i) {
    try {
      result *= poch_finite(args[i], q, k, policy);
    } catch (const PoleError& e) {
      throw PoleError(std::string(e.what()) + " (argument " + std::to_string(i) + ")", static_cast<int>(i));
    }
  }
  return require_finite(result, "poch_multi");
}

Scalar q_binom(std::int64_t n, std::int64_t k, const QBase& q) {
  if (k < 0 || k > n) throw DomainError("q_binom requires 0 <= k <= n");
  const Scalar qv = q.value();
  const Scalar num = poch_finite(qv, q, n);
  const Scalar den = poch_finite(qv, q, k) * poch_finite(qv, q, n - k);
  return require_finite(num / den, "q_binom");
}

Scalar invert_base(const Scalar& a, const QBase& q, std::int64_t k) {
  if (k < 0) throw DomainError("invert_base requires k >= 0");
  if (k == 0) return Scalar(1.0);
  if (a == Scalar(0.0)) throw DomainError("invert_base requires a != 0 when k > 0");
  const Scalar inverted = poch_finite(Scalar(1.0) / a, q.inverse(), k);
  return require_finite(inverted * ipow(-a, k) * q.pow(binom2(k)), "invert_base");
}

Scalar product_ratio(const std::vector<Scalar>& num, const std::vector<Scalar>& den, const QBase& q,
                     const ProductOptions& opts) {
  Scalar result(1.0);
  const std::size_t n = std::max(num.size(), den.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i < num.size()) result *= poch_infinite(num[i], q, opts);
    if (i < den.size()) {
      const Scalar d = poch_infinite_denominator(den[i], q, opts);
      if (d == Scalar(0.0)) throw PoleError("vanishing infinite product in denominator", static_cast<int>(i));
      result /= d;
    }
  }
  return require_finite(result, "product_ratio");
}

Scalar finite_ratio(const std::vector<Scalar>& num, const std::vector<Scalar>& den, const QBase& q,
                    std::int64_t k, const FactorPolicy& policy) {
  if (k < 0) {
    // (x;q)_{-m} = 1/(x q^{-m};q)_m, so the roles of numerator and denominator swap.
    const Scalar shift = q.pow(k);
    std::vector<Scalar> num2, den2;
    for (const auto& d : den) num2.push_back(d * shift);
    for (const auto& a : num) den2.push_back(a * shift);
    return finite_ratio(num2, den2, q, -k, policy);
  }
  Scalar result(1.0);
  const std::size_t n = std::max(num.size(), den.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i < num.size()) result *= forward_product(num[i], q, k, policy, false);
    if (i < den.size()) result /= forward_product(den[i], q, k, policy, true);
  }
  return require_finite(result, "finite_ratio");
}

}  // namespace qseries
