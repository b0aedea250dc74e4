#pragma once

// q-shifted factorials, infinite q-products and q-binomial coefficients.

#include <cstdint>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/scalar.hpp"

namespace qseries {

/// Which side of the unit circle the base lies on.
enum class Regime { InsideUnitDisk, OutsideUnitDisk };

/// A base q with q != 0 and |q| != 1.
class QBase {
 public:
  explicit QBase(Scalar q);
  QBase(double q) : QBase(Scalar(q)) {}  // NOLINT(google-explicit-constructor)

  const Scalar& value() const { return q_; }
  Regime regime() const { return regime_; }
  bool inside() const { return regime_ == Regime::InsideUnitDisk; }

  /// The base 1/q.
  QBase inverse() const { return QBase(Scalar(1.0) / q_); }

  /// q^m by binary powering.
  Scalar pow(std::int64_t m) const { return ipow(q_, m); }

 private:
  Scalar q_;
  Regime regime_;
};

/// How close a factor 1 - x may come to zero before it is rejected.
///
/// Denominator factors are always checked. With `guard_numerators` set, every
/// factor is checked; the sampler uses this to keep points well conditioned.
struct FactorPolicy {
  double pole_distance = 1e-14;
  bool guard_numerators = false;
};

/// True when 1 - x is within the policy's relative distance of zero.
inline bool near_zero_factor(const Scalar& x, double distance) {
  return std::abs(Scalar(1.0) - x) < distance * (1.0 + std::abs(x));
}

struct ProductOptions {
  double tol = 1e-16;
  std::int64_t max_factors = 100000;
  FactorPolicy policy{};
};

/// (a;q)_k. Negative k uses (a;q)_{-k} = 1/(aq^{-k};q)_k.
Scalar poch_finite(const Scalar& a, const QBase& q, std::int64_t k, const FactorPolicy& policy = {});

/// (a;q)_inf for |q| < 1, truncated once |aq^N| < tol with a first-order tail correction.
Scalar poch_infinite(const Scalar& a, const QBase& q, const ProductOptions& opts = {});

/// Same product, but every factor is treated as a denominator factor and
/// checked against the pole policy.
Scalar poch_infinite_denominator(const Scalar& a, const QBase& q, const ProductOptions& opts = {});

/// (a;q)_alpha = (a;q)_inf / (aq^alpha;q)_inf with the principal branch of q^alpha.
Scalar poch_complex_order(const Scalar& a, const QBase& q, const Scalar& alpha,
                          const ProductOptions& opts = {});

/// (a_1,...,a_r;q)_k. A PoleError carries the index of the offending argument.
Scalar poch_multi(const std::vector<Scalar>& args, const QBase& q, std::int64_t k,
                  const FactorPolicy& policy = {});

/// Gaussian binomial coefficient [n k]_q.
Scalar q_binom(std::int64_t n, std::int64_t k, const QBase& q);

/// (a;q)_k computed through the inverted base: (1/a;1/q)_k (-a)^k q^{k(k-1)/2}.
Scalar invert_base(const Scalar& a, const QBase& q, std::int64_t k);

/// prod (num;q)_inf / prod (den;q)_inf, the shape of nearly every closed form.
Scalar product_ratio(const std::vector<Scalar>& num, const std::vector<Scalar>& den, const QBase& q,
                     const ProductOptions& opts = {});

/// prod (num;q)_k / prod (den;q)_k.
Scalar finite_ratio(const std::vector<Scalar>& num, const std::vector<Scalar>& den, const QBase& q,
                    std::int64_t k, const FactorPolicy& policy = {});

}  // namespace qseries
