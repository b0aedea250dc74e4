#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace qseries {

/// Value domain of every parameter, product and series.
using Scalar = std::complex<double>;

inline bool is_finite(const Scalar& x) {
  return std::isfinite(x.real()) && std::isfinite(x.imag());
}

/// x^m for integer m by binary powering. Negative m inverts the positive power.
inline Scalar ipow(Scalar x, std::int64_t m) {
  if (m < 0) return Scalar(1.0) / ipow(x, -m);
  Scalar result(1.0);
  while (m > 0) {
    if (m & 1) result *= x;
    x *= x;
    m >>= 1;
  }
  return result;
}

/// k(k-1)/2 in integer arithmetic; valid for negative k as well.
constexpr std::int64_t binom2(std::int64_t k) { return k * (k - 1) / 2; }

/// |x - y| measured against the scale of y.
inline double rel_distance(const Scalar& x, const Scalar& y) {
  const double scale = std::abs(y);
  return scale == 0.0 ? std::abs(x) : std::abs(x - y) / scale;
}

}  // namespace qseries
