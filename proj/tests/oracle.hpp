#pragma once

// Brute-force reference values in long double. Every product is written out
// factor by factor and every series term is rebuilt from scratch, so nothing
// here shares code with the library's recurrences.

#include <complex>
#include <cstdint>
#include <vector>

#include "qseries/scalar.hpp"

namespace oracle {

using LC = std::complex<long double>;

inline LC widen(const qseries::Scalar& z) { return {z.real(), z.imag()}; }
inline qseries::Scalar narrow(const LC& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline LC power(LC x, std::int64_t m) {
  LC r(1.0L);
  const bool inv = m < 0;
  for (std::int64_t e = inv ? -m : m; e > 0; e >>= 1, x *= x)
    if (e & 1) r *= x;
  return inv ? LC(1.0L) / r : r;
}

/// (a;q)_k, negative k through 1/(aq^k;q)_{-k}.
inline LC poch(LC a, LC q, std::int64_t k) {
  if (k < 0) return LC(1.0L) / poch(a * power(q, k), q, -k);
  LC r(1.0L);
  for (std::int64_t j = 0; j < k; ++j) r *= LC(1.0L) - a * power(q, j);
  return r;
}

/// (a;q)_inf until the factors stop moving in long double.
inline LC poch_inf(LC a, LC q) {
  LC r(1.0L), x = a;
  for (int j = 0; j < 20000 && std::abs(x) > 1e-24L; ++j) {
    r *= LC(1.0L) - x;
    x *= q;
  }
  return r;
}

inline LC ratio_inf(const std::vector<LC>& num, const std::vector<LC>& den, LC q) {
  LC r(1.0L);
  for (const auto& a : num) r *= poch_inf(a, q);
  for (const auto& b : den) r /= poch_inf(b, q);
  return r;
}

/// prod (num;q)_k / prod (den;q)_k, taken factor by factor so that large
/// negative k does not overflow the separate products.
inline LC ratio_fin(const std::vector<LC>& num, const std::vector<LC>& den, LC q, std::int64_t k) {
  LC r(1.0L);
  if (k >= 0) {
    for (std::int64_t j = 0; j < k; ++j) {
      const LC qj = power(q, j);
      for (const auto& a : num) r *= LC(1.0L) - a * qj;
      for (const auto& b : den) r /= LC(1.0L) - b * qj;
    }
    return r;
  }
  for (std::int64_t j = 1; j <= -k; ++j) {
    const LC qj = power(q, -j);
    for (const auto& b : den) r *= LC(1.0L) - b * qj;
    for (const auto& a : num) r /= LC(1.0L) - a * qj;
  }
  return r;
}

/// k-th term of r phi s, with (q;q)_k in the denominator and the
/// [(-1)^k q^{k(k-1)/2}]^{1+s-r} factor.
inline LC phi_term(const std::vector<LC>& num, const std::vector<LC>& den, LC q, LC z, std::int64_t k) {
  const int e = 1 + static_cast<int>(den.size()) - static_cast<int>(num.size());
  std::vector<LC> lower = den;
  lower.push_back(q);
  LC t = ratio_fin(num, lower, q, k) * power(z, k);
  if (e == 0) return t;
  const LC extra = LC(k % 2 == 0 ? 1.0L : -1.0L) * power(q, k * (k - 1) / 2);
  return t * power(extra, e);
}

inline LC phi_sum(const std::vector<LC>& num, const std::vector<LC>& den, LC q, LC z, std::int64_t K) {
  LC s(0.0L);
  for (std::int64_t k = 0; k <= K; ++k) s += phi_term(num, den, q, z, k);
  return s;
}

/// k-th term of r psi s with the [(-1)^k q^{k(k-1)/2}]^{s-r} factor.
inline LC psi_term(const std::vector<LC>& num, const std::vector<LC>& den, LC q, LC z, std::int64_t k) {
  const int e = static_cast<int>(den.size()) - static_cast<int>(num.size());
  LC t = ratio_fin(num, den, q, k) * power(z, k);
  if (e == 0) return t;
  const LC extra = LC((k % 2 == 0) ? 1.0L : -1.0L) * power(q, k * (k - 1) / 2);
  return t * power(extra, e);
}

inline LC psi_sum(const std::vector<LC>& num, const std::vector<LC>& den, LC q, LC z, std::int64_t M) {
  LC s(0.0L);
  for (std::int64_t k = -M; k <= M; ++k) s += psi_term(num, den, q, z, k);
  return s;
}

/// W(a; tail; q, z) written out as its phi series.
inline LC vwp_sum(LC a, const std::vector<LC>& tail, LC q, LC z, std::int64_t K) {
  const LC s = std::sqrt(a);
  std::vector<LC> num{a, q * s, -q * s}, den{s, -s};
  for (const auto& b : tail) {
    num.push_back(b);
    den.push_back(a * q / b);
  }
  return phi_sum(num, den, q, z, K);
}

inline long double rel(LC x, LC y) {
  const long double scale = std::max({std::abs(x), std::abs(y), 1e-30L});
  return std::abs(x - y) / scale;
}

inline double rel(const qseries::Scalar& x, const qseries::Scalar& y) {
  const double scale = std::max({std::abs(x), std::abs(y), 1e-30});
  return std::abs(x - y) / scale;
}

}  // namespace oracle
