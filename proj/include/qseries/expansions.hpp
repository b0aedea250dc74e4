#pragma once

// Expansion formulas driven by a finitely supported weight sequence u_k.

#include <cstdint>
#include <string>
#include <vector>

#include "qseries/identities.hpp"

namespace qseries {

/// u_k for k in [first, first + values.size()), zero elsewhere.
struct WeightSequence {
  std::int64_t first = 0;
  std::vector<Scalar> values;

  Scalar at(std::int64_t k) const;
  std::int64_t last() const { return first + static_cast<std::int64_t>(values.size()) - 1; }
  bool empty() const { return values.empty(); }
  Scalar total() const;
};

/// u_k = (b, c, q^{-n}; q)_k / (q, aq, bc q^{-n}/a; q)_k q^k.
WeightSequence six_w_five_weights(const Scalar& a, const Scalar& b, const Scalar& c, std::int64_t n,
                                  const QBase& q);

/// u_k = (b, c, d, aq/ef; q)_k / (q, aq/e, aq/f, bcd/a; q)_k q^k, truncated at the
/// numerator parameter of the form q^{-n}.
WeightSequence watson_weights(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                              const Scalar& e, const Scalar& f, const QBase& q);

/// u_k = (b, a/b, q^{-m}; q)_k / (q, aq/f, f q^{-m}; q)_k q^k.
WeightSequence balanced_weights(const Scalar& a, const Scalar& b, const Scalar& f, std::int64_t m,
                                const QBase& q);

struct ExpansionSides {
  SeriesResult lhs;
  SeriesResult rhs;
};

/// E1: u_0 against the reordered double sum over the Kronecker-delta kernel.
/// E2: A sum u_k against the 6psi6-weighted double sum (params a, b, c, d, e).
/// E3: B_n sum u_k against the 8W7-weighted double sum (params a, b, d, e, n).
ExpansionSides expansion_sides(const std::string& id, const WeightSequence& u, const Params& params,
                               const EvalOptions& opts = {});

CheckResult check_expansion(const std::string& id, const WeightSequence& u, const Params& params, double tol,
                            const EvalOptions& opts = {});

/// Reads weights stored as "u0", "u1", ... with the support size in the integer "N".
WeightSequence weights_from_params(const Params& params);

}  // namespace qseries
