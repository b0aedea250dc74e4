#pragma once

// Unilateral, bilateral and very-well-poised basic hypergeometric series.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qseries/qcore.hpp"

namespace qseries {

/// r phi s (numerators; denominators; q, z).
struct PhiSpec {
  std::vector<Scalar> numerators;
  std::vector<Scalar> denominators;
  QBase q;
  Scalar z;
};

/// r psi s (numerators; denominators; q, z), summed over all integers.
struct PsiSpec {
  std::vector<Scalar> numerators;
  std::vector<Scalar> denominators;
  QBase q;
  Scalar z;
};

/// Very-well-poised W(a; tail; q, z). The square root of a is fixed once, on
/// the principal branch.
struct VwpSpec {
  Scalar a;
  std::vector<Scalar> tail;
  QBase q;
  Scalar z;
  Scalar sqrt_a;

  static VwpSpec make(const Scalar& a, std::vector<Scalar> tail, const QBase& q, const Scalar& z);
};

struct EvalOptions {
  double tol = 1e-17;
  std::int64_t max_terms = 100000;
  int consecutive_small = 3;
  FactorPolicy policy{};

  void validate() const;
  ProductOptions products() const {
    ProductOptions p;
    p.policy = policy;
    return p;
  }
};

struct SeriesResult {
  Scalar value;
  std::int64_t terms_used = 0;
  bool terminated = false;
  double tail_bound = 0.0;
  /// Sum of |t_k| over the terms used; value/abs_sum measures cancellation.
  double abs_sum = 0.0;
  /// Largest |partial sum| seen while summing.
  double peak_partial = 0.0;
};

enum class ConvergenceKind { Terminating, ConvergentAbsolute, Divergent, Boundary };

struct ConvergenceVerdict {
  ConvergenceKind kind;
  std::int64_t n = 0;                  // set for Terminating
  double positive_ratio = 0.0;         // lim |t_{k+1}/t_k|
  double negative_ratio = 0.0;         // lim |t_{-k-1}/t_{-k}|, psi only
};

/// Index weights for sums of the form sum_k t_k w_k.
using TermWeight = std::function<Scalar(std::int64_t)>;

/// Relative distance used to recognise parameters of the form q^{-n} / q^{m}.
inline constexpr double kTerminationTol = 1e-12;

PhiSpec expand_vwp(const VwpSpec& spec);

std::optional<std::int64_t> detect_termination(const PhiSpec& spec, double tol = kTerminationTol,
                                               std::int64_t max_n = 100000);
std::optional<std::int64_t> detect_termination(const PsiSpec& spec, double tol = kTerminationTol,
                                               std::int64_t max_n = 100000);

/// Smallest m >= 1 with a denominator equal to q^m. The bilateral terms with
/// index <= -m vanish.
std::optional<std::int64_t> negative_cutoff(const PsiSpec& spec, double tol = kTerminationTol,
                                            std::int64_t max_n = 100000);

ConvergenceVerdict check_convergence(const PhiSpec& spec);
ConvergenceVerdict check_convergence(const PsiSpec& spec);

SeriesResult eval_phi(const PhiSpec& spec, const EvalOptions& opts = {});
SeriesResult eval_psi(const PsiSpec& spec, const EvalOptions& opts = {});
SeriesResult eval_vwp(const VwpSpec& spec, const EvalOptions& opts = {});

/// sum_k t_k w(k) with t_k the terms of `spec`; same stopping rule as eval_phi.
SeriesResult eval_phi_weighted(const PhiSpec& spec, const TermWeight& weight, const EvalOptions& opts = {});
SeriesResult eval_psi_weighted(const PsiSpec& spec, const TermWeight& weight, const EvalOptions& opts = {});

/// Prefix sums S_0..S_M, without any stopping rule.
std::vector<Scalar> partial_sums(const PhiSpec& spec, std::int64_t M);
/// Symmetric sums sum_{|k|<=m} t_k for m = 0..M.
std::vector<Scalar> partial_sums(const PsiSpec& spec, std::int64_t M);

}  // namespace qseries
