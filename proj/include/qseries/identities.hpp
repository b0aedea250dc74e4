#pragma once

// Registry of summation, transformation, functional-equation and expansion
// formulas, each with a series side, a second side, and its domain.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qseries/sampling.hpp"
#include "qseries/series.hpp"

namespace qseries {

enum class IdentityKind { Summation, Transformation, FunctionalEquation, Expansion, Orthogonality };

const char* to_string(IdentityKind kind);

/// Named parameter values of one identity instance. The base is stored as "q".
class Params {
 public:
  Params& set(const std::string& name, const Scalar& value);
  Params& set_int(const std::string& name, std::int64_t value);

  Scalar get(const std::string& name) const;
  std::int64_t integer(const std::string& name) const;
  bool has(const std::string& name) const { return values_.count(name) || ints_.count(name); }
  QBase base() const { return QBase(get("q")); }

  const std::map<std::string, Scalar>& values() const { return values_; }
  const std::map<std::string, std::int64_t>& ints() const { return ints_; }

 private:
  std::map<std::string, Scalar> values_;
  std::map<std::string, std::int64_t> ints_;
};

struct ParamDecl {
  std::string name;
  std::string role;
};

struct IntParamDecl {
  std::string name;
  std::int64_t lo;
  std::int64_t hi;
  IntCap cap = IntCap::None;
};

/// A side condition. `holds(p, margin)` tightens strict inequalities by `margin`;
/// margin = 1 is the mathematical domain.
struct Constraint {
  std::string description;
  std::function<bool(const Params&, double)> holds;
};

using SideFn = std::function<SeriesResult(const Params&, const EvalOptions&)>;
using DrawFn = std::function<Params(ParamDraw&)>;

struct IdentityEntry {
  std::string id;
  IdentityKind kind;
  std::string name;
  std::string reference;
  std::vector<ParamDecl> params;
  std::vector<IntParamDecl> integer_params;
  std::vector<Constraint> constraints;
  SideFn lhs;
  SideFn rhs;
  /// rhs is built from q-products only.
  bool closed_form = false;
  /// Compare |lhs - rhs| against the running partial sums instead of |rhs|.
  bool absolute_check = false;
  /// Overrides the default draw (every declared parameter from the standard box).
  DrawFn draw;

  /// "S", "T", "F" or "E".
  std::string family() const { return id.substr(0, 1); }
};

class Registry {
 public:
  explicit Registry(std::vector<IdentityEntry> entries);

  const IdentityEntry& at(const std::string& id) const;
  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  const std::vector<IdentityEntry>& entries() const { return entries_; }
  std::vector<std::string> ids() const;

 private:
  std::vector<IdentityEntry> entries_;
  std::map<std::string, std::size_t> index_;
};

/// The built-in registry (immutable, constructed on first use).
const Registry& registry();

enum class Verdict { Pass, Fail, Skip };

const char* to_string(Verdict v);

struct CheckResult {
  Scalar lhs;
  Scalar rhs;
  double rel_err = 0.0;
  bool pass = false;
  Verdict verdict = Verdict::Fail;
  std::string diagnostics;
  std::int64_t terms_used = 0;
  double tolerance = 0.0;
};

inline constexpr double kRelErrFloor = 1e-30;
/// Threshold of the absolute criterion used for the Kronecker-delta sum.
inline constexpr double kAbsoluteCriterion = 1e-12;

/// |lhs - rhs| / max(|lhs|, |rhs|, floor).
double relative_error(const Scalar& lhs, const Scalar& rhs);

/// Compares two evaluated sides at `tol`.
CheckResult compare_sides(const SeriesResult& lhs, const SeriesResult& rhs, double tol);

/// Absolute comparison: |lhs - rhs| <= tol (1 + max |partial sum|); when rhs is
/// nonzero the plain |lhs - rhs| <= tol is used.
CheckResult compare_absolute(const SeriesResult& lhs, const SeriesResult& rhs, double tol);

/// Throws DomainError naming the first violated constraint (at margin 1).
void require_domain(const IdentityEntry& entry, const Params& params);

Scalar closed_form(const std::string& id, const Params& params, const EvalOptions& opts = {});
SeriesResult series_side(const std::string& id, const Params& params, const EvalOptions& opts = {});
CheckResult check_identity(const std::string& id, const Params& params, const EvalOptions& opts = {},
                           double tol = 1e-9);

/// The two sides of the very-well-poised family with k = |e| = |n| pairs.
struct FamilySides {
  SeriesResult lhs;
  SeriesResult rhs;
};

FamilySides family_sides(const Scalar& a, const Scalar& b, const Scalar& d, const std::vector<Scalar>& e,
                         const std::vector<std::int64_t>& n, const QBase& q, const EvalOptions& opts = {});

CheckResult check_family(const Scalar& a, const Scalar& b, const Scalar& d, const std::vector<Scalar>& e,
                         const std::vector<std::int64_t>& n, const QBase& q, const EvalOptions& opts = {},
                         double tol = 1e-9);

/// Both sides of the Watson-type 8W7 -> 4phi3 transformation at explicit parameters.
FamilySides watson_sides(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d, const Scalar& e,
                         const Scalar& f, const QBase& q, const EvalOptions& opts = {});

}  // namespace qseries
