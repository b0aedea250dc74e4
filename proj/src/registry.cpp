#include <cmath>
#include <string>

#include "qseries/expansions.hpp"
#include "qseries/identities.hpp"

namespace qseries {

namespace {

using P = const Params&;
using O = const EvalOptions&;

SeriesResult value_of(const Scalar& v) {
  SeriesResult r;
  r.value = v;
  r.terminated = true;
  r.abs_sum = r.peak_partial = std::abs(v);
  return r;
}

SeriesResult times(SeriesResult r, const Scalar& f) {
  r.value *= f;
  r.abs_sum *= std::abs(f);
  r.peak_partial *= std::abs(f);
  r.tail_bound *= std::abs(f);
  return r;
}

SeriesResult product(const SeriesResult& x, const SeriesResult& y) {
  SeriesResult r;
  r.value = x.value * y.value;
  r.terms_used = x.terms_used + y.terms_used;
  r.terminated = x.terminated && y.terminated;
  r.abs_sum = x.abs_sum * y.abs_sum;
  r.peak_partial = x.peak_partial * y.peak_partial;
  r.tail_bound = x.tail_bound * y.abs_sum + y.tail_bound * x.abs_sum;
  return r;
}

// |lhs(p)| < margin * rhs(p)
Constraint below(std::string description, std::function<double(P)> lhs, std::function<double(P)> rhs) {
  return {std::move(description), [lhs, rhs](P p, double margin) { return lhs(p) < margin * rhs(p); }};
}

Constraint inside_disk(std::string description, std::function<Scalar(P)> value) {
  return {std::move(description), [value](P p, double margin) { return std::abs(value(p)) < margin; }};
}

Scalar Q(P p) { return p.get("q"); }
Scalar qn(P p, std::int64_t m) { return ipow(Q(p), m); }

std::vector<ParamDecl> decl(std::initializer_list<const char*> names) {
  std::vector<ParamDecl> out;
  for (const char* n : names) out.push_back({n, std::string(n) == "q" ? "base, 0 < |q| < 1" : "complex"});
  return out;
}

// A magnitude that puts |scale / x| comfortably below the margin.
Scalar beyond(ParamDraw& d, double scale) { return d.with_magnitude(scale * d.uniform(1.2, 4.0)); }

IdentityEntry make(std::string id, IdentityKind kind, std::string name, std::string reference,
                   std::vector<ParamDecl> params) {
  IdentityEntry e;
  e.id = std::move(id);
  e.kind = kind;
  e.name = std::move(name);
  e.reference = std::move(reference);
  e.params = std::move(params);
  return e;
}

constexpr auto S = IdentityKind::Summation;
constexpr auto T = IdentityKind::Transformation;
constexpr auto F = IdentityKind::FunctionalEquation;

void add_summations(std::vector<IdentityEntry>& out) {
  {
    auto e = make("S1", S, "1phi0(a; -; q, z) = (az;q)_inf / (z;q)_inf", "q-binomial theorem", decl({"a", "z", "q"}));
    e.constraints = {inside_disk("|z| < 1", [](P p) { return p.get("z"); })};
    e.lhs = [](P p, O o) { return eval_phi({{p.get("a")}, {}, p.base(), p.get("z")}, o); };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), z = p.get("z");
      return value_of(product_ratio({a * z}, {z}, p.base(), o.products()));
    };
    e.closed_form = true;
    out.push_back(std::move(e));
  }
  {
    auto e = make("S2", S, "1phi0(a; -; q, z) = (z/q;1/q)_inf / (az/q;1/q)_inf for |q| > 1",
                  "q-binomial theorem, inverted base", decl({"a", "z", "q"}));
    e.params.back().role = "base, |q| > 1";
    e.constraints = {inside_disk("|az/q| < 1", [](P p) { return p.get("a") * p.get("z") / Q(p); })};
    e.lhs = [](P p, O o) { return eval_phi({{p.get("a")}, {}, p.base(), p.get("z")}, o); };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), z = p.get("z");
      return value_of(product_ratio({z / Q(p)}, {a * z / Q(p)}, p.base().inverse(), o.products()));
    };
    e.closed_form = true;
    e.draw = [](ParamDraw& d) {
      Params p;
      p.set("q", d.q_outside());
      p.set("a", d.complex());
      p.set("z", d.complex());
      return p;
    };
    out.push_back(std::move(e));
  }
  {
    auto e = make("S3", S, "y^n (-x q^{-n}/y;q)_n = sum (q^{-n};q)_k/(q;q)_k (-1)^k x^k y^{n-k}",
                  "q-analogue of the binomial expansion", decl({"x", "y", "q"}));
    e.integer_params = {{"n", 0, 10, IntCap::N}};
    e.lhs = [](P p, O o) {
      const Scalar x = p.get("x"), y = p.get("y");
      const auto n = p.integer("n");
      return times(eval_phi({{qn(p, -n)}, {}, p.base(), -x / y}, o), ipow(y, n));
    };
    e.rhs = [](P p, O o) {
      const Scalar x = p.get("x"), y = p.get("y");
      const auto n = p.integer("n");
      return value_of(ipow(y, n) * finite_ratio({-x * qn(p, -n) / y}, {}, p.base(), n, o.policy));
    };
    e.closed_form = true;
    out.push_back(std::move(e));
  }
  {
    auto e = make("S4", S, "(ab;q)_n/(q;q)_n = sum_k (a;q)_{n-k}(b;q)_k / ((q;q)_{n-k}(q;q)_k) a^k",
                  "coefficient form of the q-binomial product formula", decl({"a", "b", "q"}));
    e.integer_params = {{"n", 0, 10, IntCap::N}};
    e.lhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), q = Q(p);
      const auto n = p.integer("n");
      const QBase base = p.base();
      SeriesResult r;
      Scalar ak(1.0);
      for (std::int64_t k = 0; k <= n; ++k) {
        const Scalar t = finite_ratio({a}, {q}, base, n - k, o.policy) * finite_ratio({b}, {q}, base, k, o.policy) * ak;
        r.value += t;
        r.abs_sum += std::abs(t);
        r.peak_partial = std::max(r.peak_partial, std::abs(r.value));
        ak *= a;
      }
      r.terms_used = n + 1;
      r.terminated = true;
      return r;
    };
    e.rhs = [](P p, O o) {
      return value_of(finite_ratio({p.get("a") * p.get("b")}, {Q(p)}, p.base(), p.integer("n"), o.policy));
    };
    e.closed_form = true;
    out.push_back(std::move(e));
  }
  {
    auto e = make("S5", S, "2phi1(q^{-n}, b; c; q, q) = (c/b;q)_n b^n / (c;q)_n", "q-Chu-Vandermonde sum",
                  decl({"b", "c", "q"}));
    e.integer_params = {{"n", 0, 10, IntCap::N}};
    e.lhs = [](P p, O o) {
      const auto n = p.integer("n");
      return eval_phi({{qn(p, -n), p.get("b")}, {p.get("c")}, p.base(), Q(p)}, o);
    };
    e.rhs = [](P p, O o) {
      const Scalar b = p.get("b"), c = p.get("c");
      const auto n = p.integer("n");
      return value_of(finite_ratio({c / b}, {c}, p.base(), n, o.policy) * ipow(b, n));
    };
    e.closed_form = true;
    out.push_back(std::move(e));
  }
  {
    auto e = make("S6", S, "2phi1(q^{-n}, b; c; q, cq^n/b) = (c/b;q)_n / (c;q)_n",
                  "q-Chu-Vandermonde sum, reversed form", decl({"b", "c", "q"}));
    e.integer_params = {{"n", 0, 10, IntCap::N}};
    e.lhs = [](P p, O o) {
      const auto n = p.integer("n");
      const Scalar b = p.get("b"), c = p.get("c");
      return eval_phi({{qn(p, -n), b}, {c}, p.base(), c * qn(p, n) / b}, o);
    };
    e.rhs = [](P p, O o) {
      const Scalar b = p.get("b"), c = p.get("c");
      return value_of(finite_ratio({c / b}, {c}, p.base(), p.integer("n"), o.policy));
    };
    e.closed_form = true;
    out.push_back(std::move(e));
  }
  {
    auto e = make("S7", S, "2phi1(a, b; c; q, c/ab) = (c/a, c/b;q)_inf / (c, c/ab;q)_inf", "q-Gauss sum",
                  decl({"a", "b", "c", "q"}));
    e.constraints = {inside_disk("|c/ab| < 1", [](P p) { return p.get("c") / (p.get("a") * p.get("b")); })};
    e.lhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c");
      return eval_phi({{a, b}, {c}, p.base(), c / (a * b)}, o);
    };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c");
      return value_of(product_ratio({c / a, c / b}, {c, c / (a * b)}, p.base(), o.products()));
    };
    e.closed_form = true;
    out.push_back(std::move(e));
  }
  {
    auto e = make("S8", S, "2phi1(a, b; c; q, q) = (a/c, b/c;1/q)_inf / (1/c, ab/c;1/q)_inf for |q| > 1",
                  "q-Gauss sum, inverted base", decl({"a", "b", "c", "q"}));
    e.params.back().role = "base, |q| > 1";
    e.constraints = {inside_disk("|ab/c| < 1", [](P p) { return p.get("a") * p.get("b") / p.get("c"); })};
    e.lhs = [](P p, O o) { return eval_phi({{p.get("a"), p.get("b")}, {p.get("c")}, p.base(), Q(p)}, o); };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c");
      return value_of(product_ratio({a / c, b / c}, {1.0 / c, a * b / c}, p.base().inverse(), o.products()));
    };
    e.closed_form = true;
    e.draw = [](ParamDraw& d) {
      Params p;
      p.set("q", d.q_outside());
      p.set("a", d.complex());
      p.set("b", d.complex());
      p.set("c", d.complex());
      return p;
    };
    out.push_back(std::move(e));
  }
  {
    auto e = make("S9", S, "1psi1(a; b; q, z) = (q, b/a, az, q/az;q)_inf / (b, q/a, z, b/az;q)_inf",
                  "Ramanujan's 1psi1 sum", decl({"a", "b", "z", "q"}));
    e.constraints = {
        below("|b/a| < |z|", [](P p) { return std::abs(p.get("b") / p.get("a")); },
              [](P p) { return std::abs(p.get("z")); }),
        inside_disk("|z| < 1", [](P p) { return p.get("z"); })};
    e.lhs = [](P p, O o) { return eval_psi({{p.get("a")}, {p.get("b")}, p.base(), p.get("z")}, o); };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), z = p.get("z"), q = Q(p);
      return value_of(
          product_ratio({q, b / a, a * z, q / (a * z)}, {b, q / a, z, b / (a * z)}, p.base(), o.products()));
    };
    e.closed_form = true;
    out.push_back(std::move(e));
  }
  {
    auto e = make("S10", S, "sum_k q^{k^2} z^k = (q^2, -qz, -q/z;q^2)_inf", "Jacobi triple product",
                  decl({"z", "q"}));
    e.constraints = {{"z != 0", [](P p, double) { return p.get("z") != Scalar(0.0); }}};
    e.lhs = [](P p, O o) {
      const Scalar q = Q(p);
      return eval_psi({{}, {0.0}, QBase(q * q), -q * p.get("z")}, o);
    };
    e.rhs = [](P p, O o) {
      const Scalar q = Q(p), z = p.get("z");
      return value_of(product_ratio({q * q, -q * z, -q / z}, {}, QBase(q * q), o.products()));
    };
    e.closed_form = true;
    out.push_back(std::move(e));
  }
  {
    auto e = make("S11", S,
                  "2psi2(a, b; c, d; q, cd/abq) = d (q, c/a, c/b, d/a, d/b;q)_inf / (q c^n (q/a, q/b, c, d, cd/abq;q)_inf),"
                  " d = q^{n+1}",
                  "bilateral extension of the q-Gauss sum at d = q^{n+1}", decl({"a", "b", "c", "q"}));
    e.integer_params = {{"n", 0, 4, IntCap::None}};
    e.constraints = {inside_disk("|cd/abq| < 1", [](P p) {
      return p.get("c") * qn(p, p.integer("n") + 1) / (p.get("a") * p.get("b") * Q(p));
    })};
    e.lhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c"), q = Q(p);
      const Scalar d = qn(p, p.integer("n") + 1);
      return eval_psi({{a, b}, {c, d}, p.base(), c * d / (a * b * q)}, o);
    };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c"), q = Q(p);
      const auto n = p.integer("n");
      const Scalar d = qn(p, n + 1);
      const Scalar prod = product_ratio({q, c / a, c / b, d / a, d / b}, {q / a, q / b, c, d, c * d / (a * b * q)},
                                        p.base(), o.products());
      return value_of(d * prod / (q * ipow(c, n)));
    };
    e.closed_form = true;
    out.push_back(std::move(e));
  }
  {
    auto e = make("S12", S, "3phi2(a, b, q^{-n}; c, abq^{1-n}/c; q, q) = (c/a, c/b;q)_n / (c, c/ab;q)_n",
                  "q-Pfaff-Saalschutz sum", decl({"a", "b", "c", "q"}));
    e.integer_params = {{"n", 0, 10, IntCap::N}};
    e.lhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c");
      const auto n = p.integer("n");
      return eval_phi({{a, b, qn(p, -n)}, {c, a * b * qn(p, 1 - n) / c}, p.base(), Q(p)}, o);
    };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c");
      return value_of(finite_ratio({c / a, c / b}, {c, c / (a * b)}, p.base(), p.integer("n"), o.policy));
    };
    e.closed_form = true;
    out.push_back(std::move(e));
  }
  {
    auto e = make("S13", IdentityKind::Orthogonality, "4W3(a; q^{-n}; q, q^n) = delta_{n,0}",
                  "Kronecker-delta orthogonality of the 4W3", decl({"a", "q"}));
    e.integer_params = {{"n", 0, 10, IntCap::N}};
    e.lhs = [](P p, O o) {
      const auto n = p.integer("n");
      return eval_vwp(VwpSpec::make(p.get("a"), {qn(p, -n)}, p.base(), qn(p, n)), o);
    };
    e.rhs = [](P p, O) { return value_of(p.integer("n") == 0 ? 1.0 : 0.0); };
    e.closed_form = true;
    e.absolute_check = true;
    out.push_back(std::move(e));
  }
  {
    auto e = make("S14", S, "2phi1(a, b; aq/b; q, -q/b) = (-q;q)_inf (aq, aq^2/b^2;q^2)_inf / (aq/b, -q/b;q)_inf",
                  "q-Kummer sum", decl({"a", "b", "q"}));
    e.constraints = {inside_disk("|q/b| < 1", [](P p) { return Q(p) / p.get("b"); })};
    e.lhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), q = Q(p);
      return eval_phi({{a, b}, {a * q / b}, p.base(), -q / b}, o);
    };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), q = Q(p);
      const Scalar lin = product_ratio({-q}, {a * q / b, -q / b}, p.base(), o.products());
      const Scalar quad = product_ratio({a * q, a * q * q / (b * b)}, {}, QBase(q * q), o.products());
      return value_of(lin * quad);
    };
    e.closed_form = true;
    out.push_back(std::move(e));
  }
  {
    auto e = make("S15", S, "6W5(a; b, c, q^{-n}; q, aq^{n+1}/bc) = (aq, aq/bc;q)_n / (aq/b, aq/c;q)_n",
                  "terminating 6W5 sum", decl({"a", "b", "c", "q"}));
    e.integer_params = {{"n", 0, 10, IntCap::N}};
    e.lhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c");
      const auto n = p.integer("n");
      return eval_vwp(VwpSpec::make(a, {b, c, qn(p, -n)}, p.base(), a * qn(p, n + 1) / (b * c)), o);
    };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c"), q = Q(p);
      return value_of(
          finite_ratio({a * q, a * q / (b * c)}, {a * q / b, a * q / c}, p.base(), p.integer("n"), o.policy));
    };
    e.closed_form = true;
    out.push_back(std::move(e));
  }
  {
    auto e = make("S16", S,
                  "6W5(a; b, c, d; q, aq/bcd) = (aq, aq/bc, aq/bd, aq/cd;q)_inf / (aq/b, aq/c, aq/d, aq/bcd;q)_inf",
                  "nonterminating 6W5 sum", decl({"a", "b", "c", "d", "q"}));
    e.constraints = {inside_disk("|aq/bcd| < 1",
                                 [](P p) { return p.get("a") * Q(p) / (p.get("b") * p.get("c") * p.get("d")); })};
    e.lhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c"), d = p.get("d");
      return eval_vwp(VwpSpec::make(a, {b, c, d}, p.base(), a * Q(p) / (b * c * d)), o);
    };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c"), d = p.get("d"), aq = a * Q(p);
      return value_of(product_ratio({aq, aq / (b * c), aq / (b * d), aq / (c * d)},
                                    {aq / b, aq / c, aq / d, aq / (b * c * d)}, p.base(), o.products()));
    };
    e.closed_form = true;
    out.push_back(std::move(e));
  }
  {
    auto e = make("S17", S, "6psi6(q sqrt(a), -q sqrt(a), b, c, d, e; sqrt(a), -sqrt(a), aq/b, aq/c, aq/d, aq/e; q, a^2q/bcde)",
                  "very-well-poised 6psi6 sum", decl({"a", "b", "c", "d", "e", "q"}));
    e.constraints = {inside_disk("|a^2q/bcde| < 1", [](P p) {
      const Scalar a = p.get("a");
      return a * a * Q(p) / (p.get("b") * p.get("c") * p.get("d") * p.get("e"));
    })};
    e.lhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c"), d = p.get("d"), ee = p.get("e"), q = Q(p);
      const Scalar s = std::sqrt(a), aq = a * q;
      return eval_psi({{q * s, -q * s, b, c, d, ee}, {s, -s, aq / b, aq / c, aq / d, aq / ee}, p.base(),
                       a * a * q / (b * c * d * ee)},
                      o);
    };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c"), d = p.get("d"), ee = p.get("e"), q = Q(p);
      const Scalar aq = a * q;
      return value_of(product_ratio(
          {aq, aq / (b * c), aq / (b * d), aq / (b * ee), aq / (c * d), aq / (c * ee), aq / (d * ee), q, q / a},
          {aq / b, aq / c, aq / d, aq / ee, q / b, q / c, q / d, q / ee, a * aq / (b * c * d * ee)}, p.base(),
          o.products()));
    };
    e.closed_form = true;
    e.draw = [](ParamDraw& d) {
      Params p;
      p.set("q", d.q_inside());
      for (const char* n : {"a", "b", "c", "d"}) p.set(n, d.complex());
      const Scalar a = p.get("a");
      p.set("e", beyond(d, std::abs(a * a * Q(p) / (p.get("b") * p.get("c") * p.get("d")))));
      return p;
    };
    out.push_back(std::move(e));
  }
  {
    auto e = make("S18", S,
                  "2psi2(b, c; aq/b, aq/c; q, -aq/bc) = (aq/bc;q)_inf (aq^2/b^2, aq^2/c^2, q^2, aq, q/a;q^2)_inf"
                  " / (aq/b, aq/c, q/b, q/c, -aq/bc;q)_inf",
                  "well-poised 2psi2 sum", decl({"a", "b", "c", "q"}));
    e.constraints = {
        inside_disk("|aq/bc| < 1", [](P p) { return p.get("a") * Q(p) / (p.get("b") * p.get("c")); })};
    e.lhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c"), aq = a * Q(p);
      return eval_psi({{b, c}, {aq / b, aq / c}, p.base(), -aq / (b * c)}, o);
    };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c"), q = Q(p), aq = a * q;
      const Scalar lin =
          product_ratio({aq / (b * c)}, {aq / b, aq / c, q / b, q / c, -aq / (b * c)}, p.base(), o.products());
      const Scalar quad =
          product_ratio({aq * q / (b * b), aq * q / (c * c), q * q, aq, q / a}, {}, QBase(q * q), o.products());
      return value_of(lin * quad);
    };
    e.closed_form = true;
    out.push_back(std::move(e));
  }
  {
    auto e = make("S19", S,
                  "8W7(a; b, c, d, e, q^{-n}; q, q) = (aq, aq/bc, aq/bd, aq/cd;q)_n / (aq/b, aq/c, aq/d, aq/bcd;q)_n,"
                  " a^2q^{n+1} = bcde",
                  "terminating 8W7 sum", decl({"a", "b", "c", "d", "q"}));
    e.params.push_back({"e", "derived: a^2 q^{n+1} / bcd"});
    e.integer_params = {{"n", 0, 10, IntCap::N}};
    e.lhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c"), d = p.get("d");
      const auto n = p.integer("n");
      const Scalar ee = a * a * qn(p, n + 1) / (b * c * d);
      return eval_vwp(VwpSpec::make(a, {b, c, d, ee, qn(p, -n)}, p.base(), Q(p)), o);
    };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c"), d = p.get("d"), aq = a * Q(p);
      return value_of(finite_ratio({aq, aq / (b * c), aq / (b * d), aq / (c * d)},
                                   {aq / b, aq / c, aq / d, aq / (b * c * d)}, p.base(), p.integer("n"), o.policy));
    };
    e.closed_form = true;
    e.draw = [](ParamDraw& d) {
      Params p;
      p.set("q", d.q_inside());
      for (const char* n : {"a", "b", "c", "d"}) p.set(n, d.complex());
      p.set_int("n", d.integer("n", 0, 10, IntCap::N));
      return p;
    };
    out.push_back(std::move(e));
  }
  {
    auto e = make("S20", S,
                  "8W7(a; b, a/b, d, e, aq^{n+1}/e; q, q^{1-n}/d) = (q, aq, aq/bd, bq/d;q)_inf (aq/be, bq/e;q)_n"
                  " / ((bq, aq/b, aq/d, q/d;q)_inf (aq/e, q/e;q)_n)",
                  "nonterminating 8W7 sum", decl({"a", "b", "d", "e", "q"}));
    e.integer_params = {{"n", 0, 10, IntCap::N}};
    e.constraints = {inside_disk("|q^{1-n}/d| < 1", [](P p) { return qn(p, 1 - p.integer("n")) / p.get("d"); })};
    e.lhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), d = p.get("d"), ee = p.get("e");
      const auto n = p.integer("n");
      return eval_vwp(VwpSpec::make(a, {b, a / b, d, ee, a * qn(p, n + 1) / ee}, p.base(), qn(p, 1 - n) / d), o);
    };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), d = p.get("d"), ee = p.get("e"), q = Q(p), aq = a * q;
      const Scalar inf =
          product_ratio({q, aq, aq / (b * d), b * q / d}, {b * q, aq / b, aq / d, q / d}, p.base(), o.products());
      const Scalar fin =
          finite_ratio({aq / (b * ee), b * q / ee}, {aq / ee, q / ee}, p.base(), p.integer("n"), o.policy);
      return value_of(inf * fin);
    };
    e.closed_form = true;
    e.draw = [](ParamDraw& d) {
      Params p;
      p.set("q", d.q_inside());
      p.set("a", d.complex());
      p.set("b", d.complex());
      p.set("e", d.complex());
      const auto n = d.integer("n", 0, 10, IntCap::N);
      p.set_int("n", n);
      p.set("d", beyond(d, std::abs(qn(p, 1 - n))));
      return p;
    };
    out.push_back(std::move(e));
  }
  {
    auto e = make("S21", S,
                  "10W9(a; b, a/b, d, e, aq^{n+1}/e, f, aq^{m+1}/f; q, q^{1-n-m}/d) = (q, aq, aq/bd, bq/d;q)_inf"
                  " (aq/be, bq/e;q)_n (aq/bf, bq/f;q)_m / ((bq, aq/b, aq/d, q/d;q)_inf (aq/e, q/e;q)_n (aq/f, q/f;q)_m)",
                  "10W9 sum from the 8W7 expansion", decl({"a", "b", "d", "e", "f", "q"}));
    e.integer_params = {{"n", 0, 10, IntCap::N}, {"m", 0, 10, IntCap::N}};
    e.constraints = {inside_disk("|q^{1-n-m}/d| < 1",
                                 [](P p) { return qn(p, 1 - p.integer("n") - p.integer("m")) / p.get("d"); })};
    e.lhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), d = p.get("d"), ee = p.get("e"), f = p.get("f");
      const auto n = p.integer("n"), m = p.integer("m");
      return eval_vwp(VwpSpec::make(a, {b, a / b, d, ee, a * qn(p, n + 1) / ee, f, a * qn(p, m + 1) / f}, p.base(),
                                    qn(p, 1 - n - m) / d),
                      o);
    };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), d = p.get("d"), ee = p.get("e"), f = p.get("f"), q = Q(p);
      const Scalar aq = a * q;
      const Scalar inf =
          product_ratio({q, aq, aq / (b * d), b * q / d}, {b * q, aq / b, aq / d, q / d}, p.base(), o.products());
      const Scalar fe =
          finite_ratio({aq / (b * ee), b * q / ee}, {aq / ee, q / ee}, p.base(), p.integer("n"), o.policy);
      const Scalar ff = finite_ratio({aq / (b * f), b * q / f}, {aq / f, q / f}, p.base(), p.integer("m"), o.policy);
      return value_of(inf * fe * ff);
    };
    e.closed_form = true;
    e.draw = [](ParamDraw& d) {
      Params p;
      p.set("q", d.q_inside());
      for (const char* n : {"a", "b", "e", "f"}) p.set(n, d.complex());
      const auto n = d.integer("n", 0, 10, IntCap::N);
      const auto m = d.integer("m", 0, 10, IntCap::N);
      p.set_int("n", n);
      p.set_int("m", m);
      p.set("d", beyond(d, std::abs(qn(p, 1 - n - m))));
      return p;
    };
    out.push_back(std::move(e));
  }
  {
    auto e = make("S22", S,
                  "W(a; b, a/b, d, e_1..e_k, aq^{n_1+1}/e_1..aq^{n_k+1}/e_k; q, q^{1-sum n_j}/d) = "
                  "(q, aq, aq/bd, bq/d;q)_inf / (bq, aq/b, aq/d, q/d;q)_inf prod_j (aq/be_j, bq/e_j;q)_{n_j} / "
                  "(aq/e_j, q/e_j;q)_{n_j}",
                  "family of very-well-poised sums", decl({"a", "b", "d", "e1", "e2", "e3", "q"}));
    e.params[3].role = e.params[4].role = e.params[5].role = "complex, j <= k";
    e.integer_params = {{"k", 1, 3, IntCap::K}, {"n1", 0, 2}, {"n2", 0, 2}, {"n3", 0, 2}};
    auto lists = [](P p) {
      std::vector<Scalar> es;
      std::vector<std::int64_t> ns;
      for (std::int64_t j = 1; j <= p.integer("k"); ++j) {
        es.push_back(p.get("e" + std::to_string(j)));
        ns.push_back(p.integer("n" + std::to_string(j)));
      }
      return std::pair{es, ns};
    };
    e.constraints = {inside_disk("|q^{1-sum n_j}/d| < 1", [lists](P p) {
      std::int64_t total = 0;
      for (auto n : lists(p).second) total += n;
      return qn(p, 1 - total) / p.get("d");
    })};
    e.lhs = [lists](P p, O o) {
      auto [es, ns] = lists(p);
      return family_sides(p.get("a"), p.get("b"), p.get("d"), es, ns, p.base(), o).lhs;
    };
    e.rhs = [lists](P p, O o) {
      auto [es, ns] = lists(p);
      return family_sides(p.get("a"), p.get("b"), p.get("d"), es, ns, p.base(), o).rhs;
    };
    e.closed_form = true;
    e.draw = [](ParamDraw& d) {
      Params p;
      p.set("q", d.q_inside());
      p.set("a", d.complex());
      p.set("b", d.complex());
      const auto k = d.integer("k", 1, 3, IntCap::K);
      p.set_int("k", k);
      std::int64_t total = 0;
      for (std::int64_t j = 1; j <= k; ++j) {
        const std::string s = std::to_string(j);
        p.set("e" + s, d.complex());
        const auto n = d.integer("n" + s, 0, 2);
        p.set_int("n" + s, n);
        total += n;
      }
      p.set("d", beyond(d, std::abs(qn(p, 1 - total))));
      return p;
    };
    out.push_back(std::move(e));
  }
}

void add_transformations(std::vector<IdentityEntry>& out) {
  {
    auto e = make("T1", T, "1phi0(a; -; q, z) 1phi0(b; -; q, az) = 1phi0(ab; -; q, z)", "q-binomial product formula",
                  decl({"a", "b", "z", "q"}));
    e.constraints = {inside_disk("|z| < 1", [](P p) { return p.get("z"); }),
                     inside_disk("|az| < 1", [](P p) { return p.get("a") * p.get("z"); })};
    e.lhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), z = p.get("z");
      return product(eval_phi({{a}, {}, p.base(), z}, o), eval_phi({{b}, {}, p.base(), a * z}, o));
    };
    e.rhs = [](P p, O o) { return eval_phi({{p.get("a") * p.get("b")}, {}, p.base(), p.get("z")}, o); };
    out.push_back(std::move(e));
  }
  {
    auto e = make("T2", T, "2phi1(a, b; c; q, z) = (b, az;q)_inf / (c, z;q)_inf 2phi1(c/b, z; az; q, b)",
                  "Heine transformation", decl({"a", "b", "c", "z", "q"}));
    e.constraints = {inside_disk("|z| < 1", [](P p) { return p.get("z"); }),
                     inside_disk("|b| < 1", [](P p) { return p.get("b"); })};
    e.lhs = [](P p, O o) { return eval_phi({{p.get("a"), p.get("b")}, {p.get("c")}, p.base(), p.get("z")}, o); };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c"), z = p.get("z");
      return times(eval_phi({{c / b, z}, {a * z}, p.base(), b}, o),
                   product_ratio({b, a * z}, {c, z}, p.base(), o.products()));
    };
    out.push_back(std::move(e));
  }
  {
    auto e = make("T3", T,
                  "3phi2(q^{-n}, a, b; c, d; q, q) = (a, d/b;q)_n / (c, d;q)_n b^n "
                  "3phi2(q^{-n}, c/a, q^{1-n}/d; q^{1-n}/a, q^{1-n}b/d; q, q)",
                  "terminating 3phi2 transformation", decl({"a", "b", "c", "d", "q"}));
    e.integer_params = {{"n", 0, 10, IntCap::N}};
    e.lhs = [](P p, O o) {
      const auto n = p.integer("n");
      return eval_phi({{qn(p, -n), p.get("a"), p.get("b")}, {p.get("c"), p.get("d")}, p.base(), Q(p)}, o);
    };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c"), d = p.get("d");
      const auto n = p.integer("n");
      const Scalar q1n = qn(p, 1 - n);
      const SeriesResult s = eval_phi({{qn(p, -n), c / a, q1n / d}, {q1n / a, q1n * b / d}, p.base(), Q(p)}, o);
      return times(s, finite_ratio({a, d / b}, {c, d}, p.base(), n, o.policy) * ipow(b, n));
    };
    out.push_back(std::move(e));
  }
  {
    auto e = make("T4", T, "2phi1(a, b; c; q, z) = (abz/c;q)_inf / (z;q)_inf 2phi1(c/a, c/b; c; q, abz/c)",
                  "Heine transformation, iterated form", decl({"a", "b", "c", "z", "q"}));
    e.constraints = {inside_disk("|z| < 1", [](P p) { return p.get("z"); }),
                     inside_disk("|abz/c| < 1",
                                 [](P p) { return p.get("a") * p.get("b") * p.get("z") / p.get("c"); })};
    e.lhs = [](P p, O o) { return eval_phi({{p.get("a"), p.get("b")}, {p.get("c")}, p.base(), p.get("z")}, o); };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), c = p.get("c"), z = p.get("z");
      const Scalar w = a * b * z / c;
      return times(eval_phi({{c / a, c / b}, {c}, p.base(), w}, o), product_ratio({w}, {z}, p.base(), o.products()));
    };
    out.push_back(std::move(e));
  }
  {
    auto e = make("T5", T, "4W3(a; b; q, z) = (1 - bz) 2phi1(aq, bq; aq/b; q, z)", "4W3 reduction",
                  decl({"a", "b", "z", "q"}));
    e.constraints = {inside_disk("|z| < 1", [](P p) { return p.get("z"); })};
    e.lhs = [](P p, O o) { return eval_vwp(VwpSpec::make(p.get("a"), {p.get("b")}, p.base(), p.get("z")), o); };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), b = p.get("b"), z = p.get("z"), q = Q(p);
      return times(eval_phi({{a * q, b * q}, {a * q / b}, p.base(), z}, o), 1.0 - b * z);
    };
    out.push_back(std::move(e));
  }
  {
    auto e = make("T6", T,
                  "8W7(a; b, c, d, e, f; q, a^2q^2/bcdef) = (aq, aq/bc, aq/bd, aq/cd;q)_inf / (aq/b, aq/c, aq/d, aq/bcd;q)_inf "
                  "4phi3(b, c, d, aq/ef; aq/e, aq/f, bcd/a; q, q), f = aq^{n+1}/e",
                  "Watson transformation", decl({"a", "b", "c", "d", "e", "q"}));
    e.params.push_back({"f", "derived: a q^{n+1} / e"});
    e.integer_params = {{"n", 0, 10, IntCap::N}};
    e.constraints = {inside_disk("|a^2q^2/bcdef| < 1", [](P p) {
      return p.get("a") * qn(p, 1 - p.integer("n")) / (p.get("b") * p.get("c") * p.get("d"));
    })};
    auto sides = [](P p, O o) {
      const Scalar a = p.get("a"), ee = p.get("e");
      const Scalar f = a * qn(p, p.integer("n") + 1) / ee;
      return watson_sides(a, p.get("b"), p.get("c"), p.get("d"), ee, f, p.base(), o);
    };
    e.lhs = [sides](P p, O o) { return sides(p, o).lhs; };
    e.rhs = [sides](P p, O o) { return sides(p, o).rhs; };
    e.draw = [](ParamDraw& d) {
      Params p;
      p.set("q", d.q_inside());
      for (const char* n : {"a", "b", "c", "e"}) p.set(n, d.complex());
      const auto n = d.integer("n", 0, 10, IntCap::N);
      p.set_int("n", n);
      p.set("d", beyond(d, std::abs(p.get("a") * qn(p, 1 - n) / (p.get("b") * p.get("c")))));
      return p;
    };
    out.push_back(std::move(e));
  }
}

void add_functional_equations(std::vector<IdentityEntry>& out) {
  {
    auto e = make("F1", F, "f(a, z) = (1 - az) f(aq, z), f(a, z) = 1phi0(a; -; q, z)", "parameter shift of the q-binomial series",
                  decl({"a", "z", "q"}));
    e.constraints = {inside_disk("|z| < 1", [](P p) { return p.get("z"); })};
    e.lhs = [](P p, O o) { return eval_phi({{p.get("a")}, {}, p.base(), p.get("z")}, o); };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), z = p.get("z");
      return times(eval_phi({{a * Q(p)}, {}, p.base(), z}, o), 1.0 - a * z);
    };
    e.draw = [](ParamDraw& d) {
      Params p;
      p.set("q", d.q_inside());
      p.set("a", d.complex());
      p.set("z", d.complex(0.05, 0.8));
      return p;
    };
    out.push_back(std::move(e));
  }
  {
    auto e = make("F2", F, "(1 - z) f(a, z) = (1 - az) f(a, qz)", "argument shift of the q-binomial series",
                  decl({"a", "z", "q"}));
    e.constraints = {inside_disk("|z| < 1", [](P p) { return p.get("z"); })};
    e.lhs = [](P p, O o) { return times(eval_phi({{p.get("a")}, {}, p.base(), p.get("z")}, o), 1.0 - p.get("z")); };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), z = p.get("z");
      return times(eval_phi({{a}, {}, p.base(), Q(p) * z}, o), 1.0 - a * z);
    };
    out.push_back(std::move(e));
  }
  {
    auto e = make("F3", F, "c_k = (1 - aq^{k-1}) / (1 - q^k) c_{k-1}, c_0 = 1, iterated to (a;q)_k/(q;q)_k",
                  "coefficient recurrence of the q-binomial series", decl({"a", "q"}));
    e.integer_params = {{"k", 1, 30, IntCap::None}};
    e.lhs = [](P p, O) {
      const Scalar a = p.get("a"), q = Q(p);
      Scalar c(1.0), qj(1.0);
      for (std::int64_t j = 1; j <= p.integer("k"); ++j) {
        c *= (1.0 - a * qj) / (1.0 - qj * q);
        qj *= q;
      }
      return value_of(c);
    };
    e.rhs = [](P p, O o) {
      return value_of(poch_finite(p.get("a"), p.base(), p.integer("k"), o.policy) /
                      poch_finite(Q(p), p.base(), p.integer("k"), o.policy));
    };
    e.closed_form = true;
    out.push_back(std::move(e));
  }
  {
    auto e = make("F4", F,
                  "1psi1(a; q; q, z) = (a;q)_n / (q;q)_n z^n 1psi1(aq^n; q^{n+1}; q, z)",
                  "index shift of the bilateral q-binomial series", decl({"a", "z", "q"}));
    e.integer_params = {{"n", 0, 5, IntCap::None}};
    e.constraints = {inside_disk("|z| < 1", [](P p) { return p.get("z"); })};
    e.lhs = [](P p, O o) { return eval_psi({{p.get("a")}, {Q(p)}, p.base(), p.get("z")}, o); };
    e.rhs = [](P p, O o) {
      const Scalar a = p.get("a"), z = p.get("z");
      const auto n = p.integer("n");
      const SeriesResult s = eval_psi({{a * qn(p, n)}, {qn(p, n + 1)}, p.base(), z}, o);
      return times(s, finite_ratio({a}, {Q(p)}, p.base(), n, o.policy) * ipow(z, n));
    };
    out.push_back(std::move(e));
  }
}

Params draw_weights(ParamDraw& d, Params p) {
  const auto N = d.integer("N", 1, 9);
  p.set_int("N", N);
  for (std::int64_t k = 0; k < N; ++k) p.set("u" + std::to_string(k), d.complex());
  return p;
}

void add_expansions(std::vector<IdentityEntry>& out) {
  constexpr auto E = IdentityKind::Expansion;
  const ParamDecl weights{"u0..u8", "weights u_0..u_{N-1}"};
  auto side = [](const char* id, bool left) {
    return [id, left](P p, O o) {
      const ExpansionSides s = expansion_sides(id, weights_from_params(p), p, o);
      return left ? s.lhs : s.rhs;
    };
  };
  {
    auto e = make("E1", E, "u_0 = sum_j (a, q sqrt(a), -q sqrt(a);q)_j / (sqrt(a), -sqrt(a), aq^{j+1};q)_j (-1)^j q^{j(j-1)/2} "
                  "sum_k (q^{j+1}, aq^{j+1};q)_k / (q, aq^{2j+1};q)_k u_{j+k}",
                  "expansion over the 4W3 Kronecker delta", decl({"a", "q"}));
    e.params.push_back(weights);
    e.integer_params = {{"N", 1, 9, IntCap::None}};
    e.lhs = side("E1", true);
    e.rhs = side("E1", false);
    e.draw = [](ParamDraw& d) {
      Params p;
      p.set("q", d.q_inside());
      p.set("a", d.complex());
      return draw_weights(d, p);
    };
    out.push_back(std::move(e));
  }
  {
    auto e = make("E2", E, "A sum_k u_k = sum_j 6psi6 term_j sum_k (bcde/a^2, eq^j, eq^{-j}/a;q)_k / (be/a, ce/a, de/a;q)_k u_k",
                  "expansion over the 6psi6 sum", decl({"a", "b", "c", "d", "e", "q"}));
    e.params.push_back(weights);
    e.integer_params = {{"N", 1, 9, IntCap::None}};
    e.constraints = {inside_disk("|a^2q/bcde| |q|^{1-N} < 1", [](P p) {
      const Scalar a = p.get("a");
      const Scalar z = a * a * Q(p) / (p.get("b") * p.get("c") * p.get("d") * p.get("e"));
      return z * std::pow(std::abs(Q(p)), 1.0 - static_cast<double>(p.integer("N")));
    })};
    e.lhs = side("E2", true);
    e.rhs = side("E2", false);
    e.draw = [](ParamDraw& d) {
      Params p;
      p.set("q", d.q_inside());
      for (const char* n : {"a", "b", "c", "d"}) p.set(n, d.complex());
      p = draw_weights(d, p);
      const Scalar a = p.get("a");
      const double grow = std::pow(std::abs(Q(p)), 1.0 - static_cast<double>(p.integer("N")));
      p.set("e", beyond(d, std::abs(a * a * Q(p) / (p.get("b") * p.get("c") * p.get("d"))) * grow));
      return p;
    };
    out.push_back(std::move(e));
  }
  {
    auto e = make("E3", E, "B_n sum_k u_k = sum_j 8W7 term_j sum_{k<=j} (aq^j, q^{-j};q)_k / (b, a/b;q)_k u_k",
                  "expansion over the nonterminating 8W7 sum", decl({"a", "b", "d", "e", "q"}));
    e.params.push_back(weights);
    e.integer_params = {{"n", 0, 10, IntCap::N}, {"N", 1, 9, IntCap::None}};
    e.constraints = {inside_disk("|q^{1-n}/d| |q|^{1-N} < 1", [](P p) {
      return qn(p, 1 - p.integer("n")) / p.get("d") *
             std::pow(std::abs(Q(p)), 1.0 - static_cast<double>(p.integer("N")));
    })};
    e.lhs = side("E3", true);
    e.rhs = side("E3", false);
    e.draw = [](ParamDraw& d) {
      Params p;
      p.set("q", d.q_inside());
      for (const char* n : {"a", "b", "e"}) p.set(n, d.complex());
      const auto n = d.integer("n", 0, 10, IntCap::N);
      p.set_int("n", n);
      p = draw_weights(d, p);
      const double grow = std::pow(std::abs(Q(p)), 1.0 - static_cast<double>(p.integer("N")));
      p.set("d", beyond(d, std::abs(qn(p, 1 - n)) * grow));
      return p;
    };
    out.push_back(std::move(e));
  }
}

std::vector<IdentityEntry> build() {
  std::vector<IdentityEntry> out;
  add_summations(out);
  add_transformations(out);
  add_functional_equations(out);
  add_expansions(out);
  return out;
}

}  // namespace

const Registry& registry() {
  static const Registry instance(build());
  return instance;
}

}  // namespace qseries
