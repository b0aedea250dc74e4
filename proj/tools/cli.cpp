#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "qseries/config.hpp"
#include "qseries/harness.hpp"
#include "qseries/report.hpp"

namespace qseries::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

double to_double(const std::string& s, const std::string& whole) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw DomainError("cannot parse complex number '" + whole + "'");
  return x;
}

Json complex_json(const Scalar& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

struct EvalArgs {
  std::string kind = "phi";
  std::string num;
  std::string den;
  std::string q;
  std::string z;
  std::string a;
  std::string tail;
};

struct RunArgs {
  std::string id;
  std::string ids;
  std::string out;
  std::string format;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> count;
  std::optional<double> tol;
  std::optional<std::int64_t> k;
};

RunConfig resolve(const RunArgs& args) {
  RunConfig cfg;
  apply_environment(cfg);
  if (!args.config.empty()) load_config_file(args.config, cfg);
  if (args.seed) cfg.sample.seed = *args.seed;
  if (args.count) cfg.sample.count = *args.count;
  if (args.tol) cfg.tol = *args.tol;
  if (args.k) cfg.sample.fixed_ints["k"] = *args.k;
  cfg.sample.validate();
  return cfg;
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  if (a.q.empty()) throw DomainError("--q is required");
  if (a.z.empty()) throw DomainError("--z is required");
  const QBase q(parse_complex(a.q));
  const Scalar z = parse_complex(a.z);
  SeriesResult r;
  if (a.kind == "phi") {
    r = eval_phi({parse_list(a.num), parse_list(a.den), q, z});
  } else if (a.kind == "psi") {
    r = eval_psi({parse_list(a.num), parse_list(a.den), q, z});
  } else if (a.kind == "w") {
    if (a.a.empty()) throw DomainError("--kind w needs --a");
    r = eval_vwp(VwpSpec::make(parse_complex(a.a), parse_list(a.tail), q, z));
  } else {
    throw DomainError("--kind must be phi, psi or w");
  }
  out << Json{{"value", complex_json(r.value)},
              {"terms_used", r.terms_used},
              {"terminated", r.terminated},
              {"tail_bound", r.tail_bound}}
             .dump(2)
      << "\n";
  return kOk;
}

int cmd_check(const RunArgs& args, std::ostream& out) {
  const RunConfig cfg = resolve(args);
  registry().at(args.id);
  const SuiteReport rep = run_suite({args.id}, cfg.sample, {}, cfg.tol);
  out << emit_report(rep, parse_format(args.format.empty() ? "text" : args.format));
  return rep.fail == 0 ? kOk : kFailure;
}

int cmd_suite(const RunArgs& args, std::ostream& out) {
  const RunConfig cfg = resolve(args);
  std::vector<std::string> ids;
  if (args.ids.empty()) {
    ids = registry().ids();
  } else {
    std::stringstream ss(args.ids);
    for (std::string id; std::getline(ss, id, ',');) {
      id = trim(id);
      if (!id.empty()) ids.push_back(id);
    }
  }
  const SuiteReport rep = run_suite(ids, cfg.sample, {}, cfg.tol);
  const std::string text = emit_report(rep, parse_format(args.format.empty() ? "json" : args.format));
  if (args.out.empty()) {
    out << text;
  } else {
    std::ofstream f(args.out, std::ios::binary);
    if (!f) throw DomainError("cannot write " + args.out);
    f << text;
    out << "pass " << rep.pass << ", fail " << rep.fail << ", skip " << rep.skip << " -> " << args.out << "\n";
  }
  return rep.fail == 0 ? kOk : kFailure;
}

int cmd_expand(const EvalArgs& a, std::ostream& out) {
  if (a.a.empty() || a.q.empty()) throw DomainError("expand needs --a and --q");
  const Scalar z = a.z.empty() ? Scalar(0.0) : parse_complex(a.z);
  const VwpSpec spec = VwpSpec::make(parse_complex(a.a), parse_list(a.tail), QBase(parse_complex(a.q)), z);
  const PhiSpec phi = expand_vwp(spec);
  auto print = [&](const char* label, const std::vector<Scalar>& xs) {
    out << label << " (" << xs.size() << "):";
    for (const auto& x : xs) {
      char buf[80];
      std::snprintf(buf, sizeof buf, " %.17g%+.17gi", x.real(), x.imag());
      out << buf;
    }
    out << "\n";
  };
  out << spec.tail.size() + 3 << "W" << spec.tail.size() + 2 << " -> " << phi.numerators.size() << "phi"
      << phi.denominators.size() << "\n";
  print("numerators", phi.numerators);
  print("denominators", phi.denominators);
  return kOk;
}

}  // namespace

Scalar parse_complex(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) throw DomainError("empty complex number");
  if (s.back() != 'i') return Scalar(to_double(s, raw), 0.0);
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [&](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return to_double(t, raw);
  };
  if (split == std::string::npos) return Scalar(0.0, imag_part(body));
  return Scalar(to_double(body.substr(0, split), raw), imag_part(body.substr(split)));
}

std::vector<Scalar> parse_list(const std::string& text) {
  std::vector<Scalar> out;
  const std::string t = trim(text);
  if (t.empty() || t == "''" || t == "\"\"") return out;
  std::stringstream ss(t);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_complex(item));
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Basic hypergeometric series: evaluation and identity checking", "qseries"};
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "evaluate a phi, psi or very-well-poised W series");
  eval->add_option("--kind", ev.kind, "phi | psi | w")->check(CLI::IsMember({"phi", "psi", "w"}));
  eval->add_option("--num", ev.num, "numerator parameters, comma separated");
  eval->add_option("--den", ev.den, "denominator parameters, comma separated ('' for none)");
  eval->add_option("--q", ev.q, "base")->required();
  eval->add_option("--z", ev.z, "argument")->required();
  eval->add_option("--a", ev.a, "leading parameter of W");
  eval->add_option("--tail", ev.tail, "remaining parameters of W");

  RunArgs ck;
  auto* check = app.add_subcommand("check", "sample and check one identity");
  check->add_option("--id", ck.id, "registry id, e.g. S7")->required();
  check->add_option("--seed", ck.seed);
  check->add_option("--count", ck.count);
  check->add_option("--tol", ck.tol);
  check->add_option("--k", ck.k, "family size for S22");
  check->add_option("--format", ck.format, "text | json | csv");
  check->add_option("--config", ck.config, "key = value config file");

  RunArgs st;
  auto* suite = app.add_subcommand("suite", "check every (or the listed) identities");
  suite->add_option("--ids", st.ids, "comma separated ids; default all");
  suite->add_option("--out", st.out, "report path; default stdout");
  suite->add_option("--format", st.format, "json | csv | text");
  suite->add_option("--seed", st.seed);
  suite->add_option("--count", st.count);
  suite->add_option("--tol", st.tol);
  suite->add_option("--config", st.config, "key = value config file");

  std::string list_format = "text";
  auto* list = app.add_subcommand("list", "print the registry catalog");
  list->add_option("--format", list_format, "text | json | csv");

  EvalArgs ex;
  auto* expand = app.add_subcommand("expand", "show the phi parameter lists of a W series");
  expand->add_option("--a", ex.a)->required();
  expand->add_option("--tail", ex.tail);
  expand->add_option("--q", ex.q)->required();
  expand->add_option("--z", ex.z);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(ev, out);
    if (*check) return cmd_check(ck, out);
    if (*suite) return cmd_suite(st, out);
    if (*list) {
      out << catalog(registry(), parse_format(list_format));
      return kOk;
    }
    if (*expand) return cmd_expand(ex, out);
  } catch (const DivergenceError& e) {
    err << "divergent: " << e.what() << "\n";
    return kDivergence;
  } catch (const BudgetError& e) {
    err << "no convergence: " << e.what() << "\n";
    return kDivergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qseries"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qseries::cli
