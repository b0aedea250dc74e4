#include "qseries/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace qseries {

namespace {

using Json = nlohmann::ordered_json;

Json complex_json(const Scalar& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json params_json(const Params& p) {
  Json out = Json::object();
  for (const auto& [name, v] : p.values()) out[name] = complex_json(v);
  for (const auto& [name, v] : p.ints()) out[name] = v;
  return out;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string complex_text(const Scalar& z) {
  std::string s = num(z.real());
  if (z.imag() >= 0 || std::isnan(z.imag())) s += "+";
  return s + num(z.imag()) + "i";
}

std::string params_text(const Params& p) {
  std::string out;
  for (const auto& [name, v] : p.values()) out += (out.empty() ? "" : ";") + name + "=" + complex_text(v);
  for (const auto& [name, v] : p.ints()) out += (out.empty() ? "" : ";") + name + "=" + std::to_string(v);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_report(const SuiteReport& r) {
  Json results = Json::array();
  for (const auto& rep : r.identities) {
    for (const auto& pt : rep.points) {
      results.push_back(Json{{"id", pt.id},
                             {"point_index", pt.point_index},
                             {"params", params_json(pt.params)},
                             {"lhs", complex_json(pt.check.lhs)},
                             {"rhs", complex_json(pt.check.rhs)},
                             {"rel_err", pt.check.rel_err},
                             {"verdict", to_string(pt.check.verdict)},
                             {"terms_used", pt.check.terms_used},
                             {"diagnostics", pt.check.diagnostics}});
    }
  }
  Json doc{{"meta", {{"seed", r.config.seed}, {"count", r.config.count}, {"tol", r.tol}, {"version", kVersion}}},
           {"results", std::move(results)},
           {"summary", {{"pass", r.pass}, {"fail", r.fail}, {"skip", r.skip}}}};
  return doc.dump(2) + "\n";
}

std::string csv_report(const SuiteReport& r) {
  std::ostringstream os;
  os << "id,point_index,verdict,rel_err,lhs_re,lhs_im,rhs_re,rhs_im,terms_used,params,diagnostics\n";
  for (const auto& rep : r.identities) {
    for (const auto& pt : rep.points) {
      const auto& c = pt.check;
      os << pt.id << ',' << pt.point_index << ',' << to_string(c.verdict) << ',' << num(c.rel_err) << ','
         << num(c.lhs.real()) << ',' << num(c.lhs.imag()) << ',' << num(c.rhs.real()) << ',' << num(c.rhs.imag())
         << ',' << c.terms_used << ',' << csv_field(params_text(pt.params)) << ',' << csv_field(c.diagnostics)
         << '\n';
    }
  }
  return os.str();
}

std::string text_report(const SuiteReport& r) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-6s %6s %6s %6s  %-12s\n", "id", "pass", "fail", "skip", "max rel err");
  os << line;
  for (const auto& rep : r.identities) {
    double worst = 0.0;
    for (const auto& pt : rep.points) {
      if (pt.check.verdict != Verdict::Skip) worst = std::max(worst, pt.check.rel_err);
    }
    std::snprintf(line, sizeof line, "%-6s %6lld %6lld %6lld  %.3e\n", rep.id.c_str(), static_cast<long long>(rep.pass),
                  static_cast<long long>(rep.fail), static_cast<long long>(rep.skip), worst);
    os << line;
  }
  std::snprintf(line, sizeof line, "total  %6lld %6lld %6lld  (seed %llu, count %lld, tol %g)\n",
                static_cast<long long>(r.pass), static_cast<long long>(r.fail), static_cast<long long>(r.skip),
                static_cast<unsigned long long>(r.config.seed), static_cast<long long>(r.config.count), r.tol);
  os << line;
  for (const auto& rep : r.identities) {
    for (const auto& pt : rep.points) {
      if (pt.check.verdict != Verdict::Fail) continue;
      os << "FAIL " << pt.id << " #" << pt.point_index << " " << params_text(pt.params) << "\n  lhs "
         << complex_text(pt.check.lhs) << "\n  rhs " << complex_text(pt.check.rhs) << "\n  " << pt.check.diagnostics
         << "\n";
    }
  }
  return os.str();
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw DomainError("unknown format '" + name + "' (json, csv, text)");
}

std::string emit_report(const SuiteReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return json_report(report);
    case ReportFormat::Csv: return csv_report(report);
    case ReportFormat::Text: return text_report(report);
  }
  return {};
}

std::string catalog(const Registry& reg, ReportFormat format) {
  if (format == ReportFormat::Json) {
    Json entries = Json::array();
    for (const auto& e : reg.entries()) {
      Json params = Json::array();
      for (const auto& p : e.params) params.push_back(Json{{"name", p.name}, {"domain", p.role}});
      Json ints = Json::array();
      for (const auto& p : e.integer_params) ints.push_back(Json{{"name", p.name}, {"lo", p.lo}, {"hi", p.hi}});
      Json cons = Json::array();
      for (const auto& c : e.constraints) cons.push_back(c.description);
      entries.push_back(Json{{"id", e.id},
                             {"kind", to_string(e.kind)},
                             {"formula", e.name},
                             {"citation", e.reference},
                             {"parameters", std::move(params)},
                             {"integer_parameters", std::move(ints)},
                             {"constraints", std::move(cons)}});
    }
    return Json{{"version", kVersion}, {"entries", std::move(entries)}}.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == ReportFormat::Csv) {
    os << "id,kind,citation,formula\n";
    for (const auto& e : reg.entries()) {
      os << e.id << ',' << to_string(e.kind) << ',' << csv_field(e.reference) << ',' << csv_field(e.name) << '\n';
    }
    return os.str();
  }
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& e : reg.entries()) {
    os << e.id << "\t" << to_string(e.kind) << "\t" << e.reference << "\n";
    const std::string fam = e.family();
    counts[fam == "S" ? 0 : fam == "T" ? 1 : fam == "F" ? 2 : 3]++;
  }
  os << counts[0] << " summation, " << counts[1] << " transformation, " << counts[2] << " functional-equation, "
     << counts[3] << " expansion entries\n";
  return os.str();
}

}  // namespace qseries
