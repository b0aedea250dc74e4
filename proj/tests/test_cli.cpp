#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "qseries/series.hpp"

using namespace qseries;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Scalar value_of(const std::string& json) {
  const Json j = Json::parse(json);
  return {j["value"]["re"].get<double>(), j["value"]["im"].get<double>()};
}

}  // namespace

TEST_CASE("parse_complex") {
  CHECK(cli::parse_complex("0.5") == Scalar(0.5, 0.0));
  CHECK(cli::parse_complex("-2") == Scalar(-2.0, 0.0));
  CHECK(cli::parse_complex("0.3+0.2i") == Scalar(0.3, 0.2));
  CHECK(cli::parse_complex("0.3-0.2i") == Scalar(0.3, -0.2));
  CHECK(cli::parse_complex("-1e-3+2E+1i") == Scalar(-1e-3, 20.0));
  CHECK(cli::parse_complex("1e-2i") == Scalar(0.0, 1e-2));
  CHECK(cli::parse_complex("i") == Scalar(0.0, 1.0));
  CHECK(cli::parse_complex("-i") == Scalar(0.0, -1.0));
  CHECK(cli::parse_complex(" 2-i ") == Scalar(2.0, -1.0));
  for (const char* bad : {"", "abc", "0.3+", "1..2", "0.3+0.2j", "2i3"}) {
    CHECK_THROWS_AS(cli::parse_complex(bad), DomainError);
  }
}

TEST_CASE("parse_list") {
  CHECK(cli::parse_list("").empty());
  CHECK(cli::parse_list("''").empty());
  const auto xs = cli::parse_list("0.5, 1+2i,-3");
  REQUIRE(xs.size() == 3);
  CHECK(xs[1] == Scalar(1.0, 2.0));
  CHECK_THROWS_AS(cli::parse_list("0.5,,1"), DomainError);
}

TEST_CASE("eval") {
  const Run r = invoke({"eval", "--kind", "phi", "--num", "0.5", "--den", "", "--q", "0.5", "--z", "0.25"});
  CHECK(r.code == 0);
  CHECK(std::abs(value_of(r.out) - 4.0 / 3.0) < 1e-15);
  const Json j = Json::parse(r.out);
  CHECK(j.contains("terms_used"));
  CHECK(j.contains("terminated"));
  CHECK(j.contains("tail_bound"));
  CHECK(invoke({"eval", "--num", "0.5", "--den", "''", "--q", "0.5", "--z", "0.25"}).out == r.out);

  const Run div = invoke({"eval", "--kind", "phi", "--num", "0.2", "--den", "", "--q", "0.5", "--z", "1.5"});
  CHECK(div.code == 3);
  CHECK_FALSE(div.err.empty());

  const Run w = invoke({"eval", "--kind", "w", "--a", "0.5", "--tail", "0.7,0.9,0.25", "--q", "0.4", "--z", "0.3"});
  CHECK(w.code == 0);
  const Scalar lib = eval_phi(expand_vwp(VwpSpec::make(0.5, {0.7, 0.9, 0.25}, QBase(0.4), 0.3))).value;
  CHECK(value_of(w.out) == lib);

  const Run psi = invoke({"eval", "--kind", "psi", "--num", "2", "--den", "0.3", "--q", "0.5", "--z", "0.5"});
  CHECK(psi.code == 0);
  CHECK(value_of(psi.out) == eval_psi({{2.0}, {0.3}, QBase(0.5), 0.5}).value);

  CHECK(invoke({"eval", "--num", "0.2", "--q", "1", "--z", "0.5"}).code == 2);
  CHECK(invoke({"eval", "--num", "0.2", "--q", "x", "--z", "0.5"}).code == 2);
  CHECK(invoke({"eval", "--kind", "w", "--q", "0.5", "--z", "0.5"}).code == 2);
  CHECK(invoke({"eval", "--kind", "chi", "--q", "0.5", "--z", "0.5"}).code == 2);
  CHECK(invoke({"eval", "--q", "0.5"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
}

TEST_CASE("check") {
  CHECK(invoke({"check", "--id", "S13", "--count", "50"}).code == 0);
  const Run bogus = invoke({"check", "--id", "BOGUS"});
  CHECK(bogus.code == 2);
  CHECK(bogus.err.find("BOGUS") != std::string::npos);
  const Run fam = invoke({"check", "--id", "S22", "--k", "3", "--seed", "7"});
  CHECK(fam.code == 0);
  CHECK(fam.out.find("S22") != std::string::npos);
  const Run js = invoke({"check", "--id", "S7", "--seed", "42", "--count", "100", "--tol", "1e-9", "--format", "json"});
  CHECK(js.code == 0);
  const Json j = Json::parse(js.out);
  CHECK(j["summary"]["pass"] == 100);
  CHECK(j["meta"]["seed"] == 42);
  // a tolerance below rounding makes points fail
  CHECK(invoke({"check", "--id", "S7", "--count", "20", "--tol", "1e-300"}).code == 1);
  CHECK(invoke({"check", "--id", "S7", "--count", "0"}).code == 2);
}

TEST_CASE("tolerance from environment, config file and flags") {
  const std::string path = "cli_test.cfg";
  std::ofstream(path) << "count = 7\ntol = 1e-8\nseed = 5\n";
  auto tol_of = [](const Run& r) { return Json::parse(r.out)["meta"]["tol"].get<double>(); };

  setenv("QS_DEFAULT_TOL", "1e-7", 1);
  CHECK(tol_of(invoke({"check", "--id", "S1", "--count", "3", "--format", "json"})) == 1e-7);
  const Run fromfile = invoke({"check", "--id", "S1", "--config", path, "--format", "json"});
  CHECK(tol_of(fromfile) == 1e-8);
  CHECK(Json::parse(fromfile.out)["meta"]["count"] == 7);
  CHECK(Json::parse(fromfile.out)["meta"]["seed"] == 5);
  CHECK(tol_of(invoke({"check", "--id", "S1", "--config", path, "--tol", "1e-6", "--format", "json"})) == 1e-6);
  unsetenv("QS_DEFAULT_TOL");
  CHECK(tol_of(invoke({"check", "--id", "S1", "--count", "3", "--format", "json"})) == 1e-9);

  std::ofstream(path) << "colour = blue\n";
  CHECK(invoke({"check", "--id", "S1", "--config", path}).code == 2);
  std::remove(path.c_str());
  CHECK(invoke({"check", "--id", "S1", "--config", "/nonexistent/qs.cfg"}).code == 2);
}

TEST_CASE("list") {
  const Run r = invoke({"list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("22 summation, 6 transformation, 4 functional-equation, 3 expansion") != std::string::npos);
  const Run j = invoke({"list", "--format", "json"});
  CHECK(j.code == 0);
  const Json cat = Json::parse(j.out);
  CHECK(cat["entries"].size() == 35);
  CHECK(cat["entries"][0]["id"] == "S1");
  CHECK(cat["entries"][0].contains("citation"));
  CHECK(cat["entries"][0].contains("constraints"));
}

TEST_CASE("suite output is reproducible") {
  const Run a = invoke({"suite", "--ids", "S1,T2, F4", "--seed", "1", "--count", "20", "--out", "cli_a.json"});
  const Run b = invoke({"suite", "--ids", "S1,T2, F4", "--seed", "1", "--count", "20", "--out", "cli_b.json"});
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  const std::string ja = slurp("cli_a.json"), jb = slurp("cli_b.json");
  CHECK_FALSE(ja.empty());
  CHECK(ja == jb);
  CHECK(Json::parse(ja)["summary"]["pass"] == 60);
  std::remove("cli_a.json");
  std::remove("cli_b.json");
  const Run csv = invoke({"suite", "--ids", "S1", "--count", "2", "--format", "csv"});
  CHECK(csv.out.rfind("id,point_index", 0) == 0);
  CHECK(invoke({"suite", "--ids", "S1,NOPE"}).code == 2);
  CHECK(invoke({"suite", "--ids", "S1", "--format", "yaml"}).code == 2);
}

TEST_CASE("expand") {
  const Run r = invoke({"expand", "--a", "0.5", "--tail", "0.7", "--q", "0.4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("numerators (4)") != std::string::npos);
  CHECK(r.out.find("denominators (3)") != std::string::npos);
  CHECK(r.out.find("4W3 -> 4phi3") != std::string::npos);
  CHECK(invoke({"expand", "--a", "0.5"}).code == 2);
}
