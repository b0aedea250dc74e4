#include "qseries/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qseries/errors.hpp"

namespace qseries {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw DomainError("config: '" + key + "' expects a number, got '" + v + "'");
}

long long to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw DomainError("config: '" + key + "' expects an integer, got '" + v + "'");
}

}  // namespace

void apply_environment(RunConfig& cfg) {
  if (const char* v = std::getenv("QS_DEFAULT_TOL"); v && *v) cfg.tol = to_double("QS_DEFAULT_TOL", v);
}

void parse_config(const std::string& text, RunConfig& cfg) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw DomainError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    auto& s = cfg.sample;
    if (key == "seed") s.seed = static_cast<std::uint64_t>(to_int(key, val));
    else if (key == "count") s.count = to_int(key, val);
    else if (key == "tol") cfg.tol = to_double(key, val);
    else if (key == "margin") s.margin = to_double(key, val);
    else if (key == "q_min") s.q_min = to_double(key, val);
    else if (key == "q_max") s.q_max = to_double(key, val);
    else if (key == "n_max") s.n_max = to_int(key, val);
    else if (key == "k_max") s.k_max = to_int(key, val);
    else throw DomainError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  parse_config(buf.str(), cfg);
}

}  // namespace qseries
