#include "hyperramsey/config.hpp"

#include <fstream>
#include <sstream>

#include "hyperramsey/errors.hpp"

namespace hr {

namespace {

std::uint64_t number(const std::string& key, const std::string& value) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
    throw FormatError("config key '" + key + "' needs a non-negative integer, got '" + value + "'");
  try {
    return std::stoull(value);
  } catch (const std::out_of_range&) {
    throw FormatError("config value for '" + key + "' out of range");
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "seed") {
    seed = number(key, value);
  } else if (key == "budget.nodes") {
    budget_nodes = number(key, value);
  } else if (key == "budget.trials") {
    budget_trials = number(key, value);
  } else if (key == "workers") {
    const auto w = number(key, value);
    if (w == 0 || w > 1024) throw FormatError("workers must be in 1..1024");
    workers = static_cast<unsigned>(w);
  } else if (key == "output") {
    output = value;
  } else if (key == "cert") {
    cert = value;
  } else {
    throw FormatError("unknown config key '" + key + "'");
  }
}

std::vector<std::pair<std::string, std::string>> config_entries(std::istream& in) {
  RunConfig check;
  std::vector<std::pair<std::string, std::string>> out;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw FormatError("config line " + std::to_string(lineno) + ": expected key=value");
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    check.set(out.back().first, out.back().second);
  }
  return out;
}

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  for (const auto& [k, v] : config_entries(in)) cfg.set(k, v);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open config '" + path + "'");
  return parse_config(in);
}

}  // namespace hr
