#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hr {

/// Flat key=value run settings. Unknown keys are rejected.
struct RunConfig {
  std::uint64_t seed = 1;
  std::uint64_t budget_nodes = 50'000'000;  // budget.nodes
  std::uint64_t budget_trials = 100'000;    // budget.trials
  unsigned workers = 1;
  std::string output = "-";
  std::string cert;  // empty: no certificate file

  /// Applies one setting; FormatError on unknown keys or bad values.
  void set(const std::string& key, const std::string& value);
};

/// Validated key/value pairs in file order.
std::vector<std::pair<std::string, std::string>> config_entries(std::istream& in);

RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

}  // namespace hr
