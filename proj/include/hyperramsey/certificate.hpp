#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hr {

inline constexpr const char* kToolVersion = "0.1.0";

/// Family name plus parameters identifying a construction; written as a
/// DSC file for implicit (2^N-vertex) objects.
struct Descriptor {
  std::string family;
  std::map<std::string, std::string> params;
  std::string base_digest;  // empty when there is no base file

  const std::string& param(const std::string& key) const;
  std::string param_or(const std::string& key, const std::string& fallback) const;
  std::uint64_t param_u64(const std::string& key) const;
  friend bool operator==(const Descriptor&, const Descriptor&) = default;
};

/// One verified property. status is exact, lower_bound, upper_bound or
/// zero-violation; budget is the node or trial budget the check ran under.
struct Claim {
  std::string property;
  std::string status;
  std::uint64_t value = 0;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> witness;  // optional, e.g. a clique or a B^k copy

  /// Whether the property is established: the status is final and, for
  /// assertion properties (no-clique, no-halfgraph, theorem5, red-free),
  /// the value satisfies the assertion.
  bool holds() const;
  /// Status final but assertion unsettled (budget exhausted).
  bool undecided() const;
  friend bool operator==(const Claim&, const Claim&) = default;
};

struct Certificate {
  Descriptor construction;
  std::uint64_t seed = 0;
  std::vector<Claim> claims;
  std::string tool_version = kToolVersion;
  std::string timestamp;

  bool all_hold() const;
};

}  // namespace hr
