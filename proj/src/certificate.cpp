#include "hyperramsey/certificate.hpp"

#include <algorithm>

#include "hyperramsey/errors.hpp"

namespace hr {

const std::string& Descriptor::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw DomainError("descriptor is missing parameter '" + key + "'");
  return it->second;
}

std::string Descriptor::param_or(const std::string& key, const std::string& fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::uint64_t Descriptor::param_u64(const std::string& key) const {
  const auto& v = param(key);
  try {
    std::size_t used = 0;
    const auto x = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw DomainError("parameter '" + key + "' is not a non-negative integer: " + v);
  }
}

namespace {

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

// Trailing ":<int>" of a property such as "no-clique:red:5".
std::uint64_t trailing_number(const std::string& s) {
  const auto colon = s.rfind(':');
  if (colon == std::string::npos) throw FormatError("property has no size: " + s);
  return std::stoull(s.substr(colon + 1));
}

bool final_status(const std::string& status) {
  return status == "exact" || status == "zero-violation";
}

}  // namespace

bool Claim::holds() const {
  if (starts_with(property, "no-clique")) {
    if (value >= trailing_number(property)) return false;
    return final_status(status);
  }
  if (starts_with(property, "no-halfgraph") || starts_with(property, "theorem5") ||
      starts_with(property, "red-free"))
    return value == 0 && final_status(status);
  return final_status(status);
}

bool Claim::undecided() const {
  if (holds()) return false;
  if (starts_with(property, "no-clique")) return value < trailing_number(property);
  if (starts_with(property, "no-halfgraph") || starts_with(property, "theorem5") ||
      starts_with(property, "red-free"))
    return value == 0;
  return true;
}

bool Certificate::all_hold() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.holds(); });
}

}  // namespace hr
