#include "hyperramsey/combinatorics.hpp"

#include <cmath>
#include <limits>

#include "hyperramsey/errors.hpp"

namespace hr {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(r);
}

double log_binomial(double n, double k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

bool next_combination(std::span<Vertex> c, std::uint64_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

std::vector<Vertex> first_combination(std::size_t k) {
  std::vector<Vertex> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

std::uint64_t colex_rank(std::span<const Vertex> sorted) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) r += binomial(sorted[i], i + 1);
  return r;
}

std::vector<Vertex> colex_unrank(std::uint64_t rank, std::size_t k) {
  std::vector<Vertex> out(k);
  for (std::size_t i = k; i > 0; --i) {
    // largest c with C(c, i) <= rank
    Vertex lo = i - 1, hi = i - 1;
    while (binomial(hi, i) <= rank) hi = hi * 2 + 1;
    while (lo < hi) {
      Vertex mid = lo + (hi - lo + 1) / 2;
      if (binomial(mid, i) <= rank)
        lo = mid;
      else
        hi = mid - 1;
    }
    out[i - 1] = lo;
    rank -= binomial(lo, i);
  }
  return out;
}

std::optional<std::uint64_t> TowerSize::value() const {
  std::uint64_t v = base;
  for (unsigned h = 0; h < height; ++h) {
    if (v >= 64) return std::nullopt;
    v = std::uint64_t{1} << v;
  }
  return v;
}

std::string TowerSize::to_string() const {
  std::string s = std::to_string(base);
  for (unsigned h = 0; h < height; ++h) s = h == 0 ? "2^" + s : "2^(" + s + ")";
  return s;
}

std::optional<std::uint64_t> universe_bits(const TowerSize& size) {
  if (size.height == 0) return std::nullopt;
  return TowerSize{size.base, size.height - 1}.value();
}

void require_sorted_subset(std::span<const Vertex> subset, std::size_t k,
                           std::optional<std::uint64_t> n) {
  if (subset.size() != k)
    throw DomainError("expected a " + std::to_string(k) + "-subset, got " +
                      std::to_string(subset.size()) + " vertices");
  for (std::size_t i = 1; i < subset.size(); ++i)
    if (subset[i - 1] >= subset[i]) throw DomainError("subset vertices must be strictly increasing");
  if (n && !subset.empty() && subset.back() >= *n)
    throw DomainError("vertex " + std::to_string(subset.back()) + " outside universe of size " +
                      std::to_string(*n));
}

}  // namespace hr
