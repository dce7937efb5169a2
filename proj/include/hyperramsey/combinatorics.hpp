#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hr {

using Vertex = std::uint64_t;

// n choose k, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Natural log of n choose k via lgamma; -inf when k > n.
double log_binomial(double n, double k);

// Lexicographic successor of a sorted k-subset of {0..n-1}. Returns false
// (leaving c untouched) when c is already the last subset.
bool next_combination(std::span<Vertex> c, std::uint64_t n);

std::vector<Vertex> first_combination(std::size_t k);

// Colexicographic rank of a sorted subset: sum of C(c_i, i+1).
std::uint64_t colex_rank(std::span<const Vertex> sorted);
std::vector<Vertex> colex_unrank(std::uint64_t rank, std::size_t k);

// Calls f(std::span<const Vertex>) for every size-k sub-multiset of `items`
// taken by position, in lexicographic order of positions. f may return
// false to stop early; the function returns false if it was stopped.
template <class F>
bool for_each_subset(std::span<const Vertex> items, std::size_t k, F&& f) {
  if (k > items.size()) return true;
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i;
  std::vector<Vertex> sub(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) sub[i] = items[pos[i]];
    if (!f(std::span<const Vertex>(sub))) return false;
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == items.size() - k + (i - 1)) --i;
    if (i == 0) return true;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

// Vertex counts of stepped-up universes: `height` applications of x -> 2^x
// to `base`. Level-2 towers are far beyond 64 bits and stay symbolic.
struct TowerSize {
  std::uint64_t base = 0;
  unsigned height = 0;

  std::optional<std::uint64_t> value() const;
  TowerSize exponentiated() const { return {base, height + 1}; }
  std::string to_string() const;
  friend bool operator==(const TowerSize&, const TowerSize&) = default;
};

// Bit width needed to address the vertices of a universe of this size
// (i.e. the previous tower level), when representable.
std::optional<std::uint64_t> universe_bits(const TowerSize& size);

// Throws DomainError unless `subset` is strictly increasing, has size k and
// lies below n.
void require_sorted_subset(std::span<const Vertex> subset, std::size_t k,
                           std::optional<std::uint64_t> n);

}  // namespace hr
