#pragma once

// Exact and sampling verification engines used by every construction.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperramsey/structures.hpp"

namespace hr::oracle {

enum class Status : std::uint8_t { exact, lower_bound, upper_bound };

const char* to_string(Status s);

struct SearchResult {
  std::uint64_t value = 0;
  std::vector<Vertex> witness;
  Status status = Status::exact;
  std::uint64_t nodes_explored = 0;
  double wall_time = 0.0;  // seconds
};

/// Search budgets count branch-and-bound nodes so results do not depend on
/// machine speed.
struct Budget {
  std::uint64_t nodes = 50'000'000;
};

/// Largest vertex set all of whose k-subsets satisfy `p`. Branch and bound
/// over vertex inclusion; candidates are ordered and bounded by a greedy
/// coloring of their pairwise compatibility graph. Sets smaller than k
/// qualify vacuously.
SearchResult max_clique(const SubsetPredicate& p, Budget budget = {});

/// Largest monochromatic clique of the given color.
SearchResult max_mono_clique(const Coloring& coloring, Color color, Budget budget = {});

/// Largest vertex set spanning no K_s^k of H (s >= k).
SearchResult alpha_s(const Hypergraph& h, unsigned s, Budget budget = {});

/// Size guaranteed for an independent set of a k-graph with N vertices and
/// |E| > N/k edges: (1 - 1/k) N (N / (k|E|))^(1/(k-1)).
double spencer_bound(std::uint64_t n, unsigned k, std::uint64_t edges);

/// Deletion method: keep each vertex with probability
/// p = (N / (k|E|))^(1/(k-1)), then drop one vertex from every surviving
/// edge. Attempts draw from stream (seed, attempt) until the set reaches
/// spencer_bound. Deterministic in (H, seed).
std::vector<Vertex> spencer_independent_set(const ExplicitHypergraph& h, std::uint64_t seed,
                                            std::uint64_t max_attempts = 100'000);

struct Violation {
  std::uint64_t trial = 0;
  std::vector<Vertex> subset;
};

struct SampleReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t universe = 0;
  std::size_t subset_size = 0;
  std::vector<Violation> violations;  // ordered by trial
};

/// Checks `predicate` on `trials` uniform subset_size-subsets of
/// {0..universe-1}; trial i draws from stream (seed, i), so the report does
/// not depend on `workers`.
SampleReport sample_verify(const std::function<bool(std::span<const Vertex>)>& predicate,
                           std::uint64_t universe, std::size_t subset_size, std::uint64_t trials,
                           std::uint64_t seed, unsigned workers = 1);

/// Runs body(i) for i in [0, count) on up to `workers` threads, contiguous
/// blocks per thread. Exceptions propagate (first one wins).
void parallel_for(std::uint64_t count, unsigned workers,
                  const std::function<void(std::uint64_t)>& body);

}  // namespace hr::oracle
