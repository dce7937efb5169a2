#pragma once

// Colorings with no red k-half-graph B^k: k-1 sets S, T, all of S + v
// (v in T) red and T + u red for some u in S.

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperramsey/certificate.hpp"
#include "hyperramsey/oracle.hpp"
#include "hyperramsey/structures.hpp"
#include "hyperramsey/tourney.hpp"

namespace hr::halfgraph {

struct HalfGraphPattern {
  unsigned k = 0;
  std::vector<Vertex> s, t;  // sorted, disjoint, k-1 each
  Vertex apex = 0;           // member of s

  /// The k edges {S + v : v in T} and {T + apex}, each sorted.
  std::vector<std::vector<Vertex>> edges() const;
};

/// Colors of the pairs of K_N drawn from {1..k-1}.
class PairColoring {
 public:
  PairColoring(std::uint64_t n, unsigned colors);

  std::uint64_t size() const { return n_; }
  unsigned colors() const { return colors_; }
  unsigned color(Vertex i, Vertex j) const { return c_[i * n_ + j]; }
  void set(Vertex i, Vertex j, unsigned color);

 private:
  std::uint64_t n_;
  unsigned colors_;
  std::vector<std::uint8_t> c_;
};

PairColoring random_pair_coloring(std::uint64_t n, unsigned colors, std::uint64_t seed);

/// Odd k: red iff the induced subtournament is regular (every in-degree
/// (k-1)/2).
Color chi_odd(const tourney::Tournament& t, std::span<const Vertex> subset);

/// Even k: red iff every vertex of the subset sees k-1 distinct colors on
/// its pairs, i.e. each color class is a perfect matching.
Color chi_even(const PairColoring& phi, std::span<const Vertex> subset);

class OddHalfgraphColoring final : public Coloring {
 public:
  OddHalfgraphColoring(tourney::Tournament t, unsigned k);
  unsigned uniformity() const override { return k_; }
  TowerSize size() const override { return {t_.size(), 0}; }
  Color color_of(std::span<const Vertex> s) const override;
  std::string describe() const override { return "halfgraph-odd"; }
  const tourney::Tournament& tournament() const { return t_; }

 private:
  tourney::Tournament t_;
  unsigned k_;
};

class EvenHalfgraphColoring final : public Coloring {
 public:
  EvenHalfgraphColoring(PairColoring phi, unsigned k);
  unsigned uniformity() const override { return k_; }
  TowerSize size() const override { return {phi_.size(), 0}; }
  Color color_of(std::span<const Vertex> s) const override;
  std::string describe() const override { return "halfgraph-even"; }
  const PairColoring& pairs() const { return phi_; }

 private:
  PairColoring phi_;
  unsigned k_;
};

struct HalfgraphBudget {
  /// Exhaustive enumeration when there are at most this many (k-1)-sets S.
  std::uint64_t exhaustive_limit = 5'000'000;
  /// Otherwise this many random (S, T) pairs.
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0;
};

struct HalfgraphSearch {
  std::optional<HalfGraphPattern> witness;
  bool exhaustive = false;
  std::uint64_t examined = 0;  // S sets (exhaustive) or samples
};

/// Red B^k copy (apex existentially quantified over S). With exhaustive
/// set, absence of a witness is a proof.
HalfgraphSearch find_red_halfgraph(const Coloring& coloring, const HalfgraphBudget& budget = {});

struct SteinerPacking {
  std::uint64_t n = 0;
  unsigned k = 0;
  std::vector<std::vector<Vertex>> blocks;
};

/// Lexicographic greedy partial Steiner (n,k,2)-system: every pair lies in
/// at most one block.
SteinerPacking greedy_partial_steiner(std::uint64_t n, unsigned k);

bool is_packing(const SteinerPacking& p);

/// Largest N with C(N, n) (1 - q)^blocks < 1, or 0 when even N = n fails.
std::uint64_t expected_blue_bound(unsigned k, std::uint64_t n, std::uint64_t blocks, double q);

/// Blue probability floor per k-set: 2^-C(k,2) (odd k), (k-1)^-C(k,2)
/// (even k).
double red_probability(unsigned k);

struct CertificateSearchOptions {
  HalfgraphBudget red_budget{};
  oracle::Budget blue_budget{};
  unsigned workers = 1;
};

/// Random constructions (tournament for odd k, pair coloring for even k),
/// each checked for red B^k and measured for its largest blue clique. Trial
/// i draws from stream (seed, i). Returns the certificate of the trial with
/// the smallest blue clique. SoundnessError on any red B^k.
Certificate search_certificate(unsigned k, std::uint64_t n, std::uint64_t seed,
                               std::uint64_t trials, const CertificateSearchOptions& opts = {});

/// The coloring built by trial `trial` of search_certificate.
std::shared_ptr<const Coloring> certificate_trial_coloring(unsigned k, std::uint64_t n,
                                                           std::uint64_t seed,
                                                           std::uint64_t trial);

}  // namespace hr::halfgraph
