#pragma once

// Tournaments, the coloring <-> tournament transform, transitive
// subtournament search and explicit generators.

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperramsey/oracle.hpp"
#include "hyperramsey/structures.hpp"

namespace hr::tourney {

/// Orientation of K_N: exactly one of beats(i,j), beats(j,i) for i != j.
class Tournament {
 public:
  /// Transitive tournament 0 -> 1 -> ... -> N-1.
  explicit Tournament(std::uint64_t n);

  std::uint64_t size() const { return n_; }
  bool beats(Vertex i, Vertex j) const { return out_[i * n_ + j]; }
  /// Orients the pair {i, j} as i -> j.
  void orient(Vertex i, Vertex j);
  std::uint64_t outdegree(Vertex v) const;
  std::uint64_t indegree(Vertex v) const { return n_ - 1 - outdegree(v); }
  /// Out-degree of v inside `subset`.
  std::uint64_t outdegree_within(Vertex v, std::span<const Vertex> subset) const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  std::uint64_t n_;
  std::vector<bool> out_;
};

Tournament random_tournament(std::uint64_t n, std::uint64_t seed);

/// Red/blue coloring of the pairs of K_N, stored as a red adjacency matrix.
class GraphColoring2 final : public Coloring {
 public:
  explicit GraphColoring2(std::uint64_t n, Color fill = Color::blue);

  unsigned uniformity() const override { return 2; }
  TowerSize size() const override { return {n_, 0}; }
  std::uint64_t vertex_count() const { return n_; }
  Color color_of(std::span<const Vertex> subset) const override;
  std::string describe() const override { return description_; }

  Color color(Vertex i, Vertex j) const {
    return red_[i * n_ + j] ? Color::red : Color::blue;
  }
  void set(Vertex i, Vertex j, Color c);
  void set_description(std::string d) { description_ = std::move(d); }

  friend bool operator==(const GraphColoring2& a, const GraphColoring2& b) {
    return a.n_ == b.n_ && a.red_ == b.red_;
  }

 private:
  std::uint64_t n_;
  std::vector<bool> red_;
  std::string description_ = "explicit";
};

/// For i < j: i -> j when {i,j} is red, j -> i when blue.
Tournament coloring_to_tournament(const Coloring& chi);
GraphColoring2 tournament_to_coloring(const Tournament& t);

/// Induced subtournament on `subset` is acyclic.
bool is_transitive(const Tournament& t, std::span<const Vertex> subset);

/// The unique beating order of a transitive subset: every vertex beats all
/// later ones. DomainError when the subset is not transitive.
std::vector<Vertex> hamiltonian_path(const Tournament& t, std::span<const Vertex> subset);

struct MonochromaticChain {
  std::vector<std::size_t> indices;  // increasing positions into `order`
  Color color = Color::red;
};

/// n positions j_1 < ... < j_n of `order` whose consecutive pairs share a
/// color, found by the red/blue longest-chain dynamic program (the
/// Erdos-Szekeres step). Needs |order| >= n^2.
MonochromaticChain monochromatic_chain(std::span<const Vertex> order, const Coloring& chi,
                                       std::size_t n);

/// All pairs of `vertices` carry `color`.
bool is_monochromatic(const Coloring& chi, std::span<const Vertex> vertices, Color color);

/// Transitive subset of the transform of chi -> monochromatic clique of chi
/// of size n: orders by Hamiltonian path, runs monochromatic_chain and
/// checks every pair of the result. SoundnessError if the closure fails.
MonochromaticChain extract_clique_from_transitive(const Coloring& chi,
                                                  std::span<const Vertex> transitive,
                                                  std::size_t n);

/// Largest transitive subtournament. Include/exclude branch and bound:
/// candidates close no directed triangle with the current set, explored in
/// descending out-degree order, pruned by |set| + (bound on candidates).
oracle::SearchResult max_transitive(const Tournament& t, oracle::Budget budget = {});

/// Whether some transitive subtournament has at least `target` vertices.
bool has_transitive(const Tournament& t, std::size_t target);

bool is_prime(std::uint64_t q);
bool is_quadratic_residue(std::uint64_t x, std::uint64_t q);

/// Paley graph: {i,j} red iff i-j is a nonzero square mod q (q prime,
/// q = 1 mod 4).
GraphColoring2 paley_graph(std::uint64_t q);

/// i -> j iff j-i is a nonzero square mod q (q prime, q = 3 mod 4).
Tournament qr_tournament(std::uint64_t q);

/// Frankl-Wilson graph: vertices are the (p^2-1)-subsets of a p^3-set in
/// colex order; {A,B} red iff |A & B| != -1 (mod p). Implicit, vertices
/// are unranked on demand.
class FranklWilsonColoring final : public Coloring {
 public:
  explicit FranklWilsonColoring(std::uint64_t p);

  unsigned uniformity() const override { return 2; }
  TowerSize size() const override { return {n_, 0}; }
  Color color_of(std::span<const Vertex> subset) const override;
  std::string describe() const override { return "frankl-wilson(p=" + std::to_string(p_) + ")"; }

  std::uint64_t p() const { return p_; }
  std::uint64_t ground_size() const { return p_ * p_ * p_; }
  std::uint64_t set_size() const { return p_ * p_ - 1; }

 private:
  std::uint64_t p_;
  std::uint64_t n_;
};

std::shared_ptr<const FranklWilsonColoring> frankl_wilson_graph(std::uint64_t p);

/// Exact largest monochromatic clique inside `samples` random vertex
/// subsets of size `sample_size`; the best is a lower bound for the whole
/// graph.
oracle::SearchResult sampled_clique_probe(const Coloring& chi, Color color,
                                          std::size_t sample_size, std::uint64_t samples,
                                          std::uint64_t seed, oracle::Budget budget = {});

struct TResult {
  std::size_t n = 0;
  std::uint64_t max_n = 0;
  /// Smallest N <= max_n forcing a transitive n-subtournament, if found.
  std::optional<std::uint64_t> value;
  /// True when every N <= max_n was ruled out by a witness ("> max_n").
  bool exceeds_max = false;
  /// Largest N ruled out and its witness (no transitive n-subset).
  std::uint64_t witness_size = 0;
  std::optional<Tournament> witness;
  /// Per-N method: "trivial", "exhaustive", "outdegree", "witness".
  std::vector<std::pair<std::uint64_t, std::string>> transcript;
};

struct TSearchLimits {
  unsigned max_enumeration_pairs = 21;  // full enumeration up to 2^21 / 2
  std::uint64_t random_tries = 20'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

/// T(n): the least N such that every N-vertex tournament has a transitive
/// n-subtournament. For each N it tries a witness (quadratic residue
/// tournaments, random tournaments), then a proof: the out-degree argument
/// (some vertex has out-degree >= ceil((N-1)/2) >= T(n-1)) or exhaustive
/// enumeration with the edge 0 -> 1 fixed (reversal preserves transitivity).
/// A result with neither value nor exceeds_max means undetermined.
TResult compute_T(std::size_t n, std::uint64_t max_n, const TSearchLimits& limits = {});

}  // namespace hr::tourney
