#pragma once

// Lifting a (k-1)-graph H' on N vertices to a k-graph H on 2^N vertices so
// that H has no K_{k+2}^k while every s-independent set stays small.
//
// Edge rule for a_1 < ... < a_k with deltas d_1..d_{k-1}:
//   monotone deltas  -> edge iff {d_1..d_{k-1}} is an edge of H'
//   otherwise        -> edge iff the number of local extrema m(e) is
//                       k-4 or k-3 (at most one locally monotone entry)

#include <memory>
#include <vector>

#include "hyperramsey/delta.hpp"
#include "hyperramsey/structures.hpp"

namespace hr::rogers {

inline constexpr unsigned kMinLiftUniformity = 7;

/// Membership of `tuple` (k = base.k + 1 vertices, k >= 7) in the lift.
bool rogers_edge(const Hypergraph& base, std::span<const Vertex> tuple);

/// Same rule evaluated straight from a delta sequence of length k-1; the
/// base is only consulted for monotone sequences.
bool rogers_edge_from_deltas(const Hypergraph& base, std::span<const BitIndex> deltas);

class RogersLift final : public Hypergraph {
 public:
  explicit RogersLift(std::shared_ptr<const Hypergraph> base);

  unsigned uniformity() const override { return base_->uniformity() + 1; }
  TowerSize size() const override { return base_->size().exponentiated(); }
  bool is_edge(std::span<const Vertex> subset) const override;
  std::string describe() const override { return "rogers(" + base_->describe() + ")"; }

  const Hypergraph& base() const { return *base_; }

 private:
  std::shared_ptr<const Hypergraph> base_;
};

/// Deletion step for a 7-vertex chain with four local extrema: returns the
/// 1-based position i in {2..6} such that removing a_i leaves exactly two
/// local extrema.
///
/// If d_2 is a local minimum: delete a_3 when d_1 > d_3, else a_5. If d_2 is
/// a local maximum the same argument runs on the chain shifted by one
/// (where d_3 is a local minimum), which always lands on a_4.
std::size_t repair_seven(const VertexChain& chain);

/// k+1 vertices of `chain` whose recombined delta sequence alternates, i.e.
/// has exactly k-2 local extrema. Built from the first k extrema of the
/// chain: the endpoint pairs (a_i, a_{i+1}) of every other extremum, padded
/// with a_1 (and a_2) depending on whether the first extremum is a minimum
/// or maximum and on the parity of k.
VertexChain zigzag_extract(const VertexChain& chain, unsigned k);

/// Level 0 is the base; level j+1 is the Rogers lift of level j.
struct TowerStack {
  std::vector<std::shared_ptr<const Hypergraph>> levels;
};

TowerStack build_tower(std::shared_ptr<const Hypergraph> base, unsigned depth);

}  // namespace hr::rogers
