#pragma once

// Stepping-up colorings: a coloring on M vertices lifts to one of
// uniformity one higher on 2^M vertices, read off the delta sequence of each
// tuple.

#include <memory>

#include "hyperramsey/delta.hpp"
#include "hyperramsey/structures.hpp"

namespace hr::stepup {

/// 4-uniform rule over a 3-uniform base: monotone delta triples inherit the
/// base color of {d1,d2,d3}; everything else is blue.
Color chi4(const Coloring& base, std::span<const Vertex> quad);

/// k-uniform rule (k >= 5) over a (k-1)-uniform base: monotone delta
/// sequences inherit the base color of the delta set; otherwise red exactly
/// when d2 is a local maximum and d3 a local minimum.
Color chik(const Coloring& base, std::span<const Vertex> tuple);

enum class LiftMode { theorem4, lemmak };

const char* to_string(LiftMode m);

/// Implicit coloring on 2^M vertices delegating to chi4 / chik.
class LiftedColoring final : public Coloring {
 public:
  LiftedColoring(std::shared_ptr<const Coloring> base, LiftMode mode);

  unsigned uniformity() const override { return base_->uniformity() + 1; }
  TowerSize size() const override { return base_->size().exponentiated(); }
  Color color_of(std::span<const Vertex> subset) const override;
  std::string describe() const override;

  const Coloring& base() const { return *base_; }
  LiftMode mode() const { return mode_; }

 private:
  std::shared_ptr<const Coloring> base_;
  LiftMode mode_;
};

/// Wraps chi4 (mode theorem4, base.k == 3, k == 4) or chik (mode lemmak,
/// base.k == k - 1, k >= 5). Uniformity mismatches are DomainErrors.
std::shared_ptr<const LiftedColoring> lift(std::shared_ptr<const Coloring> base, LiftMode mode,
                                           unsigned k);

/// Greedy halving extraction of a delta-monotone subchain.
///
/// Runs 2t rounds over a shrinking window S of consecutive vertices: each
/// round records the unique largest delta of the window and keeps the
/// larger side of it (the left side on ties). A recorded delta is white when
/// the right side was kept and black otherwise. With >= t white labels the
/// white rounds give a chain with strictly decreasing deltas, else the black
/// rounds give one with strictly increasing deltas.
///
/// Returns t+1 vertices of `chain` (two when t == 0). Requires
/// chain.size() >= 4^t.
VertexChain extract_monotone_chain(const VertexChain& chain, unsigned t);

}  // namespace hr::stepup
