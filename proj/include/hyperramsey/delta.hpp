#pragma once

// Bit-difference calculus shared by every stepping-up construction.
//
// For distinct vertices a, b, delta(a, b) is the highest bit position in
// which their binary expansions differ. Along an increasing chain
// a_1 < ... < a_r two facts hold and everything else is built on them:
//   - consecutive deltas differ: delta(a, b) != delta(b, c) for a < b < c;
//   - delta(a_1, a_r) is the maximum of the consecutive deltas.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperramsey/combinatorics.hpp"

namespace hr {

using BitIndex = unsigned;

/// Highest differing bit of a and b. Throws DomainError when a == b.
BitIndex delta(Vertex a, Vertex b);

/// Strictly increasing vertices together with their consecutive deltas.
struct VertexChain {
  std::vector<Vertex> vertices;
  std::vector<BitIndex> deltas;

  std::size_t size() const { return vertices.size(); }
  friend bool operator==(const VertexChain&, const VertexChain&) = default;
};

/// Builds the chain of a strictly increasing vertex list (length >= 2) and
/// validates its delta invariants.
VertexChain delta_sequence(std::span<const Vertex> vertices);

/// Chain on the vertices at the given (increasing) positions of `chain`.
/// Deltas are recombined, so they equal the window maxima of the parent.
VertexChain subchain(const VertexChain& chain, std::span<const std::size_t> positions);

/// `chain` with the vertex at 0-based `position` removed.
VertexChain remove_vertex(const VertexChain& chain, std::size_t position);

enum class DeltaLabel : std::uint8_t { endpoint, local_min, local_max, locally_monotone };

struct DeltaClassification {
  std::vector<DeltaLabel> labels;
  std::size_t extrema_count = 0;
};

/// Labels each interior entry by strict comparison with both neighbours.
/// Adjacent equal entries are a DomainError.
DeltaClassification classify(std::span<const BitIndex> deltas);

// Allocation-free pieces of classify() for hot loops. Inputs must already
// have distinct adjacent entries.
std::size_t count_extrema(std::span<const BitIndex> deltas);
std::size_t count_locally_monotone(std::span<const BitIndex> deltas);
bool is_monotone(std::span<const BitIndex> deltas);
bool is_local_max(std::span<const BitIndex> deltas, std::size_t i);
bool is_local_min(std::span<const BitIndex> deltas, std::size_t i);

/// True iff every contiguous window attains its maximum exactly once,
/// i.e. the list is the delta sequence of some increasing chain.
bool is_realizable(std::span<const BitIndex> deltas);

/// Lexicographically smallest increasing chain with the given deltas.
/// Throws DomainError for unrealizable input or bit indices >= 64.
VertexChain realize_delta_sequence(std::span<const BitIndex> deltas);

}  // namespace hr
