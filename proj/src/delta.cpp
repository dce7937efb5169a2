#include "hyperramsey/delta.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hyperramsey/errors.hpp"

namespace hr {

BitIndex delta(Vertex a, Vertex b) {
  if (a == b) throw DomainError("delta undefined on equal vertices");
  return static_cast<BitIndex>(std::bit_width(a ^ b) - 1);
}

namespace {

void check_chain(const VertexChain& c) {
  for (std::size_t i = 1; i < c.deltas.size(); ++i)
    if (c.deltas[i - 1] == c.deltas[i])
      throw SoundnessError("adjacent deltas coincide at position " + std::to_string(i));
}

}  // namespace

VertexChain delta_sequence(std::span<const Vertex> vertices) {
  if (vertices.size() < 2) throw DomainError("a chain needs at least two vertices");
  VertexChain c;
  c.vertices.assign(vertices.begin(), vertices.end());
  c.deltas.reserve(vertices.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (vertices[i] >= vertices[i + 1])
      throw DomainError("chain vertices must be strictly increasing");
    c.deltas.push_back(delta(vertices[i], vertices[i + 1]));
  }
  check_chain(c);
  return c;
}

VertexChain subchain(const VertexChain& chain, std::span<const std::size_t> positions) {
  std::vector<Vertex> vs;
  vs.reserve(positions.size());
  for (std::size_t p : positions) {
    if (p >= chain.size()) throw DomainError("subchain position out of range");
    vs.push_back(chain.vertices[p]);
  }
  return delta_sequence(vs);
}

VertexChain remove_vertex(const VertexChain& chain, std::size_t position) {
  if (position >= chain.size()) throw DomainError("vertex position out of range");
  std::vector<Vertex> vs = chain.vertices;
  vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(position));
  return delta_sequence(vs);
}

bool is_local_max(std::span<const BitIndex> d, std::size_t i) {
  return i > 0 && i + 1 < d.size() && d[i - 1] < d[i] && d[i] > d[i + 1];
}

bool is_local_min(std::span<const BitIndex> d, std::size_t i) {
  return i > 0 && i + 1 < d.size() && d[i - 1] > d[i] && d[i] < d[i + 1];
}

std::size_t count_extrema(std::span<const BitIndex> d) {
  std::size_t m = 0;
  for (std::size_t i = 1; i + 1 < d.size(); ++i)
    if ((d[i - 1] < d[i]) == (d[i + 1] < d[i])) ++m;
  return m;
}

std::size_t count_locally_monotone(std::span<const BitIndex> d) {
  return d.size() < 2 ? 0 : d.size() - 2 - count_extrema(d);
}

bool is_monotone(std::span<const BitIndex> d) {
  if (d.size() < 2) return true;
  const bool up = d[0] < d[1];
  for (std::size_t i = 1; i < d.size(); ++i)
    if ((d[i - 1] < d[i]) != up || d[i - 1] == d[i]) return false;
  return true;
}

DeltaClassification classify(std::span<const BitIndex> d) {
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i - 1] == d[i])
      throw DomainError("adjacent delta entries are equal at position " + std::to_string(i));
  DeltaClassification out;
  out.labels.assign(d.size(), DeltaLabel::endpoint);
  for (std::size_t i = 1; i + 1 < d.size(); ++i) {
    if (is_local_max(d, i))
      out.labels[i] = DeltaLabel::local_max;
    else if (is_local_min(d, i))
      out.labels[i] = DeltaLabel::local_min;
    else
      out.labels[i] = DeltaLabel::locally_monotone;
    if (out.labels[i] != DeltaLabel::locally_monotone) ++out.extrema_count;
  }
  return out;
}

bool is_realizable(std::span<const BitIndex> d) {
  if (d.empty()) return true;
  auto top = std::max_element(d.begin(), d.end());
  if (std::count(d.begin(), d.end(), *top) != 1) return false;
  const auto split = static_cast<std::size_t>(top - d.begin());
  return is_realizable(d.subspan(0, split)) && is_realizable(d.subspan(split + 1));
}

namespace {

// Minimal realization relative to offset 0: the prefix left of the window
// maximum M lives below 2^M, the suffix is shifted up by exactly 2^M.
void realize_into(std::span<const BitIndex> d, Vertex offset, std::vector<Vertex>& out) {
  if (d.empty()) {
    out.push_back(offset);
    return;
  }
  auto top = std::max_element(d.begin(), d.end());
  const auto split = static_cast<std::size_t>(top - d.begin());
  realize_into(d.subspan(0, split), offset, out);
  realize_into(d.subspan(split + 1), offset + (Vertex{1} << *top), out);
}

}  // namespace

VertexChain realize_delta_sequence(std::span<const BitIndex> d) {
  if (d.empty()) throw DomainError("a chain needs at least one delta");
  if (!is_realizable(d)) throw DomainError("delta sequence is not realizable");
  if (*std::max_element(d.begin(), d.end()) >= 64)
    throw DomainError("bit index exceeds 64-bit vertex width");
  std::vector<Vertex> vs;
  vs.reserve(d.size() + 1);
  realize_into(d, 0, vs);
  return delta_sequence(vs);
}

}  // namespace hr
