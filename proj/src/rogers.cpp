#include "hyperramsey/rogers.hpp"

#include <algorithm>
#include <array>

#include "hyperramsey/errors.hpp"

namespace hr::rogers {

namespace {

constexpr std::size_t kMaxK = 64;

void require_lift_uniformity(unsigned k) {
  if (k < kMinLiftUniformity)
    throw DomainError("rogers lift needs k >= 7, got k = " + std::to_string(k));
}

}  // namespace

bool rogers_edge_from_deltas(const Hypergraph& base, std::span<const BitIndex> d) {
  const unsigned k = static_cast<unsigned>(d.size()) + 1;
  require_lift_uniformity(k);
  if (is_monotone(d)) {
    std::array<Vertex, kMaxK> set{};
    for (std::size_t i = 0; i < d.size(); ++i) set[i] = d[i];
    std::sort(set.begin(), set.begin() + static_cast<std::ptrdiff_t>(d.size()));
    return base.is_edge(std::span<const Vertex>(set.data(), d.size()));
  }
  const std::size_t m = count_extrema(d);
  return m == k - 4 || m == k - 3;
}

bool rogers_edge(const Hypergraph& base, std::span<const Vertex> tuple) {
  const unsigned k = base.uniformity() + 1;
  require_lift_uniformity(k);
  if (tuple.size() != k || k > kMaxK)
    throw DomainError("expected a " + std::to_string(k) + "-tuple, got " +
                      std::to_string(tuple.size()) + " vertices");
  std::array<BitIndex, kMaxK> d{};
  for (std::size_t i = 0; i + 1 < tuple.size(); ++i) {
    if (tuple[i] >= tuple[i + 1]) throw DomainError("tuple vertices must be strictly increasing");
    d[i] = delta(tuple[i], tuple[i + 1]);
  }
  const auto bits = base.size().value();
  if (bits && *bits < 64 && (tuple.back() >> *bits) != 0)
    throw DomainError("vertex " + std::to_string(tuple.back()) +
                      " outside lifted universe of size 2^" + std::to_string(*bits));
  return rogers_edge_from_deltas(base, std::span<const BitIndex>(d.data(), k - 1));
}

RogersLift::RogersLift(std::shared_ptr<const Hypergraph> base) : base_(std::move(base)) {
  if (!base_) throw DomainError("rogers lift needs a base hypergraph");
  require_lift_uniformity(base_->uniformity() + 1);
}

bool RogersLift::is_edge(std::span<const Vertex> subset) const { return rogers_edge(*base_, subset); }

std::size_t repair_seven(const VertexChain& chain) {
  if (chain.size() != 7) throw DomainError("repair_seven needs a 7-vertex chain");
  const auto& dz = chain.deltas;
  if (count_extrema(dz) != 4)
    throw DomainError("repair_seven needs exactly 4 local extrema, got " +
                      std::to_string(count_extrema(dz)));
  // 1-based view: d(j) = delta_j.
  auto d = [&](std::size_t j) { return dz[j - 1]; };

  // Chain read from a_{1+s}: there delta'_2 = delta_{2+s} is a local minimum.
  auto from_local_min = [&](std::size_t s) -> std::size_t {
    return d(1 + s) > d(3 + s) ? 3 + s : 5 + s;
  };

  std::size_t i = 0;
  if (d(2) < d(1))
    i = from_local_min(0);
  else if (d(4) > d(2))
    i = 4;
  else
    i = from_local_min(1);

  if (count_extrema(remove_vertex(chain, i - 1).deltas) != 2)
    throw SoundnessError("repair_seven: deleting a_" + std::to_string(i) +
                         " did not leave two extrema");
  return i;
}

VertexChain zigzag_extract(const VertexChain& chain, unsigned k) {
  if (k < 2) throw DomainError("zigzag_extract needs k >= 2");
  const auto& d = chain.deltas;
  std::vector<std::size_t> ext;
  for (std::size_t i = 1; i + 1 < d.size() && ext.size() < k; ++i)
    if (is_local_max(d, i) || is_local_min(d, i)) ext.push_back(i);
  if (ext.size() < k)
    throw DomainError("zigzag_extract needs at least k = " + std::to_string(k) +
                      " local extrema, got " + std::to_string(count_extrema(d)));

  // Extremum at delta index p joins vertices p and p+1 (0-based).
  std::vector<std::size_t> pos;
  auto take_pairs = [&](std::size_t first, std::size_t last) {
    for (std::size_t j = first; j <= last; j += 2) {
      pos.push_back(ext[j]);
      pos.push_back(ext[j] + 1);
    }
  };
  const bool first_is_min = is_local_min(d, ext[0]);
  const bool odd = k % 2 == 1;
  if (first_is_min) {
    if (odd) {
      take_pairs(0, k - 1);
    } else {
      pos.push_back(0);
      take_pairs(0, k - 2);
    }
  } else {
    if (odd) {
      pos.push_back(0);
      pos.push_back(1);
      take_pairs(1, k - 2);
    } else {
      pos.push_back(0);
      take_pairs(1, k - 1);
    }
  }

  VertexChain out = subchain(chain, pos);
  if (out.size() != k + 1 || count_extrema(out.deltas) != k - 2)
    throw SoundnessError("zigzag_extract produced a chain without k-2 extrema");
  return out;
}

TowerStack build_tower(std::shared_ptr<const Hypergraph> base, unsigned depth) {
  if (!base) throw DomainError("build_tower needs a base hypergraph");
  if (depth > 0) require_lift_uniformity(base->uniformity() + 1);
  TowerStack stack;
  stack.levels.push_back(std::move(base));
  for (unsigned j = 0; j < depth; ++j)
    stack.levels.push_back(std::make_shared<const RogersLift>(stack.levels.back()));
  return stack;
}

}  // namespace hr::rogers
