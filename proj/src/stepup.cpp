#include "hyperramsey/stepup.hpp"

#include <algorithm>
#include <array>

#include "hyperramsey/errors.hpp"

namespace hr::stepup {

namespace {

constexpr std::size_t kMaxK = 64;

struct DeltaBuffer {
  std::array<BitIndex, kMaxK> data{};
  std::size_t len = 0;
  std::span<const BitIndex> view() const { return {data.data(), len}; }
};

DeltaBuffer tuple_deltas(const Coloring& base, std::span<const Vertex> tuple, unsigned k) {
  if (tuple.size() != k)
    throw DomainError("expected a " + std::to_string(k) + "-tuple, got " +
                      std::to_string(tuple.size()) + " vertices");
  if (k > kMaxK) throw DomainError("uniformity too large");
  const auto bits = base.size().value();
  DeltaBuffer d;
  for (std::size_t i = 0; i + 1 < tuple.size(); ++i) {
    if (tuple[i] >= tuple[i + 1]) throw DomainError("tuple vertices must be strictly increasing");
    d.data[d.len++] = delta(tuple[i], tuple[i + 1]);
  }
  // Vertices must live in {0..2^M-1}; equivalently every delta lies in the
  // base universe {0..M-1} and the top vertex has no bit >= M.
  if (bits && *bits < 64 && (tuple.back() >> *bits) != 0)
    throw DomainError("vertex " + std::to_string(tuple.back()) +
                      " outside lifted universe of size 2^" + std::to_string(*bits));
  return d;
}

Color base_color_of_deltas(const Coloring& base, std::span<const BitIndex> d) {
  std::array<Vertex, kMaxK> set{};
  for (std::size_t i = 0; i < d.size(); ++i) set[i] = d[i];
  std::sort(set.begin(), set.begin() + static_cast<std::ptrdiff_t>(d.size()));
  return base.color_of(std::span<const Vertex>(set.data(), d.size()));
}

}  // namespace

Color chi4(const Coloring& base, std::span<const Vertex> quad) {
  if (base.uniformity() != 3) throw DomainError("chi4 needs a 3-uniform base coloring");
  const auto d = tuple_deltas(base, quad, 4);
  if (!is_monotone(d.view())) return Color::blue;
  return base_color_of_deltas(base, d.view());
}

Color chik(const Coloring& base, std::span<const Vertex> tuple) {
  const unsigned k = base.uniformity() + 1;
  if (k < 5) throw DomainError("chik needs uniformity k >= 5 (base uniformity >= 4)");
  const auto d = tuple_deltas(base, tuple, k);
  const auto v = d.view();
  if (is_monotone(v)) return base_color_of_deltas(base, v);
  return is_local_max(v, 1) && is_local_min(v, 2) ? Color::red : Color::blue;
}

const char* to_string(LiftMode m) { return m == LiftMode::theorem4 ? "stepup4" : "stepupk"; }

LiftedColoring::LiftedColoring(std::shared_ptr<const Coloring> base, LiftMode mode)
    : base_(std::move(base)), mode_(mode) {
  if (!base_) throw DomainError("lift needs a base coloring");
}

Color LiftedColoring::color_of(std::span<const Vertex> subset) const {
  return mode_ == LiftMode::theorem4 ? chi4(*base_, subset) : chik(*base_, subset);
}

std::string LiftedColoring::describe() const {
  return std::string(to_string(mode_)) + "(" + base_->describe() + ")";
}

std::shared_ptr<const LiftedColoring> lift(std::shared_ptr<const Coloring> base, LiftMode mode,
                                           unsigned k) {
  if (!base) throw DomainError("lift needs a base coloring");
  const unsigned bk = base->uniformity();
  if (mode == LiftMode::theorem4) {
    if (bk != 3 || k != 4)
      throw DomainError("theorem4 lift maps a 3-uniform base to k = 4 (got base k = " +
                        std::to_string(bk) + ", k = " + std::to_string(k) + ")");
  } else {
    if (k < 5) throw DomainError("lemmak lift needs k >= 5");
    if (bk + 1 != k)
      throw DomainError("lemmak lift needs base uniformity k - 1 = " + std::to_string(k - 1) +
                        " (got " + std::to_string(bk) + ")");
  }
  return std::make_shared<const LiftedColoring>(std::move(base), mode);
}

VertexChain extract_monotone_chain(const VertexChain& chain, unsigned t) {
  const std::size_t n = chain.size();
  if (t >= 32 || n < (std::size_t{1} << (2 * t)))
    throw DomainError("insufficient chain length: need 4^t = " +
                      (t >= 32 ? std::string("2^64+") : std::to_string(std::size_t{1} << (2 * t))) +
                      " vertices, got " + std::to_string(n));
  if (n < 2) throw DomainError("insufficient chain length: need at least two vertices");
  if (t == 0) {
    const std::array<std::size_t, 2> first{0, 1};
    return subchain(chain, first);
  }

  const auto& d = chain.deltas;
  struct Round {
    std::size_t pos;
    bool white;
  };
  std::vector<Round> rounds;
  std::size_t r = 0, s = n - 1;
  for (unsigned h = 0; h < 2 * t; ++h) {
    if (s <= r) throw SoundnessError("halving window collapsed before 2t rounds");
    auto top = std::max_element(d.begin() + static_cast<std::ptrdiff_t>(r),
                                d.begin() + static_cast<std::ptrdiff_t>(s));
    const auto l = static_cast<std::size_t>(top - d.begin());
    const std::size_t left = l - r + 1, whole = s - r + 1;
    if (2 * left >= whole) {
      rounds.push_back({l, false});
      s = l;
    } else {
      rounds.push_back({l, true});
      r = l + 1;
    }
  }

  const auto whites = static_cast<unsigned>(
      std::count_if(rounds.begin(), rounds.end(), [](const Round& x) { return x.white; }));
  const bool use_white = whites >= t;
  std::vector<std::size_t> picked;
  for (const Round& x : rounds)
    if (x.white == use_white && picked.size() < t) picked.push_back(x.pos);

  std::vector<std::size_t> positions;
  if (use_white) {
    positions = picked;
    positions.push_back(picked.back() + 1);
  } else {
    positions.push_back(picked.back());
    for (auto it = picked.rbegin(); it != picked.rend(); ++it) positions.push_back(*it + 1);
  }
  VertexChain out = subchain(chain, positions);
  if (!is_monotone(out.deltas)) throw SoundnessError("extracted chain is not delta-monotone");
  return out;
}

}  // namespace hr::stepup
