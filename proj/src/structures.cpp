#include "hyperramsey/structures.hpp"

#include "hyperramsey/errors.hpp"

namespace hr {

namespace {

constexpr std::uint64_t kMaxTable = std::uint64_t{1} << 32;

std::uint64_t table_size(unsigned k, std::uint64_t n) {
  const std::uint64_t c = binomial(n, k);
  if (c > kMaxTable)
    throw DomainError("explicit table of C(" + std::to_string(n) + "," + std::to_string(k) +
                      ") subsets is too large");
  return c;
}

}  // namespace

const char* to_string(Color c) { return c == Color::red ? "red" : "blue"; }

Color parse_color(const std::string& s) {
  if (s == "red" || s == "R") return Color::red;
  if (s == "blue" || s == "B") return Color::blue;
  throw DomainError("unknown color '" + s + "'");
}

ExplicitColoring::ExplicitColoring(unsigned k, std::uint64_t n, Color fill)
    : k_(k), n_(n), red_(table_size(k, n), fill == Color::red) {}

ExplicitColoring::ExplicitColoring(unsigned k, std::uint64_t n,
                                   const std::function<Color(std::span<const Vertex>)>& rule)
    : ExplicitColoring(k, n) {
  if (k > n) return;
  auto c = first_combination(k);
  do {
    red_[colex_rank(c)] = rule(c) == Color::red;
  } while (next_combination(c, n));
}

ExplicitColoring ExplicitColoring::from(const Coloring& c) {
  const auto n = concrete_size(c.size(), kMaxTable);
  return ExplicitColoring(c.uniformity(), n,
                          [&](std::span<const Vertex> s) { return c.color_of(s); });
}

Color ExplicitColoring::color_of(std::span<const Vertex> subset) const {
  require_sorted_subset(subset, k_, n_);
  return color_at_rank(colex_rank(subset));
}

void ExplicitColoring::set(std::span<const Vertex> subset, Color c) {
  require_sorted_subset(subset, k_, n_);
  set_at_rank(colex_rank(subset), c);
}

ExplicitHypergraph::ExplicitHypergraph(unsigned k, std::uint64_t n)
    : k_(k), n_(n), edge_(table_size(k, n), false) {}

ExplicitHypergraph::ExplicitHypergraph(unsigned k, std::uint64_t n,
                                       const std::function<bool(std::span<const Vertex>)>& rule)
    : ExplicitHypergraph(k, n) {
  if (k > n) return;
  auto c = first_combination(k);
  do {
    edge_[colex_rank(c)] = rule(c);
  } while (next_combination(c, n));
}

ExplicitHypergraph ExplicitHypergraph::from(const Hypergraph& h) {
  const auto n = concrete_size(h.size(), kMaxTable);
  return ExplicitHypergraph(h.uniformity(), n,
                            [&](std::span<const Vertex> s) { return h.is_edge(s); });
}

bool ExplicitHypergraph::is_edge(std::span<const Vertex> subset) const {
  require_sorted_subset(subset, k_, n_);
  return edge_[colex_rank(subset)];
}

void ExplicitHypergraph::set_edge(std::span<const Vertex> subset, bool present) {
  require_sorted_subset(subset, k_, n_);
  edge_[colex_rank(subset)] = present;
}

std::uint64_t ExplicitHypergraph::edge_count() const {
  std::uint64_t m = 0;
  for (bool b : edge_) m += b;
  return m;
}

std::vector<std::vector<Vertex>> ExplicitHypergraph::edges() const {
  std::vector<std::vector<Vertex>> out;
  for (std::uint64_t r = 0; r < edge_.size(); ++r)
    if (edge_[r]) out.push_back(colex_unrank(r, k_));
  return out;
}

SubsetPredicate color_predicate(const Coloring& c, Color color) {
  return {c.uniformity(), concrete_size(c.size(), ~std::uint64_t{0}),
          [&c, color](std::span<const Vertex> s) { return c.color_of(s) == color; }};
}

SubsetPredicate edge_predicate(const Hypergraph& h) {
  return {h.uniformity(), concrete_size(h.size(), ~std::uint64_t{0}),
          [&h](std::span<const Vertex> s) { return h.is_edge(s); }};
}

std::uint64_t concrete_size(const TowerSize& size, std::uint64_t limit) {
  auto v = size.value();
  if (!v || *v > limit)
    throw DomainError("universe of size " + size.to_string() + " cannot be enumerated here");
  return *v;
}

}  // namespace hr
