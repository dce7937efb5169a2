#pragma once

// Colorings and hypergraphs over k-subsets, either backed by a table or
// computed on demand from a base object (stepped-up universes are never
// materialized).

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperramsey/combinatorics.hpp"

namespace hr {

enum class Color : std::uint8_t { red, blue };

constexpr Color opposite(Color c) { return c == Color::red ? Color::blue : Color::red; }
const char* to_string(Color c);
Color parse_color(const std::string& s);

/// Red/blue coloring of the k-subsets of {0..N-1}. Subsets are passed
/// sorted ascending; implementations are pure and thread-safe.
class Coloring {
 public:
  virtual ~Coloring() = default;
  virtual unsigned uniformity() const = 0;
  virtual TowerSize size() const = 0;
  virtual Color color_of(std::span<const Vertex> subset) const = 0;
  /// Provenance, e.g. "explicit" or "stepup4(explicit)".
  virtual std::string describe() const = 0;
};

/// k-uniform hypergraph given by an edge predicate on sorted k-subsets.
class Hypergraph {
 public:
  virtual ~Hypergraph() = default;
  virtual unsigned uniformity() const = 0;
  virtual TowerSize size() const = 0;
  virtual bool is_edge(std::span<const Vertex> subset) const = 0;
  virtual std::string describe() const = 0;
};

/// Table-backed coloring indexed by colex rank.
class ExplicitColoring final : public Coloring {
 public:
  ExplicitColoring(unsigned k, std::uint64_t n, Color fill = Color::blue);
  ExplicitColoring(unsigned k, std::uint64_t n,
                   const std::function<Color(std::span<const Vertex>)>& rule);
  /// Materializes any coloring whose universe is small enough.
  static ExplicitColoring from(const Coloring& c);

  unsigned uniformity() const override { return k_; }
  TowerSize size() const override { return {n_, 0}; }
  std::uint64_t vertex_count() const { return n_; }
  Color color_of(std::span<const Vertex> subset) const override;
  std::string describe() const override { return "explicit"; }

  void set(std::span<const Vertex> subset, Color c);
  Color color_at_rank(std::uint64_t rank) const { return red_[rank] ? Color::red : Color::blue; }
  void set_at_rank(std::uint64_t rank, Color c) { red_[rank] = c == Color::red; }
  std::uint64_t subset_count() const { return red_.size(); }

 private:
  unsigned k_;
  std::uint64_t n_;
  std::vector<bool> red_;
};

/// Table-backed hypergraph indexed by colex rank.
class ExplicitHypergraph final : public Hypergraph {
 public:
  ExplicitHypergraph(unsigned k, std::uint64_t n);
  ExplicitHypergraph(unsigned k, std::uint64_t n,
                     const std::function<bool(std::span<const Vertex>)>& rule);
  static ExplicitHypergraph from(const Hypergraph& h);

  unsigned uniformity() const override { return k_; }
  TowerSize size() const override { return {n_, 0}; }
  std::uint64_t vertex_count() const { return n_; }
  bool is_edge(std::span<const Vertex> subset) const override;
  std::string describe() const override { return "explicit"; }

  void set_edge(std::span<const Vertex> subset, bool present);
  std::uint64_t edge_count() const;
  std::vector<std::vector<Vertex>> edges() const;

 private:
  unsigned k_;
  std::uint64_t n_;
  std::vector<bool> edge_;
};

class EmptyHypergraph final : public Hypergraph {
 public:
  EmptyHypergraph(unsigned k, std::uint64_t n) : k_(k), n_(n) {}
  unsigned uniformity() const override { return k_; }
  TowerSize size() const override { return {n_, 0}; }
  bool is_edge(std::span<const Vertex>) const override { return false; }
  std::string describe() const override { return "empty"; }

 private:
  unsigned k_;
  std::uint64_t n_;
};

class CompleteHypergraph final : public Hypergraph {
 public:
  CompleteHypergraph(unsigned k, std::uint64_t n) : k_(k), n_(n) {}
  unsigned uniformity() const override { return k_; }
  TowerSize size() const override { return {n_, 0}; }
  bool is_edge(std::span<const Vertex>) const override { return true; }
  std::string describe() const override { return "complete"; }

 private:
  unsigned k_;
  std::uint64_t n_;
};

/// Red subsets of a coloring viewed as a hypergraph.
class ColorClassHypergraph final : public Hypergraph {
 public:
  ColorClassHypergraph(std::shared_ptr<const Coloring> c, Color color)
      : c_(std::move(c)), color_(color) {}
  unsigned uniformity() const override { return c_->uniformity(); }
  TowerSize size() const override { return c_->size(); }
  bool is_edge(std::span<const Vertex> s) const override { return c_->color_of(s) == color_; }
  std::string describe() const override {
    return std::string(to_string(color_)) + "-class(" + c_->describe() + ")";
  }

 private:
  std::shared_ptr<const Coloring> c_;
  Color color_;
};

/// A predicate over sorted k-subsets of {0..n-1}: the common currency of the
/// exact and sampling oracles.
struct SubsetPredicate {
  unsigned k = 0;
  std::uint64_t n = 0;
  std::function<bool(std::span<const Vertex>)> holds;
};

SubsetPredicate color_predicate(const Coloring& c, Color color);
SubsetPredicate edge_predicate(const Hypergraph& h);

/// Universe size as a concrete count; DomainError when it exceeds `limit`.
std::uint64_t concrete_size(const TowerSize& size, std::uint64_t limit);

}  // namespace hr
