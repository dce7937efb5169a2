#include "hyperramsey/halfgraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperramsey/errors.hpp"
#include "hyperramsey/random.hpp"

namespace hr::halfgraph {

std::vector<std::vector<Vertex>> HalfGraphPattern::edges() const {
  std::vector<std::vector<Vertex>> out;
  for (Vertex v : t) {
    auto e = s;
    e.push_back(v);
    std::sort(e.begin(), e.end());
    out.push_back(std::move(e));
  }
  auto e = t;
  e.push_back(apex);
  std::sort(e.begin(), e.end());
  out.push_back(std::move(e));
  return out;
}

PairColoring::PairColoring(std::uint64_t n, unsigned colors)
    : n_(n), colors_(colors), c_(n * n, 1) {
  if (colors == 0 || colors > 255) throw DomainError("pair coloring needs 1..255 colors");
}

void PairColoring::set(Vertex i, Vertex j, unsigned color) {
  if (i == j || i >= n_ || j >= n_) throw DomainError("set needs two distinct vertices");
  if (color < 1 || color > colors_) throw DomainError("pair color out of range");
  c_[i * n_ + j] = c_[j * n_ + i] = static_cast<std::uint8_t>(color);
}

PairColoring random_pair_coloring(std::uint64_t n, unsigned colors, std::uint64_t seed) {
  PairColoring phi(n, colors);
  auto rng = make_stream(seed, 0);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      phi.set(i, j, 1 + static_cast<unsigned>(uniform_below(rng, colors)));
  return phi;
}

Color chi_odd(const tourney::Tournament& t, std::span<const Vertex> subset) {
  const std::size_t k = subset.size();
  if (k % 2 == 0) throw DomainError("chi_odd needs odd k, got " + std::to_string(k));
  for (Vertex v : subset) {
    if (v >= t.size()) throw DomainError("vertex outside tournament");
    if (t.outdegree_within(v, subset) != (k - 1) / 2) return Color::blue;
  }
  return Color::red;
}

Color chi_even(const PairColoring& phi, std::span<const Vertex> subset) {
  const std::size_t k = subset.size();
  if (k % 2 == 1) throw DomainError("chi_even needs even k, got " + std::to_string(k));
  std::vector<bool> used(phi.colors() + 1, false);
  std::size_t distinct = 0;
  for (Vertex v : subset) {
    if (v >= phi.size()) throw DomainError("vertex outside pair coloring");
    std::vector<bool> seen(phi.colors() + 1, false);
    for (Vertex u : subset) {
      if (u == v) continue;
      const unsigned c = phi.color(v, u);
      if (seen[c]) return Color::blue;
      seen[c] = true;
      if (!used[c]) {
        used[c] = true;
        ++distinct;
      }
    }
  }
  return distinct == k - 1 ? Color::red : Color::blue;
}

OddHalfgraphColoring::OddHalfgraphColoring(tourney::Tournament t, unsigned k)
    : t_(std::move(t)), k_(k) {
  if (k < 3 || k % 2 == 0) throw DomainError("odd half-graph coloring needs odd k >= 3");
}

Color OddHalfgraphColoring::color_of(std::span<const Vertex> s) const {
  require_sorted_subset(s, k_, t_.size());
  return chi_odd(t_, s);
}

EvenHalfgraphColoring::EvenHalfgraphColoring(PairColoring phi, unsigned k)
    : phi_(std::move(phi)), k_(k) {
  if (k < 4 || k % 2 == 1) throw DomainError("even half-graph coloring needs even k >= 4");
  if (phi_.colors() != k - 1) throw DomainError("even half-graph coloring needs k-1 pair colors");
}

Color EvenHalfgraphColoring::color_of(std::span<const Vertex> s) const {
  require_sorted_subset(s, k_, phi_.size());
  return chi_even(phi_, s);
}

namespace {

bool red(const Coloring& c, std::vector<Vertex> e) {
  std::sort(e.begin(), e.end());
  return c.color_of(e) == Color::red;
}

// Looks for T inside the red neighbourhood of S with T + u red for some u.
std::optional<HalfGraphPattern> complete_from(const Coloring& c, std::span<const Vertex> s,
                                              std::uint64_t n) {
  const unsigned k = c.uniformity();
  std::vector<Vertex> nbr;
  for (Vertex v = 0; v < n; ++v) {
    if (std::find(s.begin(), s.end(), v) != s.end()) continue;
    std::vector<Vertex> e(s.begin(), s.end());
    e.push_back(v);
    if (red(c, e)) nbr.push_back(v);
  }
  if (nbr.size() < k - 1) return std::nullopt;
  std::optional<HalfGraphPattern> found;
  for_each_subset(nbr, k - 1, [&](std::span<const Vertex> t) {
    for (Vertex u : s) {
      std::vector<Vertex> e(t.begin(), t.end());
      e.push_back(u);
      if (red(c, e)) {
        found = HalfGraphPattern{k, {s.begin(), s.end()}, {t.begin(), t.end()}, u};
        return false;
      }
    }
    return true;
  });
  return found;
}

}  // namespace

HalfgraphSearch find_red_halfgraph(const Coloring& coloring, const HalfgraphBudget& budget) {
  const unsigned k = coloring.uniformity();
  if (k < 2) throw DomainError("half-graphs need k >= 2");
  const auto n = concrete_size(coloring.size(), std::uint64_t{1} << 20);
  HalfgraphSearch out;
  if (n < 2 * (k - 1)) {
    out.exhaustive = true;
    return out;
  }
  const std::uint64_t sets = binomial(n, k - 1);
  if (sets <= budget.exhaustive_limit) {
    out.exhaustive = true;
    auto s = first_combination(k - 1);
    do {
      ++out.examined;
      if ((out.witness = complete_from(coloring, s, n))) return out;
    } while (next_combination(s, n));
    return out;
  }
  for (std::uint64_t i = 0; i < budget.samples; ++i) {
    auto rng = make_stream(budget.seed, i);
    const auto s = sample_subset(rng, n, k - 1);
    ++out.examined;
    if ((out.witness = complete_from(coloring, s, n))) return out;
  }
  return out;
}

SteinerPacking greedy_partial_steiner(std::uint64_t n, unsigned k) {
  if (k < 2 || n < k) throw DomainError("greedy_partial_steiner needs n >= k >= 2");
  SteinerPacking out{n, k, {}};
  std::vector<bool> covered(n * n, false);
  std::vector<Vertex> cur;

  // Lexicographic scan of k-subsets, skipping every subset that contains a
  // covered pair. Once a block is accepted its prefix pairs are covered, so
  // the scan unwinds to the deepest prefix with at most one vertex.
  auto rec = [&](auto&& self, Vertex start) -> bool {
    for (Vertex x = start; x < n; ++x) {
      if (n - x < k - cur.size()) break;
      if (std::any_of(cur.begin(), cur.end(), [&](Vertex c) { return covered[c * n + x]; }))
        continue;
      cur.push_back(x);
      bool invalidated = false;
      if (cur.size() == k) {
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = i + 1; j < k; ++j)
            covered[cur[i] * n + cur[j]] = covered[cur[j] * n + cur[i]] = true;
        out.blocks.push_back(cur);
        invalidated = true;
      } else {
        invalidated = self(self, x + 1);
      }
      cur.pop_back();
      if (invalidated && cur.size() >= 2) return true;
    }
    return false;
  };
  rec(rec, 0);
  return out;
}

bool is_packing(const SteinerPacking& p) {
  std::vector<bool> covered(p.n * p.n, false);
  for (const auto& b : p.blocks) {
    if (b.size() != p.k) return false;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        if (b[i] >= p.n || b[j] >= p.n || b[i] == b[j]) return false;
        if (covered[b[i] * p.n + b[j]]) return false;
        covered[b[i] * p.n + b[j]] = covered[b[j] * p.n + b[i]] = true;
      }
  }
  return true;
}

std::uint64_t expected_blue_bound(unsigned k, std::uint64_t n, std::uint64_t blocks, double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("expected_blue_bound needs 0 < q < 1");
  if (n < k) throw DomainError("expected_blue_bound needs n >= k");
  const long double per_block = std::log1p(-static_cast<long double>(q));
  auto holds = [&](std::uint64_t N) {
    const long double lc = std::lgamma(static_cast<long double>(N) + 1) -
                           std::lgamma(static_cast<long double>(n) + 1) -
                           std::lgamma(static_cast<long double>(N - n) + 1);
    return lc + static_cast<long double>(blocks) * per_block < 0;
  };
  if (!holds(n)) return 0;
  constexpr std::uint64_t kCap = std::uint64_t{1} << 62;
  std::uint64_t lo = n, hi = n + 1;  // holds(lo), probe hi
  while (hi < kCap && holds(hi)) {
    lo = hi;
    hi = std::min(kCap, n + 2 * (hi - n));
  }
  if (hi >= kCap && holds(hi)) return kCap;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (holds(mid) ? lo : hi) = mid;
  }
  return lo;
}

double red_probability(unsigned k) {
  const double pairs = static_cast<double>(k) * (k - 1) / 2;
  return k % 2 == 1 ? std::pow(2.0, -pairs) : std::pow(static_cast<double>(k - 1), -pairs);
}

std::shared_ptr<const Coloring> certificate_trial_coloring(unsigned k, std::uint64_t n,
                                                           std::uint64_t seed,
                                                           std::uint64_t trial) {
  auto rng = make_stream(seed, trial);
  const std::uint64_t sub_seed = rng();
  if (k % 2 == 1)
    return std::make_shared<const OddHalfgraphColoring>(tourney::random_tournament(n, sub_seed), k);
  return std::make_shared<const EvenHalfgraphColoring>(random_pair_coloring(n, k - 1, sub_seed), k);
}

Certificate search_certificate(unsigned k, std::uint64_t n, std::uint64_t seed,
                               std::uint64_t trials, const CertificateSearchOptions& opts) {
  if (k < 3) throw DomainError("search_certificate needs k >= 3");
  Certificate cert;
  cert.seed = seed;
  cert.construction.family = k % 2 == 1 ? "halfgraph-odd" : "halfgraph-even";
  cert.construction.params = {{"k", std::to_string(k)}, {"n", std::to_string(n)},
                              {"seed", std::to_string(seed)}};
  if (trials == 0) return cert;

  struct Outcome {
    HalfgraphSearch red;
    oracle::SearchResult blue;
  };
  std::vector<Outcome> outcomes(trials);
  oracle::parallel_for(trials, opts.workers, [&](std::uint64_t i) {
    auto chi = certificate_trial_coloring(k, n, seed, i);
    auto budget = opts.red_budget;
    budget.seed = seed ^ splitmix64(i);
    outcomes[i].red = find_red_halfgraph(*chi, budget);
    if (outcomes[i].red.witness)
      throw SoundnessError("construction soundness violated: red B^" + std::to_string(k) +
                           " in trial " + std::to_string(i));
    outcomes[i].blue = oracle::max_mono_clique(*chi, Color::blue, opts.blue_budget);
  });

  std::uint64_t best = 0;
  for (std::uint64_t i = 1; i < trials; ++i)
    if (outcomes[i].blue.value < outcomes[best].blue.value) best = i;
  const auto& o = outcomes[best];
  cert.construction.params["trial"] = std::to_string(best);
  cert.claims.push_back({"red-free:B" + std::to_string(k),
                         o.red.exhaustive ? "exact" : "zero-violation", 0,
                         o.red.exhaustive ? o.red.examined : opts.red_budget.samples, seed, {}});
  cert.claims.push_back({"max-blue-clique", oracle::to_string(o.blue.status), o.blue.value,
                         opts.blue_budget.nodes, seed, {}});
  return cert;
}

}  // namespace hr::halfgraph
