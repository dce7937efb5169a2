#include "hyperramsey/tourney.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <numeric>

#include "bitset.hpp"
#include "hyperramsey/errors.hpp"
#include "hyperramsey/random.hpp"

namespace hr::tourney {

using detail::Bits;

Tournament::Tournament(std::uint64_t n) : n_(n), out_(n * n, false) {
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) out_[i * n + j] = true;
}

void Tournament::orient(Vertex i, Vertex j) {
  if (i == j || i >= n_ || j >= n_) throw DomainError("orient needs two distinct vertices");
  out_[i * n_ + j] = true;
  out_[j * n_ + i] = false;
}

std::uint64_t Tournament::outdegree(Vertex v) const {
  std::uint64_t d = 0;
  for (Vertex j = 0; j < n_; ++j) d += out_[v * n_ + j];
  return d;
}

std::uint64_t Tournament::outdegree_within(Vertex v, std::span<const Vertex> subset) const {
  std::uint64_t d = 0;
  for (Vertex u : subset)
    if (u != v && beats(v, u)) ++d;
  return d;
}

Tournament random_tournament(std::uint64_t n, std::uint64_t seed) {
  Tournament t(n);
  auto rng = make_stream(seed, 0);
  std::uint64_t bits = 0;
  int left = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      if (left == 0) {
        bits = rng();
        left = 64;
      }
      if (bits & 1) t.orient(j, i);
      bits >>= 1;
      --left;
    }
  return t;
}

GraphColoring2::GraphColoring2(std::uint64_t n, Color fill)
    : n_(n), red_(n * n, fill == Color::red) {}

Color GraphColoring2::color_of(std::span<const Vertex> s) const {
  require_sorted_subset(s, 2, n_);
  return color(s[0], s[1]);
}

void GraphColoring2::set(Vertex i, Vertex j, Color c) {
  if (i == j || i >= n_ || j >= n_) throw DomainError("set needs two distinct vertices");
  red_[i * n_ + j] = red_[j * n_ + i] = c == Color::red;
}

namespace {

Color pair_color(const Coloring& chi, Vertex a, Vertex b) {
  const Vertex p[2] = {std::min(a, b), std::max(a, b)};
  return chi.color_of(p);
}

std::uint64_t require_graph_coloring(const Coloring& chi) {
  if (chi.uniformity() != 2) throw DomainError("expected a coloring of pairs (k = 2)");
  return concrete_size(chi.size(), std::uint64_t{1} << 16);
}

std::vector<Bits> out_rows(const Tournament& t) {
  std::vector<Bits> rows(t.size(), Bits(t.size()));
  for (Vertex i = 0; i < t.size(); ++i)
    for (Vertex j = 0; j < t.size(); ++j)
      if (i != j && t.beats(i, j)) rows[i].set(j);
  return rows;
}

// Largest s with d_i >= s - i for all i <= s, d sorted descending: a
// transitive set of size s inside the candidates needs its i-th vertex to
// beat the s - i vertices after it.
std::size_t transitive_bound(const std::vector<Bits>& rows, const Bits& cand) {
  std::vector<std::size_t> deg;
  cand.for_each([&](std::size_t v) { deg.push_back(rows[v].count_and(cand)); });
  std::sort(deg.begin(), deg.end(), std::greater<>());
  std::size_t best = 0, running = ~std::size_t{0};
  for (std::size_t i = 0; i < deg.size(); ++i) {
    running = std::min(running, deg[i] + i + 1);
    if (running >= i + 1)
      best = i + 1;
    else
      break;
  }
  return best;
}

// A tournament is transitive iff it has no directed triangle, so the
// search is include/exclude branching like a clique search: candidates are
// the vertices that close no triangle with any pair of the current set.
class TransitiveSearch {
 public:
  TransitiveSearch(const Tournament& t, oracle::Budget b, std::size_t target)
      : rows_(out_rows(t)), budget_(b), target_(target) {
    in_rows_.reserve(rows_.size());
    for (std::size_t v = 0; v < rows_.size(); ++v) {
      Bits in(rows_.size());
      in.set_all();
      in.and_not(rows_[v]);
      in.reset(v);
      in_rows_.push_back(std::move(in));
    }
  }

  oracle::SearchResult run() {
    const auto t0 = std::chrono::steady_clock::now();
    Bits all(rows_.size());
    all.set_all();
    search(all);
    oracle::SearchResult r;
    r.value = best_.size();
    r.witness = best_;
    std::sort(r.witness.begin(), r.witness.end());
    r.status = aborted_ ? oracle::Status::lower_bound : oracle::Status::exact;
    r.nodes_explored = nodes_;
    r.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }

 private:
  bool done() const { return aborted_ || best_.size() >= target_; }

  // Candidates left after adding x to the current set.
  Bits extend(Bits cand, std::size_t x) const {
    cand.reset(x);
    for (auto a : set_) {
      // triangles a -> x -> y -> a and x -> a -> y -> x
      if (rows_[a].test(x))
        cand.and_not(rows_[x] & in_rows_[a]);
      else
        cand.and_not(rows_[a] & in_rows_[x]);
    }
    return cand;
  }

  void search(Bits cand) {
    if (++nodes_ > budget_.nodes) {
      aborted_ = true;
      return;
    }
    if (set_.size() > best_.size()) best_ = set_;
    if (done() || cand.none()) return;
    if (set_.size() + transitive_bound(rows_, cand) <= best_.size()) return;

    auto order = cand.members();
    std::vector<std::size_t> deg(rows_.size());
    for (auto v : order) deg[v] = rows_[v].count_and(cand);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    std::size_t remaining = order.size();
    for (auto v : order) {
      if (done() || set_.size() + remaining <= best_.size()) return;
      auto next = extend(cand, v);
      set_.push_back(v);
      search(std::move(next));
      set_.pop_back();
      cand.reset(v);
      --remaining;
    }
  }

  std::vector<Bits> rows_, in_rows_;
  oracle::Budget budget_;
  std::size_t target_;
  std::vector<Vertex> set_, best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

Tournament coloring_to_tournament(const Coloring& chi) {
  const auto n = require_graph_coloring(chi);
  Tournament t(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (pair_color(chi, i, j) == Color::blue) t.orient(j, i);
  return t;
}

GraphColoring2 tournament_to_coloring(const Tournament& t) {
  GraphColoring2 chi(t.size());
  for (Vertex i = 0; i < t.size(); ++i)
    for (Vertex j = i + 1; j < t.size(); ++j)
      chi.set(i, j, t.beats(i, j) ? Color::red : Color::blue);
  return chi;
}

bool is_transitive(const Tournament& t, std::span<const Vertex> subset) {
  std::vector<bool> seen(subset.size(), false);
  for (Vertex v : subset) {
    if (v >= t.size()) throw DomainError("subset vertex outside tournament");
    const auto d = t.outdegree_within(v, subset);
    if (d >= subset.size() || seen[d]) return false;
    seen[d] = true;
  }
  return true;
}

std::vector<Vertex> hamiltonian_path(const Tournament& t, std::span<const Vertex> subset) {
  if (!is_transitive(t, subset)) throw DomainError("subtournament is not transitive");
  std::vector<std::pair<std::uint64_t, Vertex>> keyed;
  for (Vertex v : subset) keyed.emplace_back(t.outdegree_within(v, subset), v);
  std::sort(keyed.begin(), keyed.end(), std::greater<>());
  std::vector<Vertex> path;
  for (const auto& [d, v] : keyed) path.push_back(v);
  return path;
}

MonochromaticChain monochromatic_chain(std::span<const Vertex> order, const Coloring& chi,
                                       std::size_t n) {
  if (n == 0) throw DomainError("chain length must be positive");
  if (order.size() < n * n)
    throw DomainError("monochromatic_chain needs at least n^2 = " + std::to_string(n * n) +
                      " vertices, got " + std::to_string(order.size()));
  const std::size_t len = order.size();
  // best[c][i]: longest chain of color c ending at position i.
  std::vector<std::size_t> best[2] = {std::vector<std::size_t>(len, 1),
                                      std::vector<std::size_t>(len, 1)};
  std::vector<std::size_t> pred[2] = {std::vector<std::size_t>(len, len),
                                      std::vector<std::size_t>(len, len)};
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto c = static_cast<std::size_t>(pair_color(chi, order[j], order[i]));
      if (best[c][j] + 1 > best[c][i]) {
        best[c][i] = best[c][j] + 1;
        pred[c][i] = j;
      }
    }
    for (std::size_t c = 0; c < 2; ++c) {
      if (best[c][i] < n) continue;
      MonochromaticChain out;
      out.color = static_cast<Color>(c);
      for (std::size_t p = i; out.indices.size() < n; p = pred[c][p]) out.indices.push_back(p);
      std::reverse(out.indices.begin(), out.indices.end());
      return out;
    }
  }
  throw SoundnessError("no monochromatic chain although |order| >= n^2");
}

bool is_monochromatic(const Coloring& chi, std::span<const Vertex> vs, Color color) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (pair_color(chi, vs[i], vs[j]) != color) return false;
  return true;
}

MonochromaticChain extract_clique_from_transitive(const Coloring& chi,
                                                  std::span<const Vertex> transitive,
                                                  std::size_t n) {
  require_graph_coloring(chi);
  // Beating order of the transform restricted to the subset.
  auto beats = [&](Vertex a, Vertex b) {
    return a < b ? pair_color(chi, a, b) == Color::red : pair_color(chi, a, b) == Color::blue;
  };
  std::vector<std::pair<std::size_t, Vertex>> keyed;
  for (Vertex v : transitive) {
    std::size_t d = 0;
    for (Vertex u : transitive)
      if (u != v && beats(v, u)) ++d;
    keyed.emplace_back(d, v);
  }
  std::sort(keyed.begin(), keyed.end(), std::greater<>());
  std::vector<Vertex> order;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (keyed[i].first != keyed.size() - 1 - i)
      throw DomainError("vertex set is not transitive in the transformed tournament");
    order.push_back(keyed[i].second);
  }
  auto chain = monochromatic_chain(order, chi, n);
  std::vector<Vertex> chosen;
  for (auto i : chain.indices) chosen.push_back(order[i]);
  if (!is_monochromatic(chi, chosen, chain.color))
    throw SoundnessError("monochromatic chain in a transitive order is not a clique");
  return chain;
}

oracle::SearchResult max_transitive(const Tournament& t, oracle::Budget budget) {
  if (t.size() > (1u << 14)) throw DomainError("tournament too large for exact search");
  return TransitiveSearch(t, budget, ~std::size_t{0}).run();
}

bool has_transitive(const Tournament& t, std::size_t target) {
  if (target <= 1) return t.size() >= target;
  return TransitiveSearch(t, oracle::Budget{~std::uint64_t{0}}, target).run().value >= target;
}

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

bool is_quadratic_residue(std::uint64_t x, std::uint64_t q) {
  x %= q;
  if (x == 0) return false;
  // Euler's criterion.
  unsigned __int128 r = 1, b = x;
  for (std::uint64_t e = (q - 1) / 2; e; e >>= 1) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
  }
  return r == 1;
}

GraphColoring2 paley_graph(std::uint64_t q) {
  if (!is_prime(q)) throw DomainError("paley_graph needs a prime q, got " + std::to_string(q));
  if (q % 4 != 1) throw DomainError("paley_graph needs q = 1 (mod 4), got " + std::to_string(q));
  GraphColoring2 chi(q);
  for (Vertex i = 0; i < q; ++i)
    for (Vertex j = i + 1; j < q; ++j)
      chi.set(i, j, is_quadratic_residue(j - i, q) ? Color::red : Color::blue);
  chi.set_description("paley(q=" + std::to_string(q) + ")");
  return chi;
}

Tournament qr_tournament(std::uint64_t q) {
  if (!is_prime(q)) throw DomainError("qr_tournament needs a prime q, got " + std::to_string(q));
  if (q % 4 != 3) throw DomainError("qr_tournament needs q = 3 (mod 4), got " + std::to_string(q));
  Tournament t(q);
  for (Vertex i = 0; i < q; ++i)
    for (Vertex j = i + 1; j < q; ++j)
      if (!is_quadratic_residue(j - i, q)) t.orient(j, i);
  return t;
}

FranklWilsonColoring::FranklWilsonColoring(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError("frankl_wilson_graph needs a prime p, got " + std::to_string(p));
  if (p * p * p > 64) throw DomainError("frankl_wilson_graph supports ground sets of at most 64 points");
  n_ = binomial(p * p * p, p * p - 1);
}

Color FranklWilsonColoring::color_of(std::span<const Vertex> s) const {
  require_sorted_subset(s, 2, n_);
  auto mask = [&](Vertex v) {
    std::uint64_t m = 0;
    for (Vertex e : colex_unrank(v, set_size())) m |= std::uint64_t{1} << e;
    return m;
  };
  const auto common = static_cast<std::uint64_t>(std::popcount(mask(s[0]) & mask(s[1])));
  return common % p_ != p_ - 1 ? Color::red : Color::blue;
}

std::shared_ptr<const FranklWilsonColoring> frankl_wilson_graph(std::uint64_t p) {
  return std::make_shared<const FranklWilsonColoring>(p);
}

oracle::SearchResult sampled_clique_probe(const Coloring& chi, Color color,
                                          std::size_t sample_size, std::uint64_t samples,
                                          std::uint64_t seed, oracle::Budget budget) {
  const auto n = concrete_size(chi.size(), ~std::uint64_t{0});
  const std::size_t s = static_cast<std::size_t>(std::min<std::uint64_t>(sample_size, n));
  oracle::SearchResult best;
  best.status = oracle::Status::lower_bound;
  for (std::uint64_t i = 0; i < samples; ++i) {
    auto rng = make_stream(seed, i);
    const auto pick = sample_subset(rng, n, s);
    SubsetPredicate local{chi.uniformity(), s, [&](std::span<const Vertex> sub) {
                            std::vector<Vertex> g;
                            for (Vertex v : sub) g.push_back(pick[v]);
                            return chi.color_of(g) == color;
                          }};
    auto r = oracle::max_clique(local, budget);
    best.nodes_explored += r.nodes_explored;
    best.wall_time += r.wall_time;
    if (r.value > best.value || best.witness.empty()) {
      best.value = r.value;
      best.witness.clear();
      for (Vertex v : r.witness) best.witness.push_back(pick[v]);
    }
  }
  if (s == n && samples > 0) best.status = oracle::Status::exact;
  return best;
}

namespace {

Tournament induced(const Tournament& t, std::uint64_t n) {
  Tournament r(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (t.beats(j, i)) r.orient(j, i);
  return r;
}

Tournament from_bits(std::uint64_t n, std::uint64_t bits) {
  Tournament t(n);
  std::uint64_t b = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++b)
      if ((bits >> b) & 1) t.orient(j, i);
  return t;
}

std::optional<Tournament> find_witness(std::size_t n, std::uint64_t N,
                                       const std::optional<Tournament>& previous,
                                       const TSearchLimits& lim) {
  // Quadratic residue tournaments restricted to their first N vertices.
  for (std::uint64_t q = N; q <= 4 * N + 8; ++q) {
    if (!is_prime(q) || q % 4 != 3) continue;
    auto t = induced(qr_tournament(q), N);
    if (!has_transitive(t, n)) return t;
  }
  // One new vertex on top of the previous witness.
  if (previous && previous->size() + 1 == N && N - 1 <= 16) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (N - 1)); ++mask) {
      Tournament t(N);
      for (Vertex i = 0; i + 1 < N; ++i)
        for (Vertex j = i + 1; j + 1 < N; ++j)
          if (previous->beats(j, i)) t.orient(j, i);
      for (Vertex i = 0; i + 1 < N; ++i)
        if ((mask >> i) & 1) t.orient(N - 1, i);
      if (!has_transitive(t, n)) return t;
    }
  }
  for (std::uint64_t i = 0; i < lim.random_tries; ++i) {
    auto t = random_tournament(N, splitmix64(lim.seed) ^ (N << 32) ^ i);
    if (!has_transitive(t, n)) return t;
  }
  return std::nullopt;
}

// Enumerates every N-vertex tournament with 0 -> 1 fixed; returns a
// tournament without a transitive n-subset if one exists.
std::optional<Tournament> exhaustive_witness(std::size_t n, std::uint64_t N, unsigned workers) {
  const std::uint64_t pairs = N * (N - 1) / 2;
  const std::uint64_t count = pairs == 0 ? 1 : std::uint64_t{1} << (pairs - 1);
  std::atomic<bool> found{false};
  std::optional<Tournament> witness;
  std::mutex mu;
  oracle::parallel_for(count, workers, [&](std::uint64_t idx) {
    if (found.load(std::memory_order_relaxed)) return;
    auto t = from_bits(N, idx << 1);  // bit 0 is the pair {0,1}: 0 -> 1
    if (!has_transitive(t, n)) {
      std::lock_guard lock(mu);
      if (!found) {
        found = true;
        witness = std::move(t);
      }
    }
  });
  return witness;
}

}  // namespace

TResult compute_T(std::size_t n, std::uint64_t max_n, const TSearchLimits& lim) {
  if (n < 2) throw DomainError("compute_T needs n >= 2");
  TResult res;
  res.n = n;
  res.max_n = max_n;
  std::optional<std::uint64_t> previous_value;
  if (n > 2) previous_value = compute_T(n - 1, max_n, lim).value;

  std::optional<Tournament> previous_witness;
  for (std::uint64_t N = n; N <= max_n; ++N) {
    if (auto w = find_witness(n, N, previous_witness, lim)) {
      res.transcript.emplace_back(N, "witness");
      previous_witness = w;
      res.witness = std::move(w);
      res.witness_size = N;
      continue;
    }
    const std::uint64_t pairs = N * (N - 1) / 2;
    if (pairs <= lim.max_enumeration_pairs) {
      if (auto w = exhaustive_witness(n, N, lim.workers)) {
        res.transcript.emplace_back(N, "witness");
        previous_witness = w;
        res.witness = std::move(w);
        res.witness_size = N;
        continue;
      }
      res.transcript.emplace_back(N, "exhaustive");
      res.value = N;
      return res;
    }
    if (previous_value && N / 2 >= *previous_value) {
      // Some vertex has out-degree >= ceil((N-1)/2) = floor(N/2) >= T(n-1);
      // its out-neighbourhood holds a transitive (n-1)-set it beats entirely.
      res.transcript.emplace_back(N, "outdegree");
      res.value = N;
      return res;
    }
    res.transcript.emplace_back(N, "undetermined");
    return res;
  }
  res.exceeds_max = true;
  return res;
}

}  // namespace hr::tourney
