// Acceptance suite: one PASS/FAIL line per criterion, with the pinned
// tolerances (zero failures, exact statuses, runtime ceilings).
//
// usage: acceptance [criterion...]   (default: all)

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "brute.hpp"
#include "hyperramsey/delta.hpp"
#include "hyperramsey/driver.hpp"
#include "hyperramsey/halfgraph.hpp"
#include "hyperramsey/oracle.hpp"
#include "hyperramsey/random.hpp"
#include "hyperramsey/rogers.hpp"
#include "hyperramsey/stepup.hpp"
#include "hyperramsey/tourney.hpp"

using namespace hr;

namespace {

const unsigned kWorkers = std::max(1u, std::thread::hardware_concurrency());

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 3-uniform base on m vertices from a bitmask over colex ranks (bit set = red).
ExplicitColoring base_from_code(unsigned m, std::uint64_t code) {
  ExplicitColoring c(3, m);
  for (std::uint64_t r = 0; r < c.subset_count(); ++r)
    c.set_at_rank(r, code >> r & 1 ? Color::red : Color::blue);
  return c;
}

bool has_red_clique(const Coloring& c, unsigned size, unsigned n) {
  bool found = false;
  auto red = [&](std::span<const Vertex> e) { return c.color_of(e) == Color::red; };
  std::vector<Vertex> all(n);
  for (unsigned i = 0; i < n; ++i) all[i] = i;
  for_each_subset(all, size, [&](std::span<const Vertex> s) {
    found = brute::all_k_subsets({s.begin(), s.end()}, c.uniformity(), red);
    return !found;
  });
  return found;
}

// Realizable delta sequences of length len with entries below `values`.
std::vector<std::vector<BitIndex>> realizable_sequences(std::size_t len, unsigned values) {
  std::vector<std::vector<BitIndex>> out;
  std::vector<BitIndex> d(len, 0);
  while (true) {
    if (is_realizable(d)) out.push_back(d);
    std::size_t i = 0;
    while (i < len && ++d[i] == values) d[i++] = 0;
    if (i == len) return out;
  }
}

std::vector<BitIndex> order_type(std::vector<BitIndex> d) {
  std::vector<BitIndex> vals = d;
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  for (auto& x : d) x = static_cast<BitIndex>(std::lower_bound(vals.begin(), vals.end(), x) - vals.begin());
  return d;
}

// ---------------------------------------------------------------------------

Outcome c1() {
  std::atomic<std::uint64_t> fails{0}, triples{0};
  oracle::parallel_for(1024, kWorkers, [&](std::uint64_t a) {
    std::uint64_t local = 0, f = 0;
    for (Vertex b = a + 1; b < 1024; ++b) {
      const auto ab = delta(a, b);
      for (Vertex c = b + 1; c < 1024; ++c, ++local) f += ab == delta(b, c);
    }
    fails += f;
    triples += local;
  });
  std::uint64_t chains = 0;
  std::vector<Vertex> all(32);
  for (Vertex v = 0; v < 32; ++v) all[v] = v;
  for (std::size_t len = 2; len <= 4; ++len)
    for_each_subset(all, len, [&](std::span<const Vertex> s) {
      ++chains;
      unsigned mx = 0;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) mx = std::max(mx, brute::highest_bit_diff(s[i], s[i + 1]));
      fails += brute::highest_bit_diff(s.front(), s.back()) != mx;
      return true;
    });
  auto rng = make_stream(1, 0);
  for (int i = 0; i < 100000; ++i) {
    const auto s = sample_subset(rng, std::uint64_t{1} << 48, 5 + uniform_below(rng, 60));
    unsigned mx = 0;
    for (std::size_t j = 0; j + 1 < s.size(); ++j) mx = std::max(mx, delta(s[j], s[j + 1]));
    fails += delta(s.front(), s.back()) != mx;
  }
  return {fails == 0, fmt("%llu triples, %llu short chains, 100000 random chains, %llu failures",
                          (unsigned long long)triples.load(), (unsigned long long)chains,
                          (unsigned long long)fails.load())};
}

Outcome c2() {
  std::vector<std::uint64_t> bases;
  for (std::uint64_t code = 0; code < 1024; ++code)
    if (!has_red_clique(base_from_code(5, code), 4, 5)) bases.push_back(code);
  std::atomic<std::uint64_t> violations{0};
  std::atomic<long long> worst_ms{0};
  oracle::parallel_for(bases.size(), kWorkers, [&](std::uint64_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    auto base = std::make_shared<const ExplicitColoring>(base_from_code(5, bases[i]));
    const auto table = ExplicitColoring::from(*stepup::lift(base, stepup::LiftMode::theorem4, 4));
    std::vector<Vertex> all(32);
    for (Vertex v = 0; v < 32; ++v) all[v] = v;
    std::uint64_t bad = 0;
    for_each_subset(all, 5, [&](std::span<const Vertex> s) {
      bool red = true;
      for_each_subset(s, 4, [&](std::span<const Vertex> q) {
        red = table.color_at_rank(colex_rank(q)) == Color::red;
        return red;
      });
      bad += red;
      return true;
    });
    violations += bad;
    const long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0).count();
    long long prev = worst_ms.load();
    while (ms > prev && !worst_ms.compare_exchange_weak(prev, ms)) {}
  });
  return {violations == 0 && worst_ms < 60000,
          fmt("%zu red-K4^3-free bases, C(32,5) subsets each, %llu violations, slowest base %lld ms",
              bases.size(), (unsigned long long)violations.load(), worst_ms.load())};
}

Outcome c3() {
  bool ok = true;
  std::string notes;
  std::uint64_t checked = 0;
  for (unsigned m : {4u, 5u}) {
    const std::uint64_t codes = std::uint64_t{1} << binomial(m, 3);
    for (std::uint64_t code = 0; code < codes; code += m == 4 ? 1 : 37) {
      auto base = std::make_shared<const ExplicitColoring>(base_from_code(m, code));
      if (has_red_clique(*base, 4, m)) continue;
      const auto t = oracle::max_mono_clique(*base, Color::blue).value;
      const auto lifted = stepup::lift(base, stepup::LiftMode::theorem4, 4);
      const auto r = oracle::max_mono_clique(*lifted, Color::blue);
      ++checked;
      const std::uint64_t bound = std::uint64_t{1} << (2 * (t + 1));
      if (r.status != oracle::Status::exact || r.value >= bound) {
        ok = false;
        notes += fmt(" [M=%u code=%llu: value %llu status %s]", m, (unsigned long long)code,
                     (unsigned long long)r.value, oracle::to_string(r.status));
      }
    }
  }
  return {ok, fmt("%llu bases at M<=5, all exact and below 2^(2(t+1)); bound >= 64 exceeds the "
                  "2^M <= 32 vertices, so the check is vacuous at this scale%s",
                  (unsigned long long)checked, notes.c_str())};
}

Outcome c4() {
  const auto t0 = std::chrono::steady_clock::now();
  // random 4-uniform base on 8 vertices, red K_5^4 removed by recoloring
  auto rng = make_stream(4, 0);
  ExplicitColoring base(4, 8, [&](std::span<const Vertex>) { return rng() & 1 ? Color::red : Color::blue; });
  std::size_t repaired = 0;
  for (bool changed = true; changed;) {
    changed = false;
    auto c = first_combination(5);
    do {
      bool red = true;
      for_each_subset(c, 4, [&](std::span<const Vertex> q) { return red = base.color_of(q) == Color::red; });
      if (red) {
        std::vector<Vertex> q(c.begin(), c.begin() + 4);
        base.set(q, Color::blue);
        changed = true;
        ++repaired;
      }
    } while (next_combination(c, 8));
  }
  const bool base_ok = !has_red_clique(base, 5, 8);
  auto shared = std::make_shared<const ExplicitColoring>(base);
  const auto lifted = stepup::lift(shared, stepup::LiftMode::lemmak, 5);
  auto no_red_k6 = [&](std::span<const Vertex> s) {
    bool red = true;
    for_each_subset(s, 5, [&](std::span<const Vertex> e) { return red = lifted->color_of(e) == Color::red; });
    return !red;
  };
  const auto report = oracle::sample_verify(no_red_k6, 256, 6, 1'000'000, 4, kWorkers);
  // A 6-set's colors depend only on its delta sequence, so every realizable
  // sequence over the 8 base positions covers every 6-subset.
  const auto seqs = realizable_sequences(5, 8);
  std::set<std::vector<BitIndex>> types;
  std::size_t pattern_violations = 0;
  for (const auto& d : seqs) {
    types.insert(order_type(d));
    const auto chain = realize_delta_sequence(d);
    pattern_violations += !no_red_k6(chain.vertices);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {base_ok && report.violations.empty() && pattern_violations == 0 && secs < 300,
          fmt("base: %zu red K5^4 repaired; 10^6 samples: %zu violations; %zu realizable delta "
              "sequences (%zu order types incl. ties, %zu strict): %zu violations; %.1f s",
              repaired, report.violations.size(), seqs.size(), types.size(),
              static_cast<std::size_t>(std::count_if(types.begin(), types.end(), [](const auto& t) {
                return std::set<BitIndex>(t.begin(), t.end()).size() == t.size();
              })),
              pattern_violations, secs)};
}

Outcome c5() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<BitIndex> d{0, 1, 2, 3, 4, 5};
  std::size_t instances = 0, bad = 0;
  do {
    if (count_extrema(d) != 4) continue;
    ++instances;
    const auto chain = realize_delta_sequence(d);
    const auto i = rogers::repair_seven(chain);
    bad += count_extrema(remove_vertex(chain, i - 1).deltas) != 2;
  } while (std::next_permutation(d.begin(), d.end()));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {bad == 0 && instances > 0 && secs < 1.0,
          fmt("720 permutations, %zu with m=4, %zu not repaired to m=2, %.3f s", instances, bad, secs)};
}

Outcome c6() {
  std::size_t types_total = 0, bad = 0;
  for (unsigned k = 7; k <= 9; ++k) {
    EmptyHypergraph empty(k - 1, k);
    std::set<std::vector<BitIndex>> seen;
    for (const auto& d : realizable_sequences(k - 1, k - 1)) {
      const auto t = order_type(d);
      if (!seen.insert(t).second || is_monotone(t)) continue;
      std::vector<unsigned> dv(t.begin(), t.end());
      std::size_t mono = 0;
      for (std::size_t i = 1; i + 1 < dv.size(); ++i) mono += brute::label(dv, i) == brute::Label::mono;
      const auto m = brute::extrema(dv);
      const bool by_m = m == k - 4 || m == k - 3;
      bad += by_m != (mono <= 1);
      bad += rogers::rogers_edge_from_deltas(empty, t) != by_m;
    }
    types_total += seen.size();
  }
  return {bad == 0, fmt("%zu realizable order types for k in {7,8,9}, %zu mismatches", types_total, bad)};
}

Outcome c7() {
  const auto t0 = std::chrono::steady_clock::now();
  // random 14-graph on 20 vertices with every K_15^14 broken
  auto rng = make_stream(7, 0);
  ExplicitHypergraph h(14, 20, [&](std::span<const Vertex>) { return (rng() & 1) != 0; });
  std::size_t repaired = 0;
  auto c = first_combination(15);
  do {
    bool full = true;
    for_each_subset(c, 14, [&](std::span<const Vertex> e) { return full = h.is_edge(e); });
    if (full) {
      std::vector<Vertex> e(c.begin(), c.begin() + 14);
      h.set_edge(e, false);
      ++repaired;
    }
  } while (next_combination(c, 20));
  auto base = std::make_shared<const ExplicitHypergraph>(std::move(h));
  rogers::RogersLift lift(base);
  auto has_non_edge = [&](std::span<const Vertex> s) {
    bool all = true;
    for_each_subset(s, 15, [&](std::span<const Vertex> e) { return all = lift.is_edge(e); });
    return !all;
  };
  const auto r = oracle::sample_verify(has_non_edge, std::uint64_t{1} << 20, 17, 100000, 7, kWorkers);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {r.violations.empty() && secs < 600,
          fmt("k=15 lift on 2^20 vertices (base: %zu K_15^14 broken), 10^5 sampled 17-subsets, "
              "%zu violations, %.1f s",
              repaired, r.violations.size(), secs)};
}

Outcome c8() {
  std::size_t bad = 0;
  for (unsigned k = 5; k <= 9; ++k) {
    auto rng = make_stream(8, k);
    for (int trial = 0; trial < 10000; ++trial) {
      VertexChain chain;
      do {
        const auto len = k + 3 + uniform_below(rng, k + 4);
        chain = delta_sequence(sample_subset(rng, std::uint64_t{1} << 40, len));
      } while (count_extrema(chain.deltas) < k);
      const auto out = rogers::zigzag_extract(chain, k);
      bad += out.size() != k + 1 || count_extrema(out.deltas) != k - 2;
      if (k >= 7)
        for (std::size_t i = 0; i <= k; ++i) bad += count_extrema(remove_vertex(out, i).deltas) < k - 4;
    }
  }
  return {bad == 0, fmt("10^4 chains for each k in 5..9, %zu failures", bad)};
}

Outcome c9() {
  const auto t0 = std::chrono::steady_clock::now();
  std::atomic<std::size_t> witnesses{0}, disagreements{0}, non_exhaustive{0};
  for (unsigned k : {3u, 4u}) {
    oracle::parallel_for(100, kWorkers, [&](std::uint64_t seed) {
      const auto chi = halfgraph::certificate_trial_coloring(k, 10, seed, 0);
      const auto r = halfgraph::find_red_halfgraph(*chi);
      non_exhaustive += !r.exhaustive;
      witnesses += r.witness.has_value();
      disagreements += r.witness.has_value() != brute::has_red_halfgraph(*chi, 10);
    });
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {witnesses == 0 && disagreements == 0 && non_exhaustive == 0 && secs < 120,
          fmt("k in {3,4}, N=10, 100 seeds each, exhaustive: %zu witnesses, %zu disagreements "
              "with naive search, %.1f s",
              witnesses.load(), disagreements.load(), secs)};
}

Outcome c10() {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig cfg;
  cfg.workers = kWorkers;
  std::string d;
  bool ok = true;
  double n6 = 0;
  for (unsigned n : {4u, 5u, 6u}) {
    const auto s = std::chrono::steady_clock::now();
    const auto c = driver::run("theorem5:N" + std::to_string(n), nullptr, cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - s).count();
    if (n == 6) n6 = secs;
    ok = ok && c.holds();
    d += fmt("N=%u: %llu violations; ", n, (unsigned long long)c.value);
  }
  (void)t0;
  return {ok && n6 < 600, d + fmt("N=6 in %.1f s", n6)};
}

Outcome c11() {
  std::string d;
  bool ok = true;
  const std::uint64_t want[] = {0, 0, 2, 4, 8};
  for (unsigned n = 2; n <= 4; ++n) {
    const auto r = tourney::compute_T(n, 8);
    ok = ok && r.value && *r.value == want[n];
    d += fmt("T(%u)=%s [", n, r.value ? std::to_string(*r.value).c_str() : "?");
    for (const auto& [N, how] : r.transcript) d += fmt("%llu:%s ", (unsigned long long)N, how.c_str());
    d.back() = ']';
    d += "; ";
  }
  // every labelled 7-vertex tournament, naive transitivity over 4-subsets
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < 7; ++i)
    for (Vertex j = i + 1; j < 7; ++j) pairs.emplace_back(i, j);
  std::vector<std::vector<Vertex>> quads;
  std::vector<Vertex> seven{0, 1, 2, 3, 4, 5, 6};
  for_each_subset(seven, 4, [&](std::span<const Vertex> q) {
    quads.emplace_back(q.begin(), q.end());
    return true;
  });
  std::atomic<std::uint64_t> without{0};
  oracle::parallel_for(std::uint64_t{1} << 21, kWorkers, [&](std::uint64_t code) {
    tourney::Tournament t(7);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (code >> b & 1) t.orient(pairs[b].second, pairs[b].first);
    for (const auto& q : quads)
      if (brute::transitive(t, q)) return;
    ++without;
  });
  ok = ok && without > 0;
  const auto qr = tourney::max_transitive(tourney::qr_tournament(7));
  ok = ok && qr.value == 3 && qr.status == oracle::Status::exact;
  return {ok, d + fmt("all 2^21 labelled 7-vertex tournaments: %llu without a transitive "
                      "4-subset; qr_tournament(7) max transitive %llu (%s)",
                      (unsigned long long)without.load(), (unsigned long long)qr.value,
                      oracle::to_string(qr.status))};
}

Outcome c12() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto p = tourney::paley_graph(17);
  const auto red = oracle::max_mono_clique(p, Color::red);
  const auto blue = oracle::max_mono_clique(p, Color::blue);
  const auto tr = tourney::max_transitive(tourney::coloring_to_tournament(p));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = red.value == 3 && blue.value == 3 && red.status == oracle::Status::exact &&
                  blue.status == oracle::Status::exact && tr.status == oracle::Status::exact &&
                  tr.value < 16 && secs < 60;
  return {ok, fmt("red %llu, blue %llu, transform max transitive %llu (%s), %.2f s",
                  (unsigned long long)red.value, (unsigned long long)blue.value,
                  (unsigned long long)tr.value, oracle::to_string(tr.status), secs)};
}

Outcome c13() {
  const std::uint64_t n = 60, lo = n / 3 + 1, hi = 5 * n;
  std::size_t bad = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::uint64_t edges = lo + (hi - lo) * i / 99;
    auto rng = make_stream(13, i);
    ExplicitHypergraph h(3, n);
    std::uint64_t count = 0;
    while (count < edges) {
      const auto e = sample_subset(rng, n, 3);
      if (!h.is_edge(e)) h.set_edge(e, true), ++count;
    }
    const auto s = oracle::spencer_independent_set(h, i);
    const std::set<Vertex> in(s.begin(), s.end());
    for (const auto& e : h.edges())
      bad += std::all_of(e.begin(), e.end(), [&](Vertex v) { return in.count(v) > 0; });
    bad += static_cast<double>(s.size()) < oracle::spencer_bound(n, 3, edges);
  }
  return {bad == 0, fmt("100 random 3-graphs on 60 vertices, %llu..%llu edges, %zu failures",
                        (unsigned long long)lo, (unsigned long long)hi, bad)};
}

Outcome c14() {
  auto rng = make_stream(14, 0);
  std::size_t bad = 0;
  for (int i = 0; i < 200; ++i) {
    const unsigned k = 2 + i % 3;
    const std::uint64_t n = 6 + uniform_below(rng, 9);
    const double p = 0.3 + 0.6 * uniform_unit(rng);
    ExplicitHypergraph h(k, n, [&](std::span<const Vertex>) { return uniform_unit(rng) < p; });
    auto edge = [&](std::span<const Vertex> e) { return h.is_edge(e); };
    auto non_edge = [&](std::span<const Vertex> e) { return !h.is_edge(e); };
    bad += oracle::max_clique(edge_predicate(h)).value != brute::max_clique(k, n, edge);
    bad += oracle::alpha_s(h, k).value != brute::max_clique(k, n, non_edge);
  }
  return {bad == 0, fmt("200 instances with <= 14 vertices, clique and independence, %zu mismatches", bad)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"delta calculus", c1},
      {"4-uniform lift, red side", c2},
      {"4-uniform lift, blue side", c3},
      {"k=5 lift, red side", c4},
      {"seven-vertex repair", c5},
      {"edge-rule equivalence", c6},
      {"k=15 lift freeness (sampled)", c7},
      {"zigzag extraction", c8},
      {"half-graph freeness", c9},
      {"transform bound, exhaustive", c10},
      {"small T(n) values", c11},
      {"Paley(17)", c12},
      {"deletion-method independent sets", c13},
      {"oracle equivalence", c14},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %2d %s  %s: %s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
