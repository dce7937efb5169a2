#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "brute.hpp"
#include "hyperramsey/errors.hpp"
#include "hyperramsey/halfgraph.hpp"
#include "hyperramsey/random.hpp"

using namespace hr;
using namespace hr::halfgraph;
using tourney::Tournament;

namespace {

// Largest N >= n with C(N,n) * (d-1)^b < d^b, by direct scan in big
// integers (q = 1/d); 0 when N = n already fails.
std::uint64_t scan_blue_bound(std::uint64_t n, std::uint64_t blocks, std::uint64_t d) {
  using boost::multiprecision::cpp_int;
  cpp_int lhs_factor = boost::multiprecision::pow(cpp_int(d - 1), static_cast<unsigned>(blocks));
  cpp_int rhs = boost::multiprecision::pow(cpp_int(d), static_cast<unsigned>(blocks));
  cpp_int binom = 1;  // C(n, n)
  std::uint64_t best = 0;
  for (std::uint64_t N = n;; ++N) {
    if (N > n) binom = binom * N / (N - n);
    if (binom * lhs_factor >= rhs) return best;
    best = N;
  }
}

Tournament rotational5() {
  Tournament t(5);
  for (Vertex i = 0; i < 5; ++i) {
    t.orient(i, (i + 1) % 5);
    t.orient(i, (i + 2) % 5);
  }
  return t;
}

}  // namespace

TEST_CASE("chi_odd examples") {
  Tournament cyc(3);
  cyc.orient(2, 0);  // 0->1->2->0
  const std::vector<Vertex> tri{0, 1, 2};
  CHECK(chi_odd(cyc, tri) == Color::red);
  CHECK(chi_odd(Tournament(3), tri) == Color::blue);
  const std::vector<Vertex> five{0, 1, 2, 3, 4};
  CHECK(chi_odd(rotational5(), five) == Color::red);
  CHECK(chi_odd(Tournament(5), five) == Color::blue);
  const std::vector<Vertex> four{0, 1, 2, 3};
  CHECK_THROWS_AS(chi_odd(Tournament(4), four), DomainError);
}

TEST_CASE("chi_even examples") {
  const std::vector<Vertex> q{0, 1, 2, 3};
  PairColoring phi(4, 3);
  phi.set(0, 1, 1), phi.set(2, 3, 1);
  phi.set(0, 2, 2), phi.set(1, 3, 2);
  phi.set(0, 3, 3), phi.set(1, 2, 3);
  CHECK(chi_even(phi, q) == Color::red);
  phi.set(0, 2, 1);
  CHECK(chi_even(phi, q) == Color::blue);
  CHECK(chi_even(PairColoring(4, 3), q) == Color::blue);  // all color 1
  const std::vector<Vertex> tri{0, 1, 2};
  CHECK_THROWS_AS(chi_even(PairColoring(4, 3), tri), DomainError);
  CHECK_THROWS_AS(EvenHalfgraphColoring(PairColoring(6, 2), 4), DomainError);
  CHECK_THROWS_AS(OddHalfgraphColoring(Tournament(6), 4), DomainError);
}

TEST_CASE("half-graph pattern edges") {
  HalfGraphPattern p{3, {0, 1}, {2, 3}, 1};
  const auto e = p.edges();
  REQUIRE(e.size() == 3);
  CHECK(e[0] == std::vector<Vertex>{0, 1, 2});
  CHECK(e[1] == std::vector<Vertex>{0, 1, 3});
  CHECK(e[2] == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("find_red_halfgraph: all red has a witness") {
  ExplicitColoring all(3, 4, Color::red);
  const auto r = find_red_halfgraph(all);
  REQUIRE(r.witness);
  CHECK(r.exhaustive);
  for (const auto& e : r.witness->edges()) CHECK(all.color_of(e) == Color::red);
  CHECK_FALSE(find_red_halfgraph(ExplicitColoring(3, 8, Color::blue)).witness);
}

TEST_CASE("find_red_halfgraph agrees with brute force") {
  auto rng = make_stream(5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned k = 3 + trial % 2;
    const std::uint64_t n = 7;
    // sparse red so that both outcomes occur
    const double p = trial % 3 == 0 ? 0.5 : 0.15;
    ExplicitColoring c(k, n, [&](std::span<const Vertex>) {
      return uniform_unit(rng) < p ? Color::red : Color::blue;
    });
    const auto r = find_red_halfgraph(c);
    REQUIRE(r.exhaustive);
    CHECK(r.witness.has_value() == brute::has_red_halfgraph(c, n));
    if (r.witness)
      for (const auto& e : r.witness->edges()) CHECK(c.color_of(e) == Color::red);
  }
}

TEST_CASE("chi_odd / chi_even colorings at N=8 have no red half-graph") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    OddHalfgraphColoring odd(tourney::random_tournament(8, seed), 3);
    CHECK_FALSE(brute::has_red_halfgraph(odd, 8));
    CHECK_FALSE(find_red_halfgraph(odd).witness);
    EvenHalfgraphColoring even(random_pair_coloring(8, 3, seed), 4);
    CHECK_FALSE(brute::has_red_halfgraph(even, 8));
    CHECK_FALSE(find_red_halfgraph(even).witness);
  }
}

TEST_CASE("structural facts behind freeness") {
  // odd: S+v red for all v in T => each u in S relates to T in one direction
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = tourney::random_tournament(9, seed);
    OddHalfgraphColoring c(t, 3);
    std::size_t seen = 0;
    for (std::uint64_t sm = 0; sm < (1u << 9); ++sm) {
      if (__builtin_popcountll(sm) != 2) continue;
      const auto s = brute::members(sm);
      for (std::uint64_t tm = 0; tm < (1u << 9); ++tm) {
        if ((tm & sm) || __builtin_popcountll(tm) != 2) continue;
        const auto tt = brute::members(tm);
        bool all = true;
        for (Vertex v : tt) {
          std::vector<Vertex> e{s[0], s[1], v};
          std::sort(e.begin(), e.end());
          all = all && c.color_of(e) == Color::red;
        }
        if (!all) continue;
        ++seen;
        for (Vertex u : s) CHECK(t.beats(u, tt[0]) == t.beats(u, tt[1]));
      }
    }
    CHECK(seen > 0);
  }
  // even: S+v red => the pairs S x {v} carry all k-1 colors
  std::size_t seen = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto phi = random_pair_coloring(9, 3, seed);
    EvenHalfgraphColoring c(phi, 4);
    for (std::uint64_t sm = 0; sm < (1u << 9); ++sm) {
      if (__builtin_popcountll(sm) != 3) continue;
      const auto s = brute::members(sm);
      for (Vertex v = 0; v < 9; ++v) {
        if (sm >> v & 1) continue;
        std::vector<Vertex> e = s;
        e.push_back(v);
        std::sort(e.begin(), e.end());
        if (c.color_of(e) != Color::red) continue;
        ++seen;
        std::vector<unsigned> colors;
        for (Vertex x : s) colors.push_back(phi.color(x, v));
        std::sort(colors.begin(), colors.end());
        CHECK(colors == std::vector<unsigned>{1, 2, 3});
      }
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("greedy partial Steiner systems") {
  const auto p3 = greedy_partial_steiner(3, 3);
  REQUIRE(p3.blocks.size() == 1);
  CHECK(p3.blocks[0] == std::vector<Vertex>{0, 1, 2});
  const auto p7 = greedy_partial_steiner(7, 3);
  CHECK(p7.blocks.size() == 7);
  CHECK(is_packing(p7));
  const auto p13 = greedy_partial_steiner(13, 4);
  CHECK(is_packing(p13));
  CHECK(p13.blocks.size() >= 9);
  for (std::uint64_t n = 2; n <= 200; n += n < 40 ? 1 : 17)
    for (unsigned k = 2; k <= std::min<std::uint64_t>(n, 6); ++k) {
      const auto p = greedy_partial_steiner(n, k);
      REQUIRE(is_packing(p));
      // maximality: no further k-set fits
      std::vector<std::vector<int>> used(n, std::vector<int>(n, 0));
      for (const auto& b : p.blocks)
        for (auto x : b)
          for (auto y : b) used[x][y] = 1;
      if (n <= 14) {
        auto c = first_combination(k);
        do {
          bool fits = true;
          for (unsigned i = 0; i < k && fits; ++i)
            for (unsigned j = i + 1; j < k && fits; ++j) fits = !used[c[i]][c[j]];
          REQUIRE_FALSE(fits);
        } while (next_combination(c, n));
      }
    }
  SteinerPacking bad{5, 3, {{0, 1, 2}, {0, 1, 3}}};
  CHECK_FALSE(is_packing(bad));
}

TEST_CASE("expected_blue_bound matches a big-integer scan") {
  CHECK(expected_blue_bound(3, 10, 15, 1.0 / 8) == scan_blue_bound(10, 15, 8));
  for (std::uint64_t blocks : {1, 15, 40, 100, 200, 300})
    CHECK(expected_blue_bound(3, 10, blocks, 1.0 / 8) == scan_blue_bound(10, blocks, 8));
  for (std::uint64_t blocks : {10, 200, 1500})
    CHECK(expected_blue_bound(4, 8, blocks, 1.0 / 729) == scan_blue_bound(8, blocks, 729));
  for (std::uint64_t blocks : {1, 3, 7, 20})
    CHECK(expected_blue_bound(5, 6, blocks, 1.0 / 2) == scan_blue_bound(6, blocks, 2));
}

TEST_CASE("expected_blue_bound properties") {
  // n = k, one block: C(N,k)(1-q) < 1
  CHECK(expected_blue_bound(3, 3, 1, 0.5) == 3);  // C(3,3)/2 < 1, C(4,3)/2 = 2
  CHECK(expected_blue_bound(3, 3, 1, 0.85) == 4);  // 4 * 0.15 < 1, 10 * 0.15 > 1
  CHECK(expected_blue_bound(3, 3, 1, 0.96) == 6);
  CHECK(expected_blue_bound(3, 10, 0, 0.5) == 0);
  std::uint64_t prev = 0;
  for (std::uint64_t b = 0; b < 400; b += 7) {
    const auto v = expected_blue_bound(4, 12, b, 1.0 / 729 * 50);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK_THROWS_AS(expected_blue_bound(3, 10, 5, 0.0), DomainError);
  CHECK_THROWS_AS(expected_blue_bound(3, 10, 5, 1.0), DomainError);
}

TEST_CASE("red_probability") {
  CHECK(red_probability(3) == doctest::Approx(1.0 / 8));
  CHECK(red_probability(5) == doctest::Approx(1.0 / 1024));
  CHECK(red_probability(4) == doctest::Approx(1.0 / 729));
}

TEST_CASE("search_certificate") {
  CHECK(search_certificate(3, 10, 1, 0).claims.empty());
  for (unsigned k : {3u, 4u}) {
    const auto cert = search_certificate(k, 10, 1, 4);
    REQUIRE(cert.claims.size() == 2);
    CHECK(cert.claims[0].property == "red-free:B" + std::to_string(k));
    CHECK(cert.claims[0].status == "exact");
    CHECK(cert.claims[0].holds());
    CHECK(cert.claims[1].property == "max-blue-clique");
    CHECK(cert.claims[1].status == "exact");
    // the chosen trial really has that blue clique number
    const auto trial = cert.construction.param_u64("trial");
    const auto chi = certificate_trial_coloring(k, 10, 1, trial);
    const auto blue = brute::max_clique(k, 10, [&](std::span<const Vertex> e) {
      return chi->color_of(e) == Color::blue;
    });
    CHECK(cert.claims[1].value == blue);
  }
  CHECK_THROWS_AS(search_certificate(2, 10, 1, 1), DomainError);
  // identical across worker counts
  CertificateSearchOptions par;
  par.workers = 4;
  CHECK(search_certificate(3, 9, 3, 8).claims == search_certificate(3, 9, 3, 8, par).claims);
}
