#include "hyperramsey/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "bitset.hpp"
#include "hyperramsey/errors.hpp"
#include "hyperramsey/random.hpp"

namespace hr::oracle {

using detail::Bits;

namespace {

constexpr std::uint64_t kMaxExactUniverse = 1 << 14;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

class CliqueSearch {
 public:
  CliqueSearch(const SubsetPredicate& p, Budget b) : p_(p), budget_(b) {}

  SearchResult run() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = p_.n;
    Bits cand(n);
    cand.set_all();
    std::vector<Bits> rows(n, Bits(n));
    for (std::size_t v = 0; v < n; ++v) {
      rows[v].set_all();
      rows[v].reset(v);
    }
    if (p_.k == 2) {
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = v + 1; w < n; ++w) {
          const Vertex pair[2] = {v, w};
          if (!p_.holds(pair)) {
            rows[v].reset(w);
            rows[w].reset(v);
          }
        }
    }
    expand(cand, rows);
    SearchResult r;
    r.value = best_.size();
    r.witness = best_;
    std::sort(r.witness.begin(), r.witness.end());
    r.status = aborted_ ? Status::lower_bound : Status::exact;
    r.nodes_explored = nodes_;
    r.wall_time = seconds_since(t0);
    return r;
  }

 private:
  // True iff every k-subset of C together with the extra vertices, that
  // contains all of the extra vertices, satisfies the predicate.
  bool extends(std::span<const Vertex> extra) {
    const std::size_t need = p_.k - extra.size();
    if (clique_.size() < need) return true;
    return for_each_subset(clique_, need, [&](std::span<const Vertex> y) {
      scratch_.assign(y.begin(), y.end());
      scratch_.insert(scratch_.end(), extra.begin(), extra.end());
      std::sort(scratch_.begin(), scratch_.end());
      return p_.holds(scratch_);
    });
  }

  void expand(Bits cand, const std::vector<Bits>& rows) {
    if (++nodes_ > budget_.nodes) {
      aborted_ = true;
      return;
    }
    if (clique_.size() > best_.size()) best_ = clique_;
    if (cand.none()) return;

    // Degree order (ties by smaller index), then greedy sequential coloring.
    auto order = cand.members();
    std::vector<std::size_t> deg(p_.n, 0);
    for (auto v : order) deg[v] = rows[v].count_and(cand);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    std::vector<Bits> classes;
    std::vector<std::pair<std::size_t, std::size_t>> colored;  // (color, vertex)
    for (auto v : order) {
      std::size_t c = 0;
      while (c < classes.size() && rows[v].count_and(classes[c]) != 0) ++c;
      if (c == classes.size()) classes.emplace_back(p_.n);
      classes[c].set(v);
      colored.emplace_back(c + 1, v);
    }
    std::stable_sort(colored.begin(), colored.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    for (auto it = colored.rbegin(); it != colored.rend(); ++it) {
      if (aborted_) return;
      const auto [color, v] = *it;
      if (clique_.size() + color <= best_.size()) return;
      Bits next = cand & rows[v];
      std::vector<Bits> child_rows;
      const std::vector<Bits>* use = &rows;
      if (p_.k >= 3 && clique_.size() + 3 >= p_.k && !next.none()) {
        child_rows.assign(p_.n, Bits());
        const auto members = next.members();
        for (auto w : members) child_rows[w] = rows[w] & next;
        for (std::size_t i = 0; i < members.size(); ++i)
          for (std::size_t j = i + 1; j < members.size(); ++j) {
            const auto w = members[i], x = members[j];
            if (!child_rows[w].test(x)) continue;
            const Vertex extra[3] = {v, w, x};
            if (!extends(extra)) {
              child_rows[w].reset(x);
              child_rows[x].reset(w);
            }
          }
        use = &child_rows;
      }
      clique_.push_back(v);
      expand(next, *use);
      clique_.pop_back();
      cand.reset(v);
    }
  }

  const SubsetPredicate& p_;
  Budget budget_;
  std::vector<Vertex> clique_, best_, scratch_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

class IndependenceSearch {
 public:
  IndependenceSearch(const SubsetPredicate& edge, unsigned s, Budget b)
      : e_(edge), s_(s), budget_(b) {}

  SearchResult run() {
    const auto t0 = std::chrono::steady_clock::now();
    dfs(0);
    SearchResult r;
    r.value = best_.size();
    r.witness = best_;
    r.status = aborted_ ? Status::lower_bound : Status::exact;
    r.nodes_explored = nodes_;
    r.wall_time = seconds_since(t0);
    return r;
  }

 private:
  // Whether adding v to the current set creates a K_s^k through v.
  bool closes_clique(Vertex v) {
    if (set_.size() + 1 < s_) return false;
    return !for_each_subset(set_, s_ - 1, [&](std::span<const Vertex> y) {
      members_.assign(y.begin(), y.end());
      members_.push_back(v);  // v exceeds every chosen vertex
      const bool clique = for_each_subset(members_, e_.k, [&](std::span<const Vertex> sub) {
        return e_.holds(sub);
      });
      return !clique;
    });
  }

  void dfs(Vertex i) {
    if (aborted_) return;
    if (++nodes_ > budget_.nodes) {
      aborted_ = true;
      return;
    }
    if (set_.size() > best_.size()) best_ = set_;
    if (i == e_.n || set_.size() + (e_.n - i) <= best_.size()) return;
    if (!closes_clique(i)) {
      set_.push_back(i);
      dfs(i + 1);
      set_.pop_back();
    }
    dfs(i + 1);
  }

  const SubsetPredicate& e_;
  unsigned s_;
  Budget budget_;
  std::vector<Vertex> set_, best_, members_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::exact: return "exact";
    case Status::lower_bound: return "lower_bound";
    case Status::upper_bound: return "upper_bound";
  }
  return "?";
}

SearchResult max_clique(const SubsetPredicate& p, Budget budget) {
  if (p.k == 0) throw DomainError("uniformity must be positive");
  if (p.n > kMaxExactUniverse)
    throw DomainError("clique search limited to " + std::to_string(kMaxExactUniverse) +
                      " vertices, got " + std::to_string(p.n));
  if (p.k == 1) {
    SearchResult r;
    for (Vertex v = 0; v < p.n; ++v) {
      const Vertex one[1] = {v};
      if (p.holds(one)) r.witness.push_back(v);
    }
    r.value = r.witness.size();
    r.nodes_explored = p.n;
    return r;
  }
  return CliqueSearch(p, budget).run();
}

SearchResult max_mono_clique(const Coloring& coloring, Color color, Budget budget) {
  const auto n = concrete_size(coloring.size(), kMaxExactUniverse);
  SubsetPredicate p{coloring.uniformity(), n, [&](std::span<const Vertex> s) {
                      return coloring.color_of(s) == color;
                    }};
  return max_clique(p, budget);
}

SearchResult alpha_s(const Hypergraph& h, unsigned s, Budget budget) {
  if (s < h.uniformity()) throw DomainError("alpha_s needs s >= k");
  const auto n = concrete_size(h.size(), kMaxExactUniverse);
  SubsetPredicate e{h.uniformity(), n, [&](std::span<const Vertex> sub) { return h.is_edge(sub); }};
  return IndependenceSearch(e, s, budget).run();
}

double spencer_bound(std::uint64_t n, unsigned k, std::uint64_t edges) {
  const double nn = static_cast<double>(n);
  return (1.0 - 1.0 / k) * nn *
         std::pow(nn / (static_cast<double>(k) * static_cast<double>(edges)), 1.0 / (k - 1));
}

std::vector<Vertex> spencer_independent_set(const ExplicitHypergraph& h, std::uint64_t seed,
                                            std::uint64_t max_attempts) {
  const unsigned k = h.uniformity();
  const std::uint64_t n = h.vertex_count();
  const auto edges = h.edges();
  const std::uint64_t m = edges.size();
  if (k < 2) throw DomainError("spencer_independent_set needs k >= 2");
  if (static_cast<double>(m) * k <= static_cast<double>(n))
    throw DomainError("spencer_independent_set needs |E| > N/k");
  const double p = std::pow(static_cast<double>(n) / (static_cast<double>(k) * m), 1.0 / (k - 1));
  const double bound = spencer_bound(n, k, m);

  std::vector<char> keep(n);
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    auto rng = make_stream(seed, attempt);
    for (std::uint64_t v = 0; v < n; ++v) keep[v] = uniform_unit(rng) < p;
    for (const auto& e : edges) {
      if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return keep[v]; })) keep[e.back()] = 0;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
      if (keep[v]) out.push_back(v);
    if (static_cast<double>(out.size()) >= bound) return out;
  }
  throw std::runtime_error("spencer_independent_set: no set reached the bound in " +
                           std::to_string(max_attempts) + " attempts");
}

void parallel_for(std::uint64_t count, unsigned workers,
                  const std::function<void(std::uint64_t)>& body) {
  if (workers <= 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = count * w / workers, hi = count * (w + 1) / workers;
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::uint64_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

SampleReport sample_verify(const std::function<bool(std::span<const Vertex>)>& predicate,
                           std::uint64_t universe, std::size_t subset_size, std::uint64_t trials,
                           std::uint64_t seed, unsigned workers) {
  if (subset_size > universe) throw DomainError("subset size exceeds universe");
  SampleReport report{trials, seed, universe, subset_size, {}};
  std::mutex mu;
  parallel_for(trials, workers, [&](std::uint64_t i) {
    auto rng = make_stream(seed, i);
    auto subset = sample_subset(rng, universe, subset_size);
    if (!predicate(subset)) {
      std::lock_guard lock(mu);
      report.violations.push_back({i, std::move(subset)});
    }
  });
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) { return a.trial < b.trial; });
  return report;
}

}  // namespace hr::oracle
