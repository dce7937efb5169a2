#include "hyperramsey/driver.hpp"

#include <atomic>
#include <filesystem>
#include <mutex>
#include <sstream>

#include "hyperramsey/errors.hpp"
#include "hyperramsey/halfgraph.hpp"
#include "hyperramsey/oracle.hpp"
#include "hyperramsey/rogers.hpp"
#include "hyperramsey/stepup.hpp"

namespace hr::driver {

namespace fs = std::filesystem;

namespace {

// Exact clique search above this many vertices is hopeless; sample instead.
constexpr std::uint64_t kExactVertexLimit = 4096;
constexpr std::uint64_t kHalfgraphExhaustive = 5'000'000;
// Explicit files for Frankl-Wilson only while the pair table stays small.
constexpr std::uint64_t kExplicitPairLimit = 4096;

const std::string& need(const Params& p, const std::string& key, const std::string& family) {
  auto it = p.find(key);
  if (it == p.end() || it->second.empty())
    throw DomainError(family + " needs parameter '" + key + "'");
  return it->second;
}

std::uint64_t need_u64(const Params& p, const std::string& key, const std::string& family) {
  const auto& v = need(p, key, family);
  if (v.find_first_not_of("0123456789") != std::string::npos)
    throw DomainError(family + ": parameter '" + key + "' must be a non-negative integer");
  try {
    return std::stoull(v);
  } catch (const std::out_of_range&) {
    throw DomainError(family + ": parameter '" + key + "' out of range");
  }
}

std::uint64_t opt_u64(const Params& p, const std::string& key, std::uint64_t fallback,
                      const std::string& family) {
  return p.count(key) ? need_u64(p, key, family) : fallback;
}

unsigned small(std::uint64_t v, const std::string& what) {
  if (v > 64) throw DomainError(what + " must be at most 64");
  return static_cast<unsigned>(v);
}

std::string absolute(const std::string& path) {
  return fs::absolute(path).lexically_normal().string();
}

std::string locate(const std::string& path, const std::string& base_dir) {
  fs::path p(path);
  if (p.is_absolute() || base_dir.empty()) return path;
  return (fs::path(base_dir) / p).lexically_normal().string();
}

std::string directory_of(const std::string& path) {
  if (path == "-") return fs::current_path().string();
  return fs::absolute(path).parent_path().string();
}

// Reads a referenced file and checks it against the recorded digest.
std::string read_checked(const std::string& path, const std::string& expected) {
  const auto text = formats::read_text(path);
  if (!expected.empty() && formats::digest(text) != expected)
    throw FormatError("digest mismatch for '" + path + "': file changed since it was recorded");
  return text;
}

std::shared_ptr<const ExplicitColoring> parse_kgc(const std::string& text) {
  std::istringstream in(text);
  return std::make_shared<const ExplicitColoring>(formats::read_kgc(in));
}

Object from_text(const std::string& text, const std::string& path, const std::string& dir) {
  std::istringstream in(text);
  switch (formats::sniff(text)) {
    case formats::Kind::kgc: {
      Object o;
      o.coloring = std::make_shared<const ExplicitColoring>(formats::read_kgc(in));
      o.native = formats::Kind::kgc;
      o.descriptor = {"kgc", {{"path", path}}, formats::digest(text)};
      return o;
    }
    case formats::Kind::hgr: {
      Object o;
      o.hypergraph = std::make_shared<const ExplicitHypergraph>(formats::read_hgr(in));
      o.native = formats::Kind::hgr;
      o.descriptor = {"hgr", {{"path", path}}, formats::digest(text)};
      return o;
    }
    case formats::Kind::trn: {
      Object o;
      o.tournament = formats::read_trn(in);
      o.native = formats::Kind::trn;
      o.descriptor = {"trn", {{"path", path}}, formats::digest(text)};
      return o;
    }
    case formats::Kind::dsc:
      return resolve(formats::read_dsc(in), dir);
    case formats::Kind::cert: {
      auto cert = formats::read_cert(in);
      auto o = resolve(cert.construction, dir);
      o.certificate = std::move(cert);
      return o;
    }
  }
  throw FormatError("unreadable input");
}

std::string file_path(const std::string& path) { return path == "-" ? path : absolute(path); }

Object stepup(const std::string& family, const Params& p) {
  const auto& base_path = need(p, "base", family);
  const auto text = formats::read_text(base_path);
  auto base = parse_kgc(text);
  const unsigned k = base->uniformity() + 1;
  const bool four = family == "stepup4";
  if (p.count("k") && need_u64(p, "k", family) != k)
    throw DomainError(family + ": requested k=" + p.at("k") + " but the base has k=" +
                      std::to_string(k - 1));
  Object o;
  o.coloring = stepup::lift(base, four ? stepup::LiftMode::theorem4 : stepup::LiftMode::lemmak, k);
  o.descriptor = {family, {{"base", file_path(base_path)}, {"k", std::to_string(k)}},
                  formats::digest(text)};
  return o;
}

std::shared_ptr<const Hypergraph> rogers_base(const Params& p, std::string& digest) {
  const auto& base = need(p, "base", "rogers");
  if (base == "empty" || base == "complete") {
    const auto k = small(need_u64(p, "base-k", "rogers"), "base-k");
    const auto n = need_u64(p, "base-n", "rogers");
    if (base == "empty") return std::make_shared<const EmptyHypergraph>(k, n);
    return std::make_shared<const CompleteHypergraph>(k, n);
  }
  const auto text = read_checked(base, digest);
  digest = formats::digest(text);
  std::istringstream in(text);
  return std::make_shared<const ExplicitHypergraph>(formats::read_hgr(in));
}

Object rogers_tower(const Params& p, const std::string& expected_digest) {
  std::string digest = expected_digest;
  auto base = rogers_base(p, digest);
  const auto depth = static_cast<unsigned>(opt_u64(p, "depth", 1, "rogers"));
  auto stack = rogers::build_tower(base, depth);
  Object o;
  o.hypergraph = stack.levels.back();
  Params params = p;
  params["depth"] = std::to_string(depth);
  if (p.at("base") != "empty" && p.at("base") != "complete") params["base"] = file_path(p.at("base"));
  o.descriptor = {"rogers", params, digest};
  return o;
}

Object halfgraph_build(const std::string& family, const Params& p, const RunConfig& cfg) {
  const auto k = small(need_u64(p, "k", family), "k");
  const auto n = need_u64(p, "n", family);
  if ((family == "halfgraph-odd") != (k % 2 == 1))
    throw DomainError(family + " needs " + (family == "halfgraph-odd" ? "odd" : "even") + " k");
  const auto seed = opt_u64(p, "seed", cfg.seed, family);
  const auto trials = opt_u64(p, "trials", 1, family);
  if (trials == 0) throw DomainError(family + ": trials must be positive");
  halfgraph::CertificateSearchOptions opts;
  opts.red_budget = {kHalfgraphExhaustive, cfg.budget_trials, seed};
  opts.blue_budget = {cfg.budget_nodes};
  opts.workers = cfg.workers;
  auto cert = halfgraph::search_certificate(k, n, seed, trials, opts);
  Object o;
  o.descriptor = cert.construction;
  o.coloring =
      halfgraph::certificate_trial_coloring(k, n, seed, cert.construction.param_u64("trial"));
  o.native = formats::Kind::kgc;
  o.certificate = std::move(cert);
  return o;
}

std::uint64_t frankl_wilson_vertices(std::uint64_t p) {
  return binomial(p * p * p, p * p - 1);
}

Object transform(const Params& p, const std::string& expected_digest) {
  const auto& input = need(p, "input", "transform");
  const auto text = read_checked(input, expected_digest);
  auto chi = parse_kgc(text);
  if (chi->uniformity() != 2) throw DomainError("transform needs a 2-uniform coloring");
  Object o;
  o.tournament = tourney::coloring_to_tournament(*chi);
  o.native = formats::Kind::trn;
  o.descriptor = {"transform", {{"input", file_path(input)}}, formats::digest(text)};
  return o;
}

Object generated(const std::string& family, const Params& p) {
  Object o;
  if (family == "paley") {
    const auto q = need_u64(p, "q", family);
    o.coloring = std::make_shared<const tourney::GraphColoring2>(tourney::paley_graph(q));
    o.native = formats::Kind::kgc;
    o.descriptor = {family, {{"q", std::to_string(q)}}, ""};
  } else if (family == "qr-tournament") {
    const auto q = need_u64(p, "q", family);
    o.tournament = tourney::qr_tournament(q);
    o.native = formats::Kind::trn;
    o.descriptor = {family, {{"q", std::to_string(q)}}, ""};
  } else if (family == "frankl-wilson") {
    const auto prime = need_u64(p, "p", family);
    if (prime > 4) throw DomainError("frankl-wilson supports p in {2, 3} (p^3 <= 64)");
    o.coloring = tourney::frankl_wilson_graph(prime);
    o.native = frankl_wilson_vertices(prime) <= kExplicitPairLimit ? formats::Kind::kgc
                                                                  : formats::Kind::dsc;
    o.descriptor = {family, {{"p", std::to_string(prime)}}, ""};
  } else {
    throw DomainError("unknown family '" + family + "'");
  }
  return o;
}

Params with_dir(Params p, const std::string& key, const std::string& dir) {
  if (auto it = p.find(key); it != p.end() && it->second != "empty" && it->second != "complete")
    it->second = locate(it->second, dir);
  return p;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw DomainError("malformed " + what + " '" + s + "'");
  return std::stoull(s);
}

const char* final_or(oracle::Status s) { return oracle::to_string(s); }

Claim no_clique(const std::string& mode, std::uint64_t size, const Object& obj,
                const RunConfig& cfg) {
  SubsetPredicate pred;
  if (mode == "edge") {
    if (!obj.hypergraph) throw DomainError("no-clique:edge needs a hypergraph");
    pred = edge_predicate(*obj.hypergraph);
  } else {
    if (!obj.coloring) throw DomainError("no-clique:" + mode + " needs a coloring");
    pred = color_predicate(*obj.coloring, parse_color(mode));
  }
  Claim c;
  c.property = "no-clique:" + mode + ":" + std::to_string(size);
  c.seed = cfg.seed;
  if (size < pred.k) throw DomainError("clique size must be at least the uniformity");
  const auto n = concrete_size(obj.coloring ? obj.coloring->size() : obj.hypergraph->size(),
                               std::uint64_t{1} << 62);
  if (n <= kExactVertexLimit) {
    auto r = oracle::max_clique(pred, {cfg.budget_nodes});
    c.status = final_or(r.status);
    c.value = r.value;
    c.budget = cfg.budget_nodes;
    if (r.value >= size) c.witness = r.witness;
    return c;
  }
  if (size > n) {
    c.status = "exact";
    c.value = n;
    return c;
  }
  // Sampled: a violation is a monochromatic (all-edge) size-set.
  const unsigned k = pred.k;
  auto report = oracle::sample_verify(
      [&](std::span<const Vertex> s) { return !for_each_subset(s, k, pred.holds); }, n, size,
      cfg.budget_trials, cfg.seed, cfg.workers);
  c.budget = cfg.budget_trials;
  if (report.violations.empty()) {
    c.status = "zero-violation";
    c.value = size - 1;
  } else {
    c.status = "exact";
    c.value = size;
    c.witness = report.violations.front().subset;
  }
  return c;
}

Claim no_halfgraph(unsigned k, const Object& obj, const RunConfig& cfg) {
  if (!obj.coloring) throw DomainError("no-halfgraph needs a coloring");
  if (obj.coloring->uniformity() != k)
    throw DomainError("no-halfgraph:B" + std::to_string(k) + " on a " +
                      std::to_string(obj.coloring->uniformity()) + "-uniform coloring");
  auto r = halfgraph::find_red_halfgraph(*obj.coloring,
                                         {kHalfgraphExhaustive, cfg.budget_trials, cfg.seed});
  Claim c;
  c.property = "no-halfgraph:B" + std::to_string(k);
  c.seed = cfg.seed;
  c.budget = cfg.budget_trials;
  c.value = r.witness ? 1 : 0;
  c.status = (r.exhaustive || r.witness) ? "exact" : "zero-violation";
  if (r.witness) {
    c.witness = r.witness->s;
    c.witness.insert(c.witness.end(), r.witness->t.begin(), r.witness->t.end());
    c.witness.push_back(r.witness->apex);
  }
  return c;
}

Claim theorem5(std::uint64_t N, const RunConfig& cfg) {
  if (N < 2 || N > 7) throw DomainError("theorem5 exhaustive check supports 2 <= N <= 7");
  const std::uint64_t pairs = N * (N - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  std::atomic<std::uint64_t> violations{0};
  std::atomic<bool> inexact{false};
  std::mutex mu;
  std::optional<std::uint64_t> first;
  oracle::parallel_for(total, cfg.workers, [&](std::uint64_t code) {
    tourney::GraphColoring2 chi(N);
    std::uint64_t bit = 0;
    for (Vertex i = 0; i < N; ++i)
      for (Vertex j = i + 1; j < N; ++j, ++bit)
        chi.set(i, j, (code >> bit) & 1 ? Color::red : Color::blue);
    const auto red = oracle::max_mono_clique(chi, Color::red, {cfg.budget_nodes});
    const auto blue = oracle::max_mono_clique(chi, Color::blue, {cfg.budget_nodes});
    const auto tr = tourney::max_transitive(tourney::coloring_to_tournament(chi), {cfg.budget_nodes});
    if (red.status != oracle::Status::exact || blue.status != oracle::Status::exact ||
        tr.status != oracle::Status::exact)
      inexact = true;
    const auto m = std::max(red.value, blue.value);
    if (tr.value > (m + 1) * (m + 1) - 1) {
      ++violations;
      std::lock_guard lock(mu);
      if (!first || code < *first) first = code;
    }
  });
  Claim c;
  c.property = "theorem5:N" + std::to_string(N);
  c.status = inexact ? "lower_bound" : "exact";
  c.value = violations;
  c.budget = cfg.budget_nodes;
  c.seed = cfg.seed;
  if (first) c.witness = {*first};
  return c;
}

}  // namespace

Object resolve(const Descriptor& d, const std::string& base_dir) {
  const auto& f = d.family;
  if (f == "kgc" || f == "hgr" || f == "trn") {
    const auto path = locate(d.param("path"), base_dir);
    const auto text = read_checked(path, d.base_digest);
    auto o = from_text(text, path, directory_of(path));
    o.descriptor = d;
    return o;
  }
  if (f == "stepup4" || f == "stepupk") {
    auto p = with_dir(d.params, "base", base_dir);
    read_checked(p.at("base"), d.base_digest);
    auto o = stepup(f, p);
    o.descriptor = d;
    return o;
  }
  if (f == "rogers") {
    auto o = rogers_tower(with_dir(d.params, "base", base_dir), d.base_digest);
    o.descriptor = d;
    return o;
  }
  if (f == "halfgraph-odd" || f == "halfgraph-even") {
    Object o;
    o.descriptor = d;
    o.native = formats::Kind::kgc;
    o.coloring = halfgraph::certificate_trial_coloring(
        small(d.param_u64("k"), "k"), d.param_u64("n"), d.param_u64("seed"),
        d.param_u64("trial"));
    return o;
  }
  if (f == "transform") {
    auto o = transform(with_dir(d.params, "input", base_dir), d.base_digest);
    o.descriptor = d;
    return o;
  }
  if (f == "paley" || f == "qr-tournament" || f == "frankl-wilson") return generated(f, d.params);
  throw DomainError("descriptor family '" + f + "' names no construction");
}

Object build(const std::string& family, const Params& params, const RunConfig& cfg) {
  if (family == "stepup4" || family == "stepupk") return stepup(family, params);
  if (family == "rogers") return rogers_tower(params, "");
  if (family == "halfgraph-odd" || family == "halfgraph-even")
    return halfgraph_build(family, params, cfg);
  if (family == "transform") return transform(params, "");
  return generated(family, params);
}

Object load(const std::string& path) {
  const auto text = formats::read_text(path);
  return from_text(text, file_path(path), directory_of(path));
}

void save(const Object& obj, const std::string& path) {
  std::ostringstream out;
  switch (obj.native) {
    case formats::Kind::kgc: formats::write_kgc(out, *obj.coloring); break;
    case formats::Kind::hgr: formats::write_hgr(out, *obj.hypergraph); break;
    case formats::Kind::trn: formats::write_trn(out, *obj.tournament); break;
    case formats::Kind::dsc: formats::write_dsc(out, obj.descriptor); break;
    case formats::Kind::cert: throw DomainError("objects are not saved as certificates");
  }
  formats::write_text(path, out.str());
}

std::string property_for(const std::string& check, const Params& p, const Object* obj) {
  if (check == "no-clique") {
    const std::string fallback = obj && obj->hypergraph ? "edge" : "red";
    const auto color = p.count("color") ? p.at("color") : fallback;
    if (color != "red" && color != "blue" && color != "edge")
      throw DomainError("color must be red, blue or edge");
    return "no-clique:" + color + ":" + std::to_string(need_u64(p, "size", check));
  }
  if (check == "alpha") return "alpha:" + std::to_string(need_u64(p, "s", check));
  if (check == "no-halfgraph") {
    if (!obj || !obj->coloring) throw DomainError("no-halfgraph needs a coloring");
    return "no-halfgraph:B" + std::to_string(obj->coloring->uniformity());
  }
  if (check == "max-transitive") return "max-transitive";
  if (check == "theorem5") return "theorem5:N" + std::to_string(need_u64(p, "N", check));
  throw DomainError("unknown check '" + check + "'");
}

Claim run(const std::string& property, const Object* obj, const RunConfig& cfg) {
  const auto parts = split(property, ':');
  const auto& check = parts[0];
  if (check == "theorem5" && parts.size() == 2 && parts[1].rfind('N', 0) == 0)
    return theorem5(parse_u64(parts[1].substr(1), "N"), cfg);
  if (!obj) throw DomainError(check + " needs an input construction");
  if (check == "no-clique" && parts.size() == 3)
    return no_clique(parts[1], parse_u64(parts[2], "clique size"), *obj, cfg);
  if (check == "alpha" && parts.size() == 2) {
    if (!obj->hypergraph) throw DomainError("alpha needs a hypergraph");
    const auto s = small(parse_u64(parts[1], "s"), "s");
    auto r = oracle::alpha_s(*obj->hypergraph, s, {cfg.budget_nodes});
    return {property, final_or(r.status), r.value, cfg.budget_nodes, cfg.seed, r.witness};
  }
  if (check == "no-halfgraph" && parts.size() == 2 && parts[1].rfind('B', 0) == 0)
    return no_halfgraph(small(parse_u64(parts[1].substr(1), "k"), "k"), *obj, cfg);
  if (check == "max-transitive" && parts.size() == 1) {
    std::optional<tourney::Tournament> t = obj->tournament;
    if (!t) {
      if (!obj->coloring || obj->coloring->uniformity() != 2)
        throw DomainError("max-transitive needs a tournament or a 2-uniform coloring");
      t = tourney::coloring_to_tournament(*obj->coloring);
    }
    auto r = tourney::max_transitive(*t, {cfg.budget_nodes});
    return {property, final_or(r.status), r.value, cfg.budget_nodes, cfg.seed, r.witness};
  }
  throw DomainError("unknown property '" + property + "'");
}

Certificate replay(const Certificate& cert, const Object* obj, const RunConfig& cfg) {
  Certificate out = cert;
  out.claims.clear();
  for (const auto& claim : cert.claims) {
    if (claim.property.rfind("red-free", 0) == 0 || claim.property == "max-blue-clique") {
      out.claims.push_back(claim);  // recorded by the construction search itself
      continue;
    }
    RunConfig c = cfg;
    c.seed = claim.seed;
    c.budget_nodes = c.budget_trials = claim.budget;
    out.claims.push_back(run(claim.property, obj, c));
  }
  return out;
}

Verdict verdict(const Certificate& cert) {
  bool undecided = false;
  for (const auto& c : cert.claims) {
    if (c.holds()) continue;
    if (!c.undecided()) return Verdict::fails;
    undecided = true;
  }
  return undecided ? Verdict::undecided : Verdict::holds;
}

Certificate new_certificate(const Object* obj, std::uint64_t seed) {
  Certificate c;
  c.seed = seed;
  if (obj) c.construction = obj->descriptor;
  return c;
}

std::string format_t_report(const tourney::TResult& r) {
  std::ostringstream out;
  out << "T(" << r.n << ") ";
  if (r.value)
    out << "= " << *r.value << "\n";
  else if (r.exceeds_max)
    out << "> " << r.max_n << "\n";
  else
    out << "undetermined within N <= " << r.max_n << "\n";
  for (const auto& [N, how] : r.transcript) out << "  N=" << N << ": " << how << "\n";
  if (r.witness) {
    out << "witness on " << r.witness_size << " vertices (no transitive " << r.n
        << "-subtournament):\n";
    std::ostringstream trn;
    formats::write_trn(trn, *r.witness);
    out << trn.str();
  }
  return out.str();
}

}  // namespace hr::driver
