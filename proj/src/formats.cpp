#include "hyperramsey/formats.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "hyperramsey/errors.hpp"

namespace hr::formats {

namespace {

// Non-empty content lines with comments stripped, numbered for messages.
class Lines {
 public:
  explicit Lines(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const auto b = raw.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      const auto e = raw.find_last_not_of(" \t\r");
      line = raw.substr(b, e - b + 1);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("line " + std::to_string(number_) + ": " + what);
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  return {std::istream_iterator<std::string>(ss), std::istream_iterator<std::string>()};
}

std::uint64_t to_u64(const std::string& s, const Lines& lines) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    lines.fail("expected a non-negative integer, got '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    lines.fail("integer out of range: " + s);
  }
}

// "MAGIC 1 key=value ..." -> key/value map.
std::map<std::string, std::string> header(Lines& lines, const char* magic) {
  std::string line;
  if (!lines.next(line)) throw FormatError(std::string("empty input, expected ") + magic);
  auto tok = split(line);
  if (tok.size() < 2 || tok[0] != magic) lines.fail(std::string("expected header '") + magic + " 1'");
  if (tok[1] != "1") lines.fail("unsupported " + tok[0] + " version " + tok[1]);
  std::map<std::string, std::string> kv;
  for (std::size_t i = 2; i < tok.size(); ++i) {
    const auto eq = tok[i].find('=');
    if (eq == std::string::npos) lines.fail("malformed header field '" + tok[i] + "'");
    kv[tok[i].substr(0, eq)] = tok[i].substr(eq + 1);
  }
  return kv;
}

std::uint64_t header_u64(const std::map<std::string, std::string>& kv, const char* key,
                         const Lines& lines) {
  auto it = kv.find(key);
  if (it == kv.end()) lines.fail(std::string("header is missing ") + key + "=");
  return to_u64(it->second, lines);
}

std::vector<Vertex> read_subset(const std::vector<std::string>& tok, std::size_t k,
                                std::uint64_t n, const Lines& lines) {
  std::vector<Vertex> s;
  for (std::size_t i = 0; i < k; ++i) s.push_back(to_u64(tok[i], lines));
  for (std::size_t i = 0; i < k; ++i) {
    if (s[i] >= n) lines.fail("vertex " + tok[i] + " out of range");
    if (i > 0 && s[i - 1] >= s[i]) lines.fail("vertices must be strictly ascending");
  }
  return s;
}

void write_subset(std::ostream& out, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
}

bool descriptor_line(Descriptor& d, const std::string& key, const std::string& value) {
  if (key == "family") {
    d.family = value;
  } else if (key.rfind("param.", 0) == 0) {
    d.params[key.substr(6)] = value;
  } else if (key == "base.digest") {
    d.base_digest = value;
  } else {
    return false;
  }
  return true;
}

void write_descriptor_lines(std::ostream& out, const Descriptor& d) {
  out << "family=" << d.family << "\n";
  for (const auto& [k, v] : d.params) out << "param." << k << "=" << v << "\n";
  if (!d.base_digest.empty()) out << "base.digest=" << d.base_digest << "\n";
}

std::pair<std::string, std::string> key_value(const std::string& line, const Lines& lines) {
  const auto eq = line.find('=');
  if (eq == std::string::npos || eq == 0) lines.fail("expected key=value, got '" + line + "'");
  return {line.substr(0, eq), line.substr(eq + 1)};
}

std::vector<std::uint64_t> parse_list(const std::string& s, const Lines& lines) {
  std::vector<std::uint64_t> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(to_u64(s.substr(start, comma - start), lines));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

}  // namespace

const char* to_string(Kind k) {
  switch (k) {
    case Kind::kgc: return "KGC";
    case Kind::hgr: return "HGR";
    case Kind::trn: return "TRN";
    case Kind::dsc: return "DSC";
    case Kind::cert: return "CERT";
  }
  return "?";
}

Kind sniff(std::string_view text) {
  std::istringstream in{std::string(text)};
  Lines lines(in);
  std::string line;
  if (!lines.next(line)) throw FormatError("empty input");
  const auto magic = split(line).front();
  for (Kind k : {Kind::kgc, Kind::hgr, Kind::trn, Kind::dsc, Kind::cert})
    if (magic == to_string(k)) return k;
  throw FormatError("unrecognized file header '" + magic + "'");
}

ExplicitColoring read_kgc(std::istream& in) {
  Lines lines(in);
  const auto kv = header(lines, "KGC");
  const auto k = header_u64(kv, "k", lines), n = header_u64(kv, "n", lines);
  if (k == 0 || k > 64) lines.fail("uniformity must be in 1..64");
  ExplicitColoring c(static_cast<unsigned>(k), n);
  std::vector<bool> seen(c.subset_count(), false);
  std::uint64_t count = 0;
  std::string line;
  while (lines.next(line)) {
    const auto tok = split(line);
    if (tok.size() != k + 1) lines.fail("expected " + std::to_string(k) + " vertices and R|B");
    const auto s = read_subset(tok, k, n, lines);
    if (tok[k] != "R" && tok[k] != "B") lines.fail("color must be R or B, got '" + tok[k] + "'");
    const auto rank = colex_rank(s);
    if (seen[rank]) lines.fail("subset listed twice");
    seen[rank] = true;
    ++count;
    c.set_at_rank(rank, tok[k] == "R" ? Color::red : Color::blue);
  }
  if (count != c.subset_count())
    throw FormatError("KGC lists " + std::to_string(count) + " of " +
                      std::to_string(c.subset_count()) + " subsets");
  return c;
}

void write_kgc(std::ostream& out, const Coloring& c) {
  const unsigned k = c.uniformity();
  const auto n = concrete_size(c.size(), std::uint64_t{1} << 32);
  out << "KGC 1 k=" << k << " n=" << n << "\n";
  if (k > n) return;
  auto s = first_combination(k);
  do {
    write_subset(out, s);
    out << (c.color_of(s) == Color::red ? " R\n" : " B\n");
  } while (next_combination(s, n));
}

ExplicitHypergraph read_hgr(std::istream& in) {
  Lines lines(in);
  const auto kv = header(lines, "HGR");
  const auto k = header_u64(kv, "k", lines), n = header_u64(kv, "n", lines);
  if (k == 0 || k > 64) lines.fail("uniformity must be in 1..64");
  ExplicitHypergraph h(static_cast<unsigned>(k), n);
  std::string line;
  while (lines.next(line)) {
    const auto tok = split(line);
    if (tok.size() != k) lines.fail("expected " + std::to_string(k) + " vertices");
    const auto s = read_subset(tok, k, n, lines);
    if (h.is_edge(s)) lines.fail("edge listed twice");
    h.set_edge(s, true);
  }
  return h;
}

void write_hgr(std::ostream& out, const Hypergraph& h) {
  const unsigned k = h.uniformity();
  const auto n = concrete_size(h.size(), std::uint64_t{1} << 32);
  out << "HGR 1 k=" << k << " n=" << n << "\n";
  if (k > n) return;
  auto s = first_combination(k);
  do {
    if (h.is_edge(s)) {
      write_subset(out, s);
      out << "\n";
    }
  } while (next_combination(s, n));
}

tourney::Tournament read_trn(std::istream& in) {
  Lines lines(in);
  const auto kv = header(lines, "TRN");
  const auto n = header_u64(kv, "n", lines);
  if (n > (std::uint64_t{1} << 16)) lines.fail("tournament too large");
  tourney::Tournament t(n);
  std::vector<bool> seen(n * n, false);
  std::uint64_t count = 0;
  std::string line;
  while (lines.next(line)) {
    const auto tok = split(line);
    if (tok.size() != 2) lines.fail("expected 'i j'");
    const auto i = to_u64(tok[0], lines), j = to_u64(tok[1], lines);
    if (i >= n || j >= n || i == j) lines.fail("bad arc " + line);
    if (seen[i * n + j]) lines.fail("pair listed twice");
    seen[i * n + j] = seen[j * n + i] = true;
    ++count;
    t.orient(i, j);
  }
  if (count != n * (n - (n > 0)) / 2)
    throw FormatError("TRN lists " + std::to_string(count) + " of " +
                      std::to_string(n * (n - (n > 0)) / 2) + " pairs");
  return t;
}

void write_trn(std::ostream& out, const tourney::Tournament& t) {
  const auto n = t.size();
  out << "TRN 1 n=" << n << "\n";
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      out << (t.beats(i, j) ? i : j) << " " << (t.beats(i, j) ? j : i) << "\n";
}

Descriptor read_dsc(std::istream& in) {
  Lines lines(in);
  header(lines, "DSC");
  Descriptor d;
  std::string line;
  while (lines.next(line)) {
    const auto [key, value] = key_value(line, lines);
    if (!descriptor_line(d, key, value)) lines.fail("unknown descriptor key '" + key + "'");
  }
  if (d.family.empty()) throw FormatError("descriptor has no family=");
  return d;
}

void write_dsc(std::ostream& out, const Descriptor& d) {
  out << "DSC 1\n";
  write_descriptor_lines(out, d);
}

Certificate read_cert(std::istream& in) {
  Lines lines(in);
  header(lines, "CERT");
  Certificate c;
  c.tool_version.clear();
  std::string line;
  while (lines.next(line)) {
    if (line.rfind("claim=", 0) == 0) {
      Claim claim;
      bool has_status = false;
      for (const auto& tok : split(line)) {
        const auto [key, value] = key_value(tok, lines);
        if (key == "claim") claim.property = value;
        else if (key == "status") claim.status = value, has_status = true;
        else if (key == "value") claim.value = to_u64(value, lines);
        else if (key == "budget") claim.budget = to_u64(value, lines);
        else if (key == "seed") claim.seed = to_u64(value, lines);
        else if (key == "witness") claim.witness = parse_list(value, lines);
        else lines.fail("unknown claim field '" + key + "'");
      }
      if (claim.property.empty() || !has_status) lines.fail("claim needs claim= and status=");
      c.claims.push_back(std::move(claim));
      continue;
    }
    const auto [key, value] = key_value(line, lines);
    if (descriptor_line(c.construction, key, value)) continue;
    if (key == "seed") c.seed = to_u64(value, lines);
    else if (key == "tool.version") c.tool_version = value;
    else if (key == "timestamp") c.timestamp = value;
    else lines.fail("unknown certificate key '" + key + "'");
  }
  return c;
}

void write_cert(std::ostream& out, const Certificate& c) {
  out << "CERT 1\n";
  out << "tool.version=" << c.tool_version << "\n";
  if (!c.timestamp.empty()) out << "timestamp=" << c.timestamp << "\n";
  out << "seed=" << c.seed << "\n";
  if (!c.construction.family.empty()) write_descriptor_lines(out, c.construction);
  for (const auto& claim : c.claims) {
    out << "claim=" << claim.property << " status=" << claim.status << " value=" << claim.value
        << " budget=" << claim.budget << " seed=" << claim.seed;
    if (!claim.witness.empty()) {
      out << " witness=";
      for (std::size_t i = 0; i < claim.witness.size(); ++i)
        out << (i ? "," : "") << claim.witness[i];
    }
    out << "\n";
  }
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& path, std::string_view text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
  if (!out) throw FormatError("write to '" + path + "' failed");
}

}  // namespace hr::formats
