#pragma once

// Builds, loads and verifies constructions by family name. This is the
// layer behind the C API and the command-line tool.
//
// Claims are named by self-describing properties so a certificate can be
// re-run from its own text:
//   no-clique:<red|blue|edge>:<size>   no monochromatic / edge K_size^k
//   alpha:<s>                          s-independence number
//   no-halfgraph:B<k>                  no red k-half-graph
//   max-transitive                     largest transitive subtournament
//   theorem5:N<N>                      transform bound over all K_N colorings

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "hyperramsey/certificate.hpp"
#include "hyperramsey/config.hpp"
#include "hyperramsey/formats.hpp"
#include "hyperramsey/structures.hpp"
#include "hyperramsey/tourney.hpp"

namespace hr::driver {

using Params = std::map<std::string, std::string>;

/// A construction together with its provenance. Exactly one of coloring,
/// hypergraph, tournament is set.
struct Object {
  Descriptor descriptor;
  formats::Kind native = formats::Kind::dsc;  // format written by save()
  std::shared_ptr<const Coloring> coloring;
  std::shared_ptr<const Hypergraph> hypergraph;
  std::optional<tourney::Tournament> tournament;
  /// Set by builds that search (half-graph constructions).
  std::optional<Certificate> certificate;
};

/// Families: stepup4, stepupk, rogers, halfgraph-odd, halfgraph-even,
/// paley, qr-tournament, frankl-wilson, transform.
Object build(const std::string& family, const Params& params, const RunConfig& cfg);

/// Reads KGC, HGR, TRN, DSC (resolved against the file's directory) or
/// CERT (its construction). "-" reads stdin.
Object load(const std::string& path);

/// Rebuilds the object a descriptor names; relative paths are taken
/// relative to `base_dir`.
Object resolve(const Descriptor& d, const std::string& base_dir);

/// Writes the object in its native format ("-" for stdout).
void save(const Object& obj, const std::string& path);

/// Property string for a check name and its options, e.g.
/// ("no-clique", {color=red, size=5}) -> "no-clique:red:5".
std::string property_for(const std::string& check, const Params& params, const Object* obj);

/// Runs the oracle a property names. obj may be null only for theorem5.
/// The claim's budget and seed come from cfg.
Claim run(const std::string& property, const Object* obj, const RunConfig& cfg);

/// Re-runs every claim with its recorded budget and seed.
Certificate replay(const Certificate& cert, const Object* obj, const RunConfig& cfg);

enum class Verdict { holds = 0, fails = 1, undecided = 3 };

Verdict verdict(const Certificate& cert);

/// Certificate skeleton for an object: its descriptor, seed and version.
Certificate new_certificate(const Object* obj, std::uint64_t seed);

std::string format_t_report(const tourney::TResult& r);

}  // namespace hr::driver
