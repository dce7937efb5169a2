#pragma once

// Line-oriented text formats. '#' starts a comment anywhere on a line.
//
//   KGC 1 k=<k> n=<N>     then "v1 .. vk R|B" for every k-subset
//   HGR 1 k=<k> n=<N>     then one edge per line
//   TRN 1 n=<N>           then "i j" (i beats j), one line per pair
//   DSC 1                 then family=, param.<key>=, base.digest= lines
//   CERT 1                then descriptor lines, seed=, tool.version=,
//                         timestamp= and one claim= line per claim

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hyperramsey/certificate.hpp"
#include "hyperramsey/structures.hpp"
#include "hyperramsey/tourney.hpp"

namespace hr::formats {

enum class Kind { kgc, hgr, trn, dsc, cert };

const char* to_string(Kind k);
/// Kind named by the first non-comment line of `text`.
Kind sniff(std::string_view text);

ExplicitColoring read_kgc(std::istream& in);
/// Materializes `c`; its universe must be concrete.
void write_kgc(std::ostream& out, const Coloring& c);

ExplicitHypergraph read_hgr(std::istream& in);
void write_hgr(std::ostream& out, const Hypergraph& h);

tourney::Tournament read_trn(std::istream& in);
void write_trn(std::ostream& out, const tourney::Tournament& t);

Descriptor read_dsc(std::istream& in);
void write_dsc(std::ostream& out, const Descriptor& d);

Certificate read_cert(std::istream& in);
void write_cert(std::ostream& out, const Certificate& c);

/// FNV-1a 64-bit, as 16 lowercase hex digits.
std::string digest(std::string_view bytes);

/// Whole file, or stdin for "-". FormatError when unreadable.
std::string read_text(const std::string& path);
/// Whole file, or stdout for "-".
void write_text(const std::string& path, std::string_view text);

}  // namespace hr::formats
