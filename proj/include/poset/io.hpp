#pragma once

// Text formats: the "poset v1" and "map v1" file formats, plus a deterministic
// DOT emitter for Hasse diagrams.

#include <string>
#include <utility>
#include <vector>

#include "poset/core.hpp"
#include "poset/maps.hpp"

namespace poset {

// Parses a PosetFile: a "poset v1" header, exactly one "elements:" line, any
// number of "rel: A B" generator lines, and "#" comment lines.  Labels may not
// contain whitespace or ':'.  All failures throw ParseError with a line number;
// with strict_covers every rel pair must be a cover pair of the finished poset.
Poset parse_poset(const std::string& text, bool strict_covers = false);

// Parses a MapFile: a "map v1" header and "pair: X Y" lines, each domain label
// at most once.  Pairs are returned in file order; totality against a domain
// poset is the caller's concern.
std::vector<std::pair<std::string, std::string>> parse_map(const std::string& text);

// Inverse of parse_poset: elements in node order, one "rel:" line per cover
// pair sorted by label.  Re-parsing yields an equal poset.
std::string emit_poset(const Poset& p);

// One "pair:" line per domain node in label order.
std::string emit_map(const PosetMap& f);

// Hasse diagram as Graphviz DOT: edges low -> high, one rank group per height,
// every list label-sorted, so output is byte-identical across runs.
std::string render_dot(const Poset& p);

// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace poset
