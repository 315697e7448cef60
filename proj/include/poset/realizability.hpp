#pragma once

// Order-theoretic certification of when a finite poset matches the prime
// spectrum of a local (or arbitrary) Noetherian UFD of the same dimension, plus
// the constructions used to repair a failing poset: adding a top or bottom,
// duplicating risky minimals for a dimension + 1 embedding, and the extension
// poset with paired minimals.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "poset/core.hpp"
#include "poset/maps.hpp"

namespace poset {

struct Violation {
  enum class Kind { multiple_minimal, multiple_maximal, bad_cover };
  Kind kind = Kind::bad_cover;
  std::vector<std::string> nodes;
  std::vector<std::size_t> heights;
};

const char* kind_name(Violation::Kind kind);

struct RealizabilityReport {
  bool verdict = false;
  std::vector<Violation> violations;  // all of them, in stable order
};

// Local case: unique minimal, unique maximal, and (when dim >= 2) every cover y
// of a height-one node x has height exactly 2.
RealizabilityReport check_local_ufd(const Poset& x);

// Non-local case: the maximal-count condition is dropped.
RealizabilityReport check_nonlocal_ufd(const Poset& x);

// {"verdict": ..., "violations": [{"kind": ..., "nodes": [...], "heights": [...]}]}
std::string report_to_json(const RealizabilityReport& r);

struct Augmentation {
  Poset result;
  PosetMap inclusion;  // the input poset into result, label for label
};

// Fresh top above everything; dimension goes up by one.
Augmentation add_top(const Poset& x);
// Fresh bottom below everything; dimension goes up by one.
Augmentation add_bottom(const Poset& x);

// Height-zero nodes covered by some node of height >= 2.
std::vector<NodeId> risky_minimals(const Poset& x);

// Duplicates every risky minimal strictly below its up-set, then adds a bottom.
Augmentation dim_plus_one(const Poset& x);

struct ExtensionResult {
  Poset extension;
  // (new minimal, its height-one partner), label pairs in partner label order
  std::vector<std::pair<std::string, std::string>> pairing;
};

// For a unique-minimum poset of dimension >= 2: drop the bottom level, then give
// each height-one node x_i its own fresh minimal placed below exactly the up-set
// of x_i.  Gluing the fresh minimals back together recovers the input.
// Throws NoUniqueMinimal / DimensionTooSmall.
ExtensionResult extension_poset(const Poset& x);

}  // namespace poset
