#pragma once

// Maps between posets and the checker ladder: poset map, embedding, saturated
// embedding, dimension preserving, coheight preserving.  Checks are total scans;
// find_map_violation reports the first failing pair for diagnostics.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poset/core.hpp"

namespace poset {

struct PosetMap {
  Poset dom;
  Poset cod;
  std::vector<NodeId> assign;  // assign[i] = image of dom node i
};

// Builds from label pairs; every domain label must appear exactly once.
PosetMap make_map(Poset dom, Poset cod,
                  const std::vector<std::pair<std::string, std::string>>& pairs);

// Label-matched inclusion of sub into super.
PosetMap make_inclusion(const Poset& sub, const Poset& super);

enum class MapProperty { map, embedding, saturated, dimension, coheight };

// nullopt when the property holds; otherwise a one-line description of the first
// failure found.  `along` only matters for coheight and defaults to the codomain
// minimals when null.
std::optional<std::string> find_map_violation(const PosetMap& f, MapProperty property,
                                              const std::vector<NodeId>* along = nullptr);

bool is_poset_map(const PosetMap& f);
bool is_poset_embedding(const PosetMap& f);
bool is_saturated_embedding(const PosetMap& f);
bool is_dimension_preserving(const PosetMap& f);
bool is_coheight_preserving(const PosetMap& f);  // along minimals(cod)
bool is_coheight_preserving(const PosetMap& f, const std::vector<NodeId>& along);

// Whether the image of a saturated embedding is a saturated subset of the
// codomain.  Throws PreconditionFailed when f is not a saturated embedding.
bool image_saturated_subset(const PosetMap& f);

}  // namespace poset
