#include "poset/maps.hpp"

#include <algorithm>

namespace poset {

PosetMap make_map(Poset dom, Poset cod,
                  const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::optional<NodeId>> assign(dom.size());
  for (const auto& [from, to] : pairs) {
    NodeId d = dom.node_or_throw(from);
    NodeId c = cod.node_or_throw(to);
    if (assign[d.value])
      throw Error(errc::duplicate_label, "domain element '" + from + "' assigned twice");
    assign[d.value] = c;
  }
  for (std::size_t i = 0; i < assign.size(); ++i)
    if (!assign[i])
      throw Error(errc::precondition_failed,
                  "map is not total: '" + dom.labels()[i] + "' has no image");
  PosetMap f;
  f.dom = std::move(dom);
  f.cod = std::move(cod);
  f.assign.reserve(assign.size());
  for (const auto& a : assign) f.assign.push_back(*a);
  return f;
}

PosetMap make_inclusion(const Poset& sub, const Poset& super) {
  PosetMap f;
  f.dom = sub;
  f.cod = super;
  f.assign.reserve(sub.size());
  for (const auto& name : sub.labels()) f.assign.push_back(super.node_or_throw(name));
  return f;
}

namespace {

std::size_t up_dim(const Poset& p, NodeId x) { return p.up_set(x).dim(); }

std::string pair_text(const PosetMap& f, NodeId x, NodeId y) {
  return "(" + f.dom.label(x) + ", " + f.dom.label(y) + ")";
}

}  // namespace

std::optional<std::string> find_map_violation(const PosetMap& f, MapProperty property,
                                              const std::vector<NodeId>* along) {
  const Poset& X = f.dom;
  const Poset& Y = f.cod;
  for (NodeId x : X.nodes())
    for (NodeId y : X.nodes())
      if (X.leq(x, y) && !Y.leq(f.assign[x.value], f.assign[y.value]))
        return "order not preserved at " + pair_text(f, x, y);
  if (property == MapProperty::map) return std::nullopt;

  for (NodeId x : X.nodes())
    for (NodeId y : X.nodes())
      if (Y.leq(f.assign[x.value], f.assign[y.value]) && !X.leq(x, y))
        return "images comparable but sources are not at " + pair_text(f, x, y);
  if (property == MapProperty::embedding) return std::nullopt;

  for (NodeId x : X.nodes())
    for (NodeId y : X.nodes())
      if (X.covers(x, y) && !Y.covers(f.assign[x.value], f.assign[y.value]))
        return "cover not preserved at " + pair_text(f, x, y);
  if (property == MapProperty::saturated) return std::nullopt;

  if (property == MapProperty::dimension) {
    if (X.dim() != Y.dim())
      return "dimensions differ (" + std::to_string(X.dim()) + " vs " +
             std::to_string(Y.dim()) + ")";
    return std::nullopt;
  }

  // coheight along D: every p in D needs a preimage whose up-set dimension in the
  // domain matches the up-set dimension of p in the codomain.
  std::vector<NodeId> defaulted;
  if (!along) {
    defaulted = Y.minimals();
    along = &defaulted;
  }
  for (NodeId p : *along) {
    std::size_t want = up_dim(Y, p);
    bool found = false;
    for (NodeId x : X.nodes())
      if (f.assign[x.value] == p && up_dim(X, x) == want) { found = true; break; }
    if (!found)
      return "no preimage of '" + Y.label(p) + "' with up-set dimension " +
             std::to_string(want);
  }
  return std::nullopt;
}

bool is_poset_map(const PosetMap& f) {
  return !find_map_violation(f, MapProperty::map).has_value();
}

bool is_poset_embedding(const PosetMap& f) {
  return !find_map_violation(f, MapProperty::embedding).has_value();
}

bool is_saturated_embedding(const PosetMap& f) {
  return !find_map_violation(f, MapProperty::saturated).has_value();
}

bool is_dimension_preserving(const PosetMap& f) {
  return !find_map_violation(f, MapProperty::dimension).has_value();
}

bool is_coheight_preserving(const PosetMap& f) {
  return !find_map_violation(f, MapProperty::coheight).has_value();
}

bool is_coheight_preserving(const PosetMap& f, const std::vector<NodeId>& along) {
  return !find_map_violation(f, MapProperty::coheight, &along).has_value();
}

bool image_saturated_subset(const PosetMap& f) {
  if (!is_saturated_embedding(f))
    throw Error(errc::precondition_failed, "map is not a saturated embedding");
  std::vector<NodeId> image = f.assign;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return f.cod.is_saturated_subset(image);
}

}  // namespace poset
