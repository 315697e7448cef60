#include "poset/core.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace poset {

const char* errc_name(errc code) {
  switch (code) {
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::unknown_label: return "UnknownLabel";
    case errc::cycle_detected: return "CycleDetected";
    case errc::empty_selection: return "EmptySelection";
    case errc::not_complete_subset: return "NotCompleteSubset";
    case errc::quotient_not_antisymmetric: return "QuotientNotAntisymmetric";
    case errc::zero_dimensional: return "ZeroDimensional";
    case errc::not_simple_node: return "NotSimpleNode";
    case errc::not_minimal: return "NotMinimal";
    case errc::fewer_than_two_covers: return "FewerThanTwoCovers";
    case errc::no_unique_maximal: return "NoUniqueMaximal";
    case errc::no_unique_minimal: return "NoUniqueMinimal";
    case errc::dimension_too_small: return "DimensionTooSmall";
    case errc::size_limit_exceeded: return "SizeLimitExceeded";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

Error::Error(errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

Poset Poset::build(std::vector<std::string> labels,
                   const std::vector<std::pair<std::string, std::string>>& relations,
                   std::vector<std::string>* warnings) {
  if (labels.empty()) throw Error(errc::empty_selection, "a poset needs at least one element");
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second)
      throw Error(errc::duplicate_label, "element '" + labels[i] + "' listed twice");
  }
  const std::size_t n = labels.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;

  auto resolve = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw Error(errc::unknown_label, "no element named '" + name + "'");
    return it->second;
  };
  struct Gen { std::size_t a, b; };
  std::vector<Gen> gens;
  gens.reserve(relations.size());
  for (const auto& [a, b] : relations) gens.push_back({resolve(a), resolve(b)});
  for (const auto& g : gens) leq[g.a * n + g.b] = 1;

  // reflexive transitive closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i])
        throw Error(errc::cycle_detected,
                    "'" + labels[i] + "' and '" + labels[j] + "' order each other");

  Poset p;
  p.labels_ = std::move(labels);
  p.leq_ = std::move(leq);
  p.finish();

  if (warnings) {
    for (const auto& g : gens) {
      if (g.a == g.b) {
        warnings->push_back("relation '" + p.labels_[g.a] + " " + p.labels_[g.b] +
                            "' is reflexive and adds nothing");
      } else if (!p.covers(NodeId{g.a}, NodeId{g.b})) {
        warnings->push_back("relation '" + p.labels_[g.a] + " " + p.labels_[g.b] +
                            "' is not a covering pair (implied by the others)");
      }
    }
  }
  return p;
}

Poset Poset::from_relation(std::vector<std::string> labels, std::vector<std::uint8_t> leq) {
  if (labels.empty()) throw Error(errc::empty_selection, "a poset needs at least one element");
  const std::size_t n = labels.size();
  if (leq.size() != n * n) throw Error(errc::precondition_failed, "relation matrix size mismatch");
  {
    std::unordered_map<std::string_view, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
      if (!index.emplace(labels[i], i).second)
        throw Error(errc::duplicate_label, "element '" + labels[i] + "' listed twice");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!leq[i * n + i]) throw Error(errc::precondition_failed, "relation is not reflexive");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i])
        throw Error(errc::cycle_detected,
                    "'" + labels[i] + "' and '" + labels[j] + "' order each other");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j] && !leq[i * n + j])
            throw Error(errc::precondition_failed, "relation is not transitive");

  Poset p;
  p.labels_ = std::move(labels);
  p.leq_ = std::move(leq);
  p.finish();
  return p;
}

void Poset::finish() {
  const std::size_t n = labels_.size();
  covers_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq_[i * n + j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        if (k != i && k != j && leq_[i * n + k] && leq_[k * n + j]) direct = false;
      covers_[i * n + j] = direct ? 1 : 0;
    }

  // longest-path heights over the cover dag, nodes in topological order
  std::vector<std::size_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq_[j * n + i]) ++below[i];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  heights_.assign(n, 0);
  for (std::size_t x : order)
    for (std::size_t u = 0; u < n; ++u)
      if (covers_[u * n + x]) heights_[x] = std::max(heights_[x], heights_[u] + 1);
}

std::optional<NodeId> Poset::node(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return NodeId{i};
  return std::nullopt;
}

NodeId Poset::node_or_throw(std::string_view label) const {
  if (auto id = node(label)) return *id;
  throw Error(errc::unknown_label, "no element named '" + std::string(label) + "'");
}

std::size_t Poset::dim() const {
  if (heights_.empty()) return 0;
  return *std::max_element(heights_.begin(), heights_.end());
}

std::vector<NodeId> Poset::nodes() const {
  std::vector<NodeId> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = NodeId{i};
  return out;
}

std::vector<NodeId> Poset::sort_by_label(std::vector<NodeId> ids) const {
  std::sort(ids.begin(), ids.end(),
            [&](NodeId a, NodeId b) { return label(a) < label(b); });
  return ids;
}

std::vector<NodeId> Poset::minimals() const {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < size() && minimal; ++j)
      if (j != i && leq_[j * size() + i]) minimal = false;
    if (minimal) out.push_back(NodeId{i});
  }
  return sort_by_label(std::move(out));
}

std::vector<NodeId> Poset::maximals() const {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < size() && maximal; ++j)
      if (j != i && leq_[i * size() + j]) maximal = false;
    if (maximal) out.push_back(NodeId{i});
  }
  return sort_by_label(std::move(out));
}

std::vector<NodeId> Poset::lower_covers(NodeId x) const {
  std::vector<NodeId> out;
  for (std::size_t u = 0; u < size(); ++u)
    if (covers_[u * size() + x.value]) out.push_back(NodeId{u});
  return sort_by_label(std::move(out));
}

std::vector<NodeId> Poset::upper_covers(NodeId x) const {
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < size(); ++v)
    if (covers_[x.value * size() + v]) out.push_back(NodeId{v});
  return sort_by_label(std::move(out));
}

Poset Poset::up_set(NodeId x) const {
  std::vector<NodeId> keep;
  for (std::size_t i = 0; i < size(); ++i)
    if (leq(x, NodeId{i})) keep.push_back(NodeId{i});
  return induced(keep);
}

Poset Poset::induced(const std::vector<NodeId>& keep) const {
  if (keep.empty()) throw Error(errc::empty_selection, "induced subposet on no nodes");
  const std::size_t m = keep.size();
  std::vector<std::string> labels(m);
  std::vector<std::uint8_t> leq(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    assert(keep[i].value < size());
    labels[i] = label(keep[i]);
    for (std::size_t j = 0; j < m; ++j)
      leq[i * m + j] = this->leq(keep[i], keep[j]) ? 1 : 0;
  }
  return from_relation(std::move(labels), std::move(leq));
}

Poset Poset::height_floor(std::size_t k) const {
  std::vector<NodeId> keep;
  for (std::size_t i = 0; i < size(); ++i)
    if (heights_[i] >= k) keep.push_back(NodeId{i});
  if (keep.empty())
    throw Error(errc::empty_selection, "no node has height >= " + std::to_string(k));
  return induced(keep);
}

bool Poset::is_saturated_chain(const std::vector<NodeId>& chain) const {
  if (chain.empty()) return false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!covers(chain[i], chain[i + 1])) return false;
  return true;
}

bool Poset::is_complete_subset(const std::vector<NodeId>& subset) const {
  std::vector<std::uint8_t> in(size(), 0);
  for (NodeId s : subset) in[s.value] = 1;
  for (NodeId s : subset)
    for (NodeId t : subset)
      for (std::size_t y = 0; y < size(); ++y)
        if (!in[y] && leq(s, NodeId{y}) && leq(NodeId{y}, t)) return false;
  return true;
}

bool Poset::is_saturated_subset(const std::vector<NodeId>& subset) const {
  Poset sub = induced(subset);  // throws EmptySelection for an empty pick
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j)
      if (sub.covers(NodeId{i}, NodeId{j}) && !covers(subset[i], subset[j])) return false;
  return true;
}

namespace {

using Profile = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

// (height, lower-cover count, upper-cover count, up-set size): cheap invariants
// that any isomorphism must preserve node by node.
Profile profile_of(const Poset& p, NodeId x) {
  std::size_t up = 0;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p.leq(x, NodeId{j})) ++up;
  return {p.height(x), p.lower_covers(x).size(), p.upper_covers(x).size(), up};
}

bool extend_match(const Poset& a, const Poset& b, std::vector<std::size_t>& image,
                  std::vector<std::uint8_t>& used,
                  const std::vector<std::vector<std::size_t>>& candidates, std::size_t i) {
  if (i == a.size()) return true;
  for (std::size_t j : candidates[i]) {
    if (used[j]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < i && ok; ++k) {
      ok = a.leq(NodeId{k}, NodeId{i}) == b.leq(NodeId{image[k]}, NodeId{j}) &&
           a.leq(NodeId{i}, NodeId{k}) == b.leq(NodeId{j}, NodeId{image[k]});
    }
    if (!ok) continue;
    image[i] = j;
    used[j] = 1;
    if (extend_match(a, b, image, used, candidates, i + 1)) return true;
    used[j] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<NodeId>> isomorphism(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.size();
  std::vector<Profile> pa(n), pb(n);
  for (std::size_t i = 0; i < n; ++i) {
    pa[i] = profile_of(a, NodeId{i});
    pb[i] = profile_of(b, NodeId{i});
  }
  {
    auto ma = pa, mb = pb;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return std::nullopt;
  }
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pa[i] == pb[j]) candidates[i].push_back(j);

  std::vector<std::size_t> image(n);
  std::vector<std::uint8_t> used(n, 0);
  if (!extend_match(a, b, image, used, candidates, 0)) return std::nullopt;
  std::vector<NodeId> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = NodeId{image[i]};
  return out;
}

}  // namespace poset
