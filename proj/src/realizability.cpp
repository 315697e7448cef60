#include "poset/realizability.hpp"

#include <algorithm>

#include "json.hpp"

namespace poset {

const char* kind_name(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::multiple_minimal: return "MultipleMinimal";
    case Violation::Kind::multiple_maximal: return "MultipleMaximal";
    case Violation::Kind::bad_cover: return "BadCover";
  }
  return "Unknown";
}

namespace {

Violation witness_set(Violation::Kind kind, const Poset& x, const std::vector<NodeId>& ids) {
  Violation v;
  v.kind = kind;
  for (NodeId id : ids) {
    v.nodes.push_back(x.label(id));
    v.heights.push_back(x.height(id));
  }
  return v;
}

RealizabilityReport check_conditions(const Poset& x, bool need_unique_max) {
  RealizabilityReport r;
  auto mins = x.minimals();
  if (mins.size() > 1)
    r.violations.push_back(witness_set(Violation::Kind::multiple_minimal, x, mins));
  if (need_unique_max) {
    auto maxs = x.maximals();
    if (maxs.size() > 1)
      r.violations.push_back(witness_set(Violation::Kind::multiple_maximal, x, maxs));
  }
  if (x.dim() >= 2) {
    for (NodeId a : x.sort_by_label(x.nodes())) {
      if (x.height(a) != 1) continue;
      for (NodeId b : x.upper_covers(a)) {
        if (x.height(b) == 2) continue;
        Violation v;
        v.kind = Violation::Kind::bad_cover;
        v.nodes = {x.label(a), x.label(b)};
        v.heights = {x.height(a), x.height(b)};
        r.violations.push_back(std::move(v));
      }
    }
  }
  r.verdict = r.violations.empty();
  return r;
}

}  // namespace

RealizabilityReport check_local_ufd(const Poset& x) { return check_conditions(x, true); }

RealizabilityReport check_nonlocal_ufd(const Poset& x) { return check_conditions(x, false); }

std::string report_to_json(const RealizabilityReport& r) {
  nlohmann::ordered_json j;
  j["verdict"] = r.verdict;
  j["violations"] = nlohmann::ordered_json::array();
  for (const Violation& v : r.violations) {
    nlohmann::ordered_json jv;
    jv["kind"] = kind_name(v.kind);
    jv["nodes"] = v.nodes;
    jv["heights"] = v.heights;
    j["violations"].push_back(std::move(jv));
  }
  return j.dump(2) + "\n";
}

namespace {

std::string fresh_label(std::string base, const std::vector<std::string>& taken) {
  auto used = [&](const std::string& s) {
    return std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  while (used(base)) base += "'";
  return base;
}

// Adds one node related to everything per `below_new`: true means old <= new
// (a top), false means new <= old (a bottom).
Augmentation add_extreme(const Poset& x, bool below_new) {
  const std::size_t n = x.size();
  std::vector<std::string> labels = x.labels();
  labels.push_back(fresh_label("z", labels));
  const std::size_t t = n + 1;
  std::vector<std::uint8_t> leq(t * t, 0);
  for (std::size_t i = 0; i < t; ++i) leq[i * t + i] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (x.leq(NodeId{i}, NodeId{j})) leq[i * t + j] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (below_new)
      leq[i * t + n] = 1;
    else
      leq[n * t + i] = 1;
  }
  Augmentation out;
  out.result = Poset::from_relation(std::move(labels), std::move(leq));
  out.inclusion = make_inclusion(x, out.result);
  return out;
}

}  // namespace

Augmentation add_top(const Poset& x) { return add_extreme(x, true); }

Augmentation add_bottom(const Poset& x) { return add_extreme(x, false); }

std::vector<NodeId> risky_minimals(const Poset& x) {
  std::vector<NodeId> out;
  for (NodeId v : x.nodes()) {
    if (x.height(v) != 0) continue;
    for (NodeId c : x.upper_covers(v))
      if (x.height(c) >= 2) { out.push_back(v); break; }
  }
  return x.sort_by_label(std::move(out));
}

Augmentation dim_plus_one(const Poset& x) {
  auto risky = risky_minimals(x);
  const std::size_t n = x.size();
  const std::size_t k = risky.size();

  std::vector<std::string> labels = x.labels();
  for (NodeId r : risky) labels.push_back(fresh_label(x.label(r) + "'", labels));

  // duplicate of x_i sits strictly below exactly {v : x_i <= v}
  const std::size_t t = n + k;
  std::vector<std::uint8_t> leq(t * t, 0);
  for (std::size_t i = 0; i < t; ++i) leq[i * t + i] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (x.leq(NodeId{i}, NodeId{j})) leq[i * t + j] = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (x.leq(risky[i], NodeId{j})) leq[(n + i) * t + j] = 1;
  Poset widened = Poset::from_relation(std::move(labels), std::move(leq));

  Augmentation bottomed = add_bottom(widened);
  Augmentation out;
  out.result = std::move(bottomed.result);
  out.inclusion = make_inclusion(x, out.result);
  return out;
}

ExtensionResult extension_poset(const Poset& x) {
  if (x.minimals().size() != 1)
    throw Error(errc::no_unique_minimal, "extension needs a unique minimal node");
  if (x.dim() < 2)
    throw Error(errc::dimension_too_small, "extension needs dimension >= 2");

  Poset upper = x.height_floor(1);
  auto anchors = upper.minimals();  // exactly the height-one nodes of x

  const std::size_t n = upper.size();
  const std::size_t k = anchors.size();
  std::vector<std::string> labels = upper.labels();
  ExtensionResult out;
  for (NodeId a : anchors) {
    std::string dup = fresh_label(upper.label(a) + "'", labels);
    out.pairing.emplace_back(dup, upper.label(a));
    labels.push_back(std::move(dup));
  }

  const std::size_t t = n + k;
  std::vector<std::uint8_t> leq(t * t, 0);
  for (std::size_t i = 0; i < t; ++i) leq[i * t + i] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (upper.leq(NodeId{i}, NodeId{j})) leq[i * t + j] = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (upper.leq(anchors[i], NodeId{j})) leq[(n + i) * t + j] = 1;
  out.extension = Poset::from_relation(std::move(labels), std::move(leq));
  return out;
}

}  // namespace poset
