#pragma once

// Finite partially ordered sets.
//
// A Poset owns its label list, the full order relation (reflexive, antisymmetric,
// transitive), the cover relation (transitive reduction of the strict order) and
// the height of every node.  Node identity is positional; labels are presentation
// only.  Every set-valued query returns ids sorted by label so output is stable
// run to run.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace poset {

enum class errc {
  duplicate_label,
  unknown_label,
  cycle_detected,
  empty_selection,
  not_complete_subset,
  quotient_not_antisymmetric,
  zero_dimensional,
  not_simple_node,
  not_minimal,
  fewer_than_two_covers,
  no_unique_maximal,
  no_unique_minimal,
  dimension_too_small,
  size_limit_exceeded,
  precondition_failed,
  parse_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what);
  errc code() const { return code_; }

private:
  errc code_;
};

struct NodeId {
  std::size_t value = 0;
  auto operator<=>(const NodeId&) const = default;
};

class Poset {
public:
  // Builds from order generators: each pair (a, b) asserts a <= b; the stored
  // order is the reflexive transitive closure of the pairs.  Pairs that end up
  // implied by the rest (duplicates, reflexive pairs, non-covering pairs) are
  // reported through `warnings` when given, never rejected.
  static Poset build(std::vector<std::string> labels,
                     const std::vector<std::pair<std::string, std::string>>& relations,
                     std::vector<std::string>* warnings = nullptr);

  // Builds from a full relation matrix (row-major, leq[i*n+j] != 0 iff i <= j).
  // Validates all three poset axioms.
  static Poset from_relation(std::vector<std::string> labels, std::vector<std::uint8_t> leq);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(NodeId x) const { return labels_[x.value]; }
  std::optional<NodeId> node(std::string_view label) const;
  NodeId node_or_throw(std::string_view label) const;

  bool leq(NodeId a, NodeId b) const { return leq_[a.value * size() + b.value] != 0; }
  bool less(NodeId a, NodeId b) const { return a != b && leq(a, b); }
  bool covers(NodeId a, NodeId b) const { return covers_[a.value * size() + b.value] != 0; }

  // Length of the longest saturated chain from a minimal node up to x.
  std::size_t height(NodeId x) const { return heights_[x.value]; }
  // Length of the longest chain in the whole poset.
  std::size_t dim() const;

  std::vector<NodeId> nodes() const;  // position order
  std::vector<NodeId> minimals() const;
  std::vector<NodeId> maximals() const;
  std::vector<NodeId> lower_covers(NodeId x) const;
  std::vector<NodeId> upper_covers(NodeId x) const;

  // Induced subposet on {y : x <= y}; labels carry over unchanged.
  Poset up_set(NodeId x) const;
  // Induced subposet on `keep` (kept in the order given, covers recomputed).
  Poset induced(const std::vector<NodeId>& keep) const;
  // Induced subposet on nodes of height >= k.
  Poset height_floor(std::size_t k) const;

  // chain given low to high; singletons count as saturated chains.
  bool is_saturated_chain(const std::vector<NodeId>& chain) const;
  // C is complete when s <= y <= t with s, t in C forces y in C.
  bool is_complete_subset(const std::vector<NodeId>& subset) const;
  // S is saturated when covers inside the induced subposet agree with covers in the
  // ambient poset.
  bool is_saturated_subset(const std::vector<NodeId>& subset) const;

  std::vector<NodeId> sort_by_label(std::vector<NodeId> ids) const;

  bool operator==(const Poset&) const = default;

  // The empty state, for aggregates assembled field by field; every populated
  // Poset comes from build or from_relation.
  Poset() = default;

private:
  void finish();  // computes covers_ and heights_ from leq_

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint8_t> covers_;
  std::vector<std::size_t> heights_;
};

// Order-preserving bijection in both directions, as a map from ids of `a` to ids
// of `b`, or nullopt when the posets are not isomorphic.
std::optional<std::vector<NodeId>> isomorphism(const Poset& a, const Poset& b);

}  // namespace poset
