#pragma once

// Gluing along a complete subset, height-zero splitting, retraction at a simple
// node, and reduction of a unique-maximum poset down to a point.

#include <cstddef>
#include <string>
#include <vector>

#include "poset/core.hpp"
#include "poset/maps.hpp"

namespace poset {

struct GluingResult {
  Poset quotient;
  PosetMap map;               // dom is the unglued poset, cod is quotient
  std::vector<NodeId> glued;  // the glued class, as ids in map.dom
};

// Collapses the complete subset C of x to a single fresh node labelled by the
// sorted '+'-joined member labels.  In the quotient, g(a) <= g(b) iff a <= b or
// a <= s and t <= b for some s, t in C.  The constructed relation is checked
// against all three poset axioms before it is accepted.
GluingResult glue(const Poset& x, const std::vector<NodeId>& c);

// Checks that g realises Y as the gluing of X along C: C complete, g surjective,
// constant on C, collision-free off C, and the two-sided order characterisation
// above holding for every pair.
bool verify_gluing(const Poset& x, const std::vector<NodeId>& c, const Poset& y,
                   const PosetMap& g);

// True when the glued class sits inside the minimals of the unglued poset.
bool is_height_zero_gluing(const GluingResult& r);

// Number of height-zero nodes with at least two upper covers.
std::size_t n_value(const Poset& y);

// Height-one nodes x such that x is the only cover of every u < x.
// Throws ZeroDimensional on a poset of dimension 0.
std::vector<NodeId> simple_nodes(const Poset& x);

// Removes D_x = {u : u < x}, making the simple node x minimal.
Poset retract(const Poset& x, NodeId simple);

// Replaces the minimal node u (with covers c_1 < ... < c_k, k >= 2) by fresh
// minimals u_1, ..., u_k where u_i lies below exactly {v : c_i <= v}.  Returns
// the split poset together with the gluing map back onto y; map.dom is the
// split poset, quotient is a copy of y, glued lists the replacements.
GluingResult split(const Poset& y, NodeId u);

// Adds m fresh nodes strictly below the minimal node p (and below nothing
// else), making p a height-one simple node.
Poset attach_below(const Poset& x, NodeId p, std::size_t m);

struct ReductionStep {
  enum class Kind { split, retract, identity };
  Kind kind = Kind::identity;
  // split: the glued-back node, named in the smaller poset; retract: the simple
  // node retracted at.
  std::string node;
  // split: the replacement minimals in the larger poset; retract: the removed
  // set D_x.
  std::vector<std::string> detail;
};

struct ReductionSequence {
  // posets.front() is a one-point poset, posets.back() the input; steps[i]
  // explains how posets[i] arises from posets[i+1] (as a height-zero splitting,
  // a retraction, or identity).
  std::vector<Poset> posets;
  std::vector<ReductionStep> steps;
};

// Reduces a unique-maximum poset to a point: while more than one node remains,
// split the label-least height-zero node with two or more covers when one
// exists, otherwise retract at the label-least simple node.  Splitting keeps
// the count of positive-height nodes and strictly lowers the n-value;
// retraction strictly lowers the count of positive-height nodes, so the walk
// terminates.  Throws NoUniqueMaximal otherwise.
ReductionSequence reduce_to_point(const Poset& x);

// Replays a sequence: re-checks each consecutive pair against the definition of
// its step and that the walk starts at a one-point poset.
bool verify_reduction(const ReductionSequence& seq);

}  // namespace poset
