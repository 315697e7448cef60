#pragma once

// Exhaustive verification harness: enumeration of posets up to isomorphism,
// independent brute-force oracles for heights, dimension and isomorphism, and
// drivers that replay the reduction algorithm and the surgery lemmas over every
// small poset plus seeded random ones.
//
// Everything here is deterministic for a fixed (max_n, trials, seed) triple,
// whatever the jobs count: work is partitioned by index and merged by summing,
// so summaries are byte for byte reproducible.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "poset/core.hpp"

namespace poset {

// Hard ceiling for exhaustive enumeration: 2045 classes at n = 7 is the largest
// run that stays comfortable on a desktop.
inline constexpr std::size_t kEnumerationCeiling = 7;

// One representative per isomorphism class on n nodes, labelled a, b, c, ...;
// deterministic order (sorted canonical codes).  Dedup is by the
// lexicographically minimal adjacency encoding over profile-respecting
// relabellings.  Throws SizeLimitExceeded outside [1, kEnumerationCeiling].
std::vector<Poset> enumerate_posets(std::size_t n);

// Chain-enumeration oracles, deliberately naive: every subset is tested for
// being a (saturated) chain.  Sized for |P| <= 8.
std::size_t oracle_dim(const Poset& p);
std::size_t oracle_height(const Poset& p, NodeId x);

// Second, independent generator for n <= 4: all antisymmetric transitive
// relations on labelled nodes, then orbit counting under the full symmetric
// group.
std::size_t count_labeled_posets(std::size_t n);
std::size_t count_classes_by_orbit(std::size_t n);

// Permutation search with no pruning; sized for |P| <= 8.
bool brute_force_isomorphic(const Poset& a, const Poset& b);

// Seeded random poset on 2..10 nodes: a random DAG with forward-edge
// probability drawn from {0.2, 0.4, 0.6}, closed up.  Pure function of
// (seed, trial).
Poset random_poset(std::uint64_t seed, std::size_t trial);

struct ReductionCheck {
  std::size_t max_n = 0;
  std::size_t classes = 0;
  std::size_t unique_max = 0;
  std::size_t failures = 0;
  std::string render() const;
};

// Runs reduce_to_point + replay over every unique-maximum class up to max_n.
ReductionCheck verify_reduction_theorem(std::size_t max_n, std::size_t jobs = 1);

struct LemmaCheck {
  std::size_t max_n = 0;
  std::size_t random_trials = 0;
  std::uint64_t seed = 0;
  struct Line {
    std::string name;
    std::size_t checked = 0;
    std::size_t violations = 0;
  };
  std::vector<Line> lines;
  std::vector<std::string> witnesses;  // first few failures, class order
  std::size_t total_violations() const;
  std::string render() const;
};

// Exhaustive over all classes up to max_n (every nonempty subset of minimals as
// the glued class) plus `random_trials` seeded random cases: gluing lemma
// (min-image equality, dimension preservation, cover lifting), the up-set
// dimension formula on unique-maximum posets, the retraction dimension
// identity, and both round trips.
LemmaCheck verify_surgery_lemmas(std::size_t max_n, std::size_t random_trials,
                                 std::uint64_t seed, std::size_t jobs = 1);

struct CensusRow {
  std::size_t n = 0;
  std::size_t iso_classes = 0;
  std::size_t unique_max = 0;
  std::size_t local_realizable = 0;
  std::size_t nonlocal_realizable = 0;
  std::size_t reduced_ok = 0;
};

std::vector<CensusRow> classify(std::size_t max_n, std::size_t jobs = 1);
std::string render_table(const std::vector<CensusRow>& rows);
std::string rows_to_json(const std::vector<CensusRow>& rows);

}  // namespace poset
