#include "poset/census.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>
#include <utility>

#include "json.hpp"

#include "poset/realizability.hpp"
#include "poset/surgery.hpp"

namespace poset {
namespace {

const char kLetters[] = "abcdefghij";

std::vector<std::string> letter_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, kLetters[i]);
  return labels;
}

// ---------------------------------------------------------------------------
// canonical encoding (n <= 7, so the whole relation fits in 49 bits)

std::uint64_t encode(const Poset& p, const std::vector<std::size_t>& arr) {
  const std::size_t n = p.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.leq(NodeId{arr[i]}, NodeId{arr[j]})) code |= std::uint64_t{1} << (i * n + j);
  return code;
}

// Invariant fingerprint used to cut the relabelling search down to
// permutations within equal-fingerprint blocks.
using NodeKey = std::array<std::size_t, 5>;

NodeKey node_key(const Poset& p, NodeId v) {
  std::size_t down = 0;
  for (NodeId u : p.nodes())
    if (p.leq(u, v)) ++down;
  return {p.height(v), p.lower_covers(v).size(), p.upper_covers(v).size(),
          p.up_set(v).size(), down};
}

void min_over_blocks(const Poset& p, std::vector<std::size_t>& arr,
                     const std::vector<std::pair<std::size_t, std::size_t>>& blocks,
                     std::size_t bi, std::uint64_t& best) {
  if (bi == blocks.size()) {
    best = std::min(best, encode(p, arr));
    return;
  }
  auto [lo, hi] = blocks[bi];
  std::sort(arr.begin() + lo, arr.begin() + hi);
  do {
    min_over_blocks(p, arr, blocks, bi + 1, best);
  } while (std::next_permutation(arr.begin() + lo, arr.begin() + hi));
}

std::uint64_t canonical_code(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<NodeKey> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = node_key(p, NodeId{i});

  std::vector<std::size_t> arr(n);
  std::iota(arr.begin(), arr.end(), std::size_t{0});
  std::sort(arr.begin(), arr.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo + 1;
    while (hi < n && keys[arr[hi]] == keys[arr[lo]]) ++hi;
    blocks.emplace_back(lo, hi);
    lo = hi;
  }

  std::uint64_t best = ~std::uint64_t{0};
  min_over_blocks(p, arr, blocks, 0, best);
  return best;
}

Poset decode_code(std::uint64_t code, std::size_t n) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (code >> (i * n + j) & 1) leq[i * n + j] = 1;
  return Poset::from_relation(letter_labels(n), std::move(leq));
}

// ---------------------------------------------------------------------------
// deterministic parallel fan-out: worker t owns the indices congruent to t, so
// any per-index result lands in a slot that does not depend on the job count

template <typename Body>
void run_parallel(std::size_t count, std::size_t jobs, Body body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(0, i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (std::size_t t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += jobs) body(t, i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

// ---------------------------------------------------------------------------
// enumeration

std::vector<Poset> enumerate_posets(std::size_t n) {
  if (n < 1 || n > kEnumerationCeiling)
    throw Error(errc::size_limit_exceeded,
                "enumeration handles 1.." + std::to_string(kEnumerationCeiling) + " nodes");

  // Grow one node at a time: every class on m nodes is some class on m - 1
  // nodes plus a new maximal element placed over an order ideal.
  std::vector<std::uint64_t> level{1};  // the one-point poset
  for (std::size_t m = 2; m <= n; ++m) {
    const std::size_t k = m - 1;
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      Poset p = decode_code(code, k);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        bool ideal = true;
        for (std::size_t v = 0; v < k && ideal; ++v) {
          if (!(mask >> v & 1)) continue;
          for (std::size_t u = 0; u < k; ++u)
            if (p.less(NodeId{u}, NodeId{v}) && !(mask >> u & 1)) {
              ideal = false;
              break;
            }
        }
        if (!ideal) continue;

        std::vector<std::uint8_t> leq(m * m, 0);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            if (p.leq(NodeId{i}, NodeId{j})) leq[i * m + j] = 1;
        leq[k * m + k] = 1;
        for (std::size_t v = 0; v < k; ++v)
          if (mask >> v & 1) leq[v * m + k] = 1;
        next.insert(canonical_code(Poset::from_relation(letter_labels(m), std::move(leq))));
      }
    }
    level.assign(next.begin(), next.end());
  }

  std::vector<Poset> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(decode_code(code, n));
  return out;
}

// ---------------------------------------------------------------------------
// brute-force oracles

std::size_t oracle_dim(const Poset& p) {
  if (p.size() > 8)
    throw Error(errc::size_limit_exceeded, "oracle handles at most 8 nodes");
  const std::size_t n = p.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<NodeId> s;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(NodeId{v});
    bool chain = true;
    for (std::size_t i = 0; i < s.size() && chain; ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!p.leq(s[i], s[j]) && !p.leq(s[j], s[i])) {
          chain = false;
          break;
        }
    if (chain) best = std::max(best, s.size() - 1);
  }
  return best;
}

std::size_t oracle_height(const Poset& p, NodeId x) {
  if (p.size() > 8)
    throw Error(errc::size_limit_exceeded, "oracle handles at most 8 nodes");
  const std::size_t n = p.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask >> x.value & 1)) continue;
    std::vector<NodeId> s;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(NodeId{v});
    bool chain = true;
    for (std::size_t i = 0; i < s.size() && chain; ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!p.leq(s[i], s[j]) && !p.leq(s[j], s[i])) {
          chain = false;
          break;
        }
    if (!chain) continue;
    std::sort(s.begin(), s.end(), [&](NodeId a, NodeId b) { return p.less(a, b); });
    if (!(s.back() == x)) continue;
    bool least_minimal = true;
    for (std::size_t v = 0; v < n; ++v)
      if (p.less(NodeId{v}, s.front())) {
        least_minimal = false;
        break;
      }
    if (!least_minimal) continue;
    bool saturated = true;
    for (std::size_t i = 0; i + 1 < s.size() && saturated; ++i)
      for (std::size_t v = 0; v < n; ++v)
        if (p.less(s[i], NodeId{v}) && p.less(NodeId{v}, s[i + 1])) {
          saturated = false;
          break;
        }
    if (saturated) best = std::max(best, s.size() - 1);
  }
  return best;
}

// ---------------------------------------------------------------------------
// labelled census on up to 4 nodes: independent of the enumeration above

namespace {

std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  return pairs;
}

bool strict_order_ok(std::size_t n,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                     std::uint64_t mask) {
  std::array<std::array<bool, 4>, 4> r{};
  for (std::size_t t = 0; t < pairs.size(); ++t)
    if (mask >> t & 1) r[pairs[t].first][pairs[t].second] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (r[i][j] && r[j][i]) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (r[i][j] && r[j][k] && !r[i][k]) return false;
  return true;
}

void require_labelled_size(std::size_t n) {
  if (n < 1 || n > 4)
    throw Error(errc::size_limit_exceeded, "labelled census handles 1..4 nodes");
}

}  // namespace

std::size_t count_labeled_posets(std::size_t n) {
  require_labelled_size(n);
  const auto pairs = ordered_pairs(n);
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask)
    if (strict_order_ok(n, pairs, mask)) ++count;
  return count;
}

std::size_t count_classes_by_orbit(std::size_t n) {
  require_labelled_size(n);
  const auto pairs = ordered_pairs(n);
  std::vector<std::size_t> pair_index(n * n, 0);
  for (std::size_t t = 0; t < pairs.size(); ++t)
    pair_index[pairs[t].first * n + pairs[t].second] = t;

  std::vector<std::size_t> perm(n);
  std::set<std::uint64_t> orbits;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    if (!strict_order_ok(n, pairs, mask)) continue;
    std::uint64_t least = mask;
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      std::uint64_t image = 0;
      for (std::size_t t = 0; t < pairs.size(); ++t)
        if (mask >> t & 1)
          image |= std::uint64_t{1} << pair_index[perm[pairs[t].first] * n + perm[pairs[t].second]];
      least = std::min(least, image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    orbits.insert(least);
  }
  return orbits.size();
}

bool brute_force_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > 8)
    throw Error(errc::size_limit_exceeded, "oracle handles at most 8 nodes");
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a.leq(NodeId{i}, NodeId{j}) != b.leq(NodeId{perm[i]}, NodeId{perm[j]})) {
          match = false;
          break;
        }
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// ---------------------------------------------------------------------------
// seeded random posets

namespace {

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

SplitMix trial_rng(std::uint64_t seed, std::size_t trial, std::uint64_t stream) {
  SplitMix rng{seed ^ stream ^ (0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(trial) + 1))};
  rng.next();
  return rng;
}

}  // namespace

Poset random_poset(std::uint64_t seed, std::size_t trial) {
  SplitMix rng = trial_rng(seed, trial, 0);
  const std::size_t n = 2 + rng.next() % 9;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.next() % i]);

  // forward-edge probability k/5 with k in {1, 2, 3}
  const std::uint64_t k = 1 + rng.next() % 3;
  std::vector<std::string> labels = letter_labels(n);
  std::vector<std::pair<std::string, std::string>> rels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.next() % 5 < k) rels.emplace_back(labels[order[i]], labels[order[j]]);
  return Poset::build(std::move(labels), rels);
}

// ---------------------------------------------------------------------------
// reduction driver

ReductionCheck verify_reduction_theorem(std::size_t max_n, std::size_t jobs) {
  if (max_n < 1 || max_n > kEnumerationCeiling)
    throw Error(errc::size_limit_exceeded,
                "reduction check handles 1.." + std::to_string(kEnumerationCeiling) + " nodes");
  if (jobs == 0) jobs = 1;

  ReductionCheck out;
  out.max_n = max_n;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::vector<Poset> classes = enumerate_posets(n);
    struct Part {
      std::size_t unique_max = 0;
      std::size_t failures = 0;
    };
    std::vector<Part> parts(jobs);
    run_parallel(classes.size(), jobs, [&](std::size_t t, std::size_t i) {
      const Poset& p = classes[i];
      if (p.maximals().size() != 1) return;
      ++parts[t].unique_max;
      ReductionSequence seq = reduce_to_point(p);
      if (!verify_reduction(seq) || !(seq.posets.back() == p)) ++parts[t].failures;
    });
    out.classes += classes.size();
    for (const Part& part : parts) {
      out.unique_max += part.unique_max;
      out.failures += part.failures;
    }
  }
  return out;
}

std::string ReductionCheck::render() const {
  std::ostringstream os;
  os << "reduction check: max_n=" << max_n << " classes=" << classes
     << " unique_max=" << unique_max << " failures=" << failures
     << " verdict=" << (failures == 0 ? "PASS" : "FAIL") << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// lemma driver

namespace {

constexpr std::size_t kLemmaLineCount = 7;
constexpr const char* kLemmaNames[kLemmaLineCount] = {
    "glue/min-image",      "glue/dimension",           "glue/cover-lifting",
    "glue/upset-formula",  "retract/dimension-identity",
    "roundtrip/split-glue", "roundtrip/attach-retract",
};
constexpr std::size_t kWitnessCap = 8;

struct LemmaCounts {
  std::array<std::size_t, kLemmaLineCount> checked{};
  std::array<std::size_t, kLemmaLineCount> violations{};
  std::vector<std::pair<std::size_t, std::string>> witnesses;  // (case ordinal, text)
};

std::string describe(const Poset& p) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (NodeId v : p.sort_by_label(p.nodes())) {
    if (!first) os << " ";
    first = false;
    os << p.label(v);
  }
  os << ";";
  for (NodeId a : p.sort_by_label(p.nodes()))
    for (NodeId b : p.sort_by_label(p.nodes()))
      if (p.covers(a, b)) os << " " << p.label(a) << "<" << p.label(b);
  os << "}";
  return os.str();
}

void note(LemmaCounts& counts, std::size_t line, bool ok, std::size_t ordinal,
          const std::string& what) {
  ++counts.checked[line];
  if (ok) return;
  ++counts.violations[line];
  if (counts.witnesses.size() < 2 * kWitnessCap)
    counts.witnesses.emplace_back(ordinal, std::string(kLemmaNames[line]) + " " + what);
}

void check_glue_case(const Poset& x, const std::vector<NodeId>& c, std::size_t ordinal,
                     LemmaCounts& out) {
  GluingResult res = glue(x, c);
  const Poset& y = res.quotient;
  const PosetMap& g = res.map;

  std::string tag = describe(x) + " C=";
  for (NodeId v : x.sort_by_label(c)) tag += x.label(v) + ",";
  tag.pop_back();

  std::set<std::size_t> image, ymin;
  for (NodeId m : x.minimals()) image.insert(g.assign[m.value].value);
  for (NodeId m : y.minimals()) ymin.insert(m.value);
  note(out, 0, image == ymin, ordinal, tag);

  note(out, 1, y.dim() == x.dim(), ordinal, tag);

  bool lifts = true;
  for (NodeId p : y.nodes()) {
    for (NodeId q : y.nodes()) {
      if (!y.covers(p, q)) continue;
      for (NodeId upper : x.nodes()) {
        if (!(g.assign[upper.value] == q)) continue;
        bool found = false;
        for (NodeId lower : x.nodes())
          if (g.assign[lower.value] == p && x.covers(lower, upper)) {
            found = true;
            break;
          }
        if (!found) lifts = false;
      }
    }
  }
  note(out, 2, lifts, ordinal, tag);

  if (x.maximals().size() == 1) {
    bool upset_ok = true;
    std::set<std::size_t> seen;
    for (NodeId x0 : x.nodes()) {
      NodeId q = g.assign[x0.value];
      if (!seen.insert(q.value).second) continue;
      std::size_t rhs = 0;
      for (NodeId x1 : x.nodes())
        if (g.assign[x1.value] == q) rhs = std::max(rhs, x.up_set(x1).dim());
      if (y.up_set(q).dim() != rhs) upset_ok = false;
    }
    note(out, 3, upset_ok, ordinal, tag);
  }
}

void check_retract_cases(const Poset& x, std::size_t ordinal, LemmaCounts& out) {
  if (x.dim() == 0) return;
  for (NodeId s : simple_nodes(x)) {
    bool eligible = false;
    for (NodeId u : x.nodes())
      if (x.less(u, s) && x.up_set(u).dim() == x.dim()) {
        eligible = true;
        break;
      }
    if (!eligible) continue;
    Poset r = retract(x, s);
    NodeId moved = r.node_or_throw(x.label(s));
    note(out, 4, r.up_set(moved).dim() + 1 == x.dim(), ordinal,
         describe(x) + " at " + x.label(s));
  }
}

void check_split_roundtrip(const Poset& x, NodeId u, std::size_t ordinal, LemmaCounts& out) {
  GluingResult res = split(x, u);
  bool ok = verify_gluing(res.map.dom, res.glued, res.quotient, res.map) &&
            is_height_zero_gluing(res);
  if (ok) {
    GluingResult back = glue(res.map.dom, res.glued);
    ok = isomorphism(back.quotient, x).has_value();
  }
  note(out, 5, ok, ordinal, describe(x) + " at " + x.label(u));
}

void check_attach_roundtrip(const Poset& x, NodeId p, std::size_t m, std::size_t ordinal,
                            LemmaCounts& out) {
  Poset grown = attach_below(x, p, m);
  NodeId moved = grown.node_or_throw(x.label(p));
  bool ok = retract(grown, moved) == x;
  note(out, 6, ok, ordinal,
       describe(x) + " at " + x.label(p) + " m=" + std::to_string(m));
}

void check_exhaustive_case(const Poset& x, std::size_t ordinal, LemmaCounts& out) {
  const std::vector<NodeId> mins = x.minimals();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << mins.size()); ++mask) {
    std::vector<NodeId> c;
    for (std::size_t i = 0; i < mins.size(); ++i)
      if (mask >> i & 1) c.push_back(mins[i]);
    check_glue_case(x, c, ordinal, out);
  }
  check_retract_cases(x, ordinal, out);
  for (NodeId u : mins)
    if (x.upper_covers(u).size() >= 2) check_split_roundtrip(x, u, ordinal, out);
  for (NodeId p : mins)
    for (std::size_t m = 1; m <= 2; ++m) check_attach_roundtrip(x, p, m, ordinal, out);
}

void check_random_case(std::uint64_t seed, std::size_t trial, std::size_t ordinal,
                       LemmaCounts& out) {
  const Poset x = random_poset(seed, trial);
  SplitMix pick = trial_rng(seed, trial, 0xda942042e4dd58b5ull);

  const std::vector<NodeId> mins = x.minimals();
  const std::uint64_t span = (std::uint64_t{1} << mins.size()) - 1;
  const std::uint64_t mask = 1 + pick.next() % span;
  std::vector<NodeId> c;
  for (std::size_t i = 0; i < mins.size(); ++i)
    if (mask >> i & 1) c.push_back(mins[i]);
  check_glue_case(x, c, ordinal, out);

  check_retract_cases(x, ordinal, out);

  for (NodeId u : x.sort_by_label(mins))
    if (x.upper_covers(u).size() >= 2) {
      check_split_roundtrip(x, u, ordinal, out);
      break;
    }
  NodeId p = x.sort_by_label(mins)[pick.next() % mins.size()];
  check_attach_roundtrip(x, p, 1 + pick.next() % 2, ordinal, out);
}

void merge_counts(LemmaCheck& out, std::vector<LemmaCounts>& parts) {
  std::vector<std::pair<std::size_t, std::string>> witnesses;
  for (LemmaCounts& part : parts) {
    for (std::size_t line = 0; line < kLemmaLineCount; ++line) {
      out.lines[line].checked += part.checked[line];
      out.lines[line].violations += part.violations[line];
    }
    witnesses.insert(witnesses.end(), part.witnesses.begin(), part.witnesses.end());
    part.witnesses.clear();
  }
  std::sort(witnesses.begin(), witnesses.end());
  for (auto& w : witnesses) {
    if (out.witnesses.size() >= kWitnessCap) break;
    out.witnesses.push_back(std::move(w.second));
  }
}

}  // namespace

LemmaCheck verify_surgery_lemmas(std::size_t max_n, std::size_t random_trials,
                                 std::uint64_t seed, std::size_t jobs) {
  if (max_n < 1 || max_n > kEnumerationCeiling)
    throw Error(errc::size_limit_exceeded,
                "lemma check handles 1.." + std::to_string(kEnumerationCeiling) + " nodes");
  if (jobs == 0) jobs = 1;

  LemmaCheck out;
  out.max_n = max_n;
  out.random_trials = random_trials;
  out.seed = seed;
  out.lines.resize(kLemmaLineCount);
  for (std::size_t line = 0; line < kLemmaLineCount; ++line)
    out.lines[line].name = kLemmaNames[line];

  std::size_t ordinal_base = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::vector<Poset> classes = enumerate_posets(n);
    std::vector<LemmaCounts> parts(jobs);
    run_parallel(classes.size(), jobs, [&](std::size_t t, std::size_t i) {
      check_exhaustive_case(classes[i], ordinal_base + i, parts[t]);
    });
    merge_counts(out, parts);
    ordinal_base += classes.size();
  }

  std::vector<LemmaCounts> parts(jobs);
  run_parallel(random_trials, jobs, [&](std::size_t t, std::size_t i) {
    check_random_case(seed, i, ordinal_base + i, parts[t]);
  });
  merge_counts(out, parts);

  return out;
}

std::size_t LemmaCheck::total_violations() const {
  std::size_t total = 0;
  for (const Line& line : lines) total += line.violations;
  return total;
}

std::string LemmaCheck::render() const {
  std::ostringstream os;
  os << "lemma check: max_n=" << max_n << " random_trials=" << random_trials
     << " seed=" << seed << "\n";
  for (const Line& line : lines) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "  %-28s checked=%zu violations=%zu\n",
                  line.name.c_str(), line.checked, line.violations);
    os << buf;
  }
  for (const std::string& w : witnesses) os << "  witness: " << w << "\n";
  os << "  verdict: " << (total_violations() == 0 ? "PASS" : "FAIL") << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// census table

std::vector<CensusRow> classify(std::size_t max_n, std::size_t jobs) {
  if (max_n < 1 || max_n > kEnumerationCeiling)
    throw Error(errc::size_limit_exceeded,
                "census handles 1.." + std::to_string(kEnumerationCeiling) + " nodes");
  if (jobs == 0) jobs = 1;

  std::vector<CensusRow> rows;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::vector<Poset> classes = enumerate_posets(n);
    std::vector<CensusRow> parts(jobs);
    run_parallel(classes.size(), jobs, [&](std::size_t t, std::size_t i) {
      const Poset& p = classes[i];
      CensusRow& part = parts[t];
      const bool unique_max = p.maximals().size() == 1;
      if (unique_max) ++part.unique_max;
      if (check_local_ufd(p).verdict) ++part.local_realizable;
      if (check_nonlocal_ufd(p).verdict) ++part.nonlocal_realizable;
      if (unique_max) {
        ReductionSequence seq = reduce_to_point(p);
        if (verify_reduction(seq) && seq.posets.back() == p) ++part.reduced_ok;
      }
    });
    CensusRow row;
    row.n = n;
    row.iso_classes = classes.size();
    for (const CensusRow& part : parts) {
      row.unique_max += part.unique_max;
      row.local_realizable += part.local_realizable;
      row.nonlocal_realizable += part.nonlocal_realizable;
      row.reduced_ok += part.reduced_ok;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string render_table(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%3s %8s %11s %6s %9s %8s\n", "n", "classes",
                "unique_max", "local", "nonlocal", "reduced");
  os << buf;
  for (const CensusRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%3zu %8zu %11zu %6zu %9zu %8zu\n", r.n, r.iso_classes,
                  r.unique_max, r.local_realizable, r.nonlocal_realizable, r.reduced_ok);
    os << buf;
  }
  return os.str();
}

std::string rows_to_json(const std::vector<CensusRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CensusRow& r : rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["classes"] = r.iso_classes;
    row["unique_max"] = r.unique_max;
    row["local"] = r.local_realizable;
    row["nonlocal"] = r.nonlocal_realizable;
    row["reduced"] = r.reduced_ok;
    arr.push_back(row);
  }
  return arr.dump(2) + "\n";
}

}  // namespace poset
