#include "poset/surgery.hpp"

#include <algorithm>
#include <cassert>

namespace poset {

namespace {

std::string fresh_label(std::string base, const std::vector<std::string>& taken) {
  auto used = [&](const std::string& s) {
    return std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  while (used(base)) base += "'";
  return base;
}

std::vector<std::uint8_t> member_mask(const Poset& p, const std::vector<NodeId>& ids) {
  std::vector<std::uint8_t> mask(p.size(), 0);
  for (NodeId x : ids) mask[x.value] = 1;
  return mask;
}

}  // namespace

GluingResult glue(const Poset& x, const std::vector<NodeId>& c) {
  if (c.empty()) throw Error(errc::empty_selection, "nothing to glue");
  if (!x.is_complete_subset(c))
    throw Error(errc::not_complete_subset, "glued class is not a complete subset");

  const std::size_t n = x.size();
  auto in_c = member_mask(x, c);

  std::vector<NodeId> survivors;
  for (std::size_t i = 0; i < n; ++i)
    if (!in_c[i]) survivors.push_back(NodeId{i});

  std::vector<std::string> names;
  for (NodeId s : c) names.push_back(x.label(s));
  std::sort(names.begin(), names.end());
  std::string glued_label = names.front();
  for (std::size_t i = 1; i < names.size(); ++i) glued_label += "+" + names[i];

  std::vector<std::string> labels;
  for (NodeId s : survivors) labels.push_back(x.label(s));
  labels.push_back(fresh_label(glued_label, labels));

  // a <=' b iff a <= b, or a <= s and t <= b for some s, t in the glued class
  auto rel = [&](NodeId a, NodeId b) {
    if (x.leq(a, b)) return true;
    bool a_under = false, b_over = false;
    for (NodeId s : c) {
      a_under = a_under || x.leq(a, s);
      b_over = b_over || x.leq(s, b);
    }
    return a_under && b_over;
  };

  const std::size_t m = survivors.size() + 1;
  auto rep = [&](std::size_t i) {
    return i < survivors.size() ? survivors[i] : c.front();
  };
  std::vector<std::uint8_t> leq(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      leq[i * m + j] = (i == j || rel(rep(i), rep(j))) ? 1 : 0;

  // representative choice must not matter; if the relation ordered two classes
  // both ways the quotient would not be a poset
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (leq[i * m + j] && leq[j * m + i])
        throw Error(errc::quotient_not_antisymmetric,
                    "quotient orders '" + labels[i] + "' and '" + labels[j] +
                        "' both ways");

  GluingResult out;
  out.quotient = Poset::from_relation(labels, std::move(leq));
  out.map.dom = x;
  out.map.cod = out.quotient;
  out.map.assign.assign(n, NodeId{m - 1});
  for (std::size_t i = 0; i < survivors.size(); ++i)
    out.map.assign[survivors[i].value] = NodeId{i};
  out.glued = c;
  return out;
}

bool verify_gluing(const Poset& x, const std::vector<NodeId>& c, const Poset& y,
                   const PosetMap& g) {
  if (g.dom != x || g.cod != y) return false;
  if (!x.is_complete_subset(c)) return false;

  auto in_c = member_mask(x, c);
  // constant on the class, collision-free off it
  for (NodeId a : x.nodes())
    for (NodeId b : x.nodes())
      if (a != b && g.assign[a.value] == g.assign[b.value] &&
          !(in_c[a.value] && in_c[b.value]))
        return false;
  for (std::size_t i = 1; i < c.size(); ++i)
    if (g.assign[c[i].value] != g.assign[c[0].value]) return false;
  // surjective
  std::vector<std::uint8_t> hit(y.size(), 0);
  for (NodeId a : x.nodes()) hit[g.assign[a.value].value] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;

  for (NodeId a : x.nodes())
    for (NodeId b : x.nodes()) {
      bool through_c = false;
      for (NodeId s : c)
        if (x.leq(a, s)) { through_c = true; break; }
      if (through_c) {
        through_c = false;
        for (NodeId t : c)
          if (x.leq(t, b)) { through_c = true; break; }
      }
      bool expect = x.leq(a, b) || through_c;
      if (y.leq(g.assign[a.value], g.assign[b.value]) != expect) return false;
    }
  return true;
}

bool is_height_zero_gluing(const GluingResult& r) {
  const Poset& x = r.map.dom;
  for (NodeId s : r.glued)
    if (x.height(s) != 0) return false;
  return true;
}

std::size_t n_value(const Poset& y) {
  std::size_t count = 0;
  for (NodeId x : y.nodes())
    if (y.height(x) == 0 && y.upper_covers(x).size() >= 2) ++count;
  return count;
}

std::vector<NodeId> simple_nodes(const Poset& x) {
  if (x.dim() == 0)
    throw Error(errc::zero_dimensional, "no height-one nodes in a dimension-0 poset");
  std::vector<NodeId> out;
  for (NodeId v : x.nodes()) {
    if (x.height(v) != 1) continue;
    bool simple = true;
    for (NodeId u : x.nodes()) {
      if (!x.less(u, v)) continue;
      auto covers = x.upper_covers(u);
      if (covers.size() != 1 || covers[0] != v) { simple = false; break; }
    }
    if (simple) out.push_back(v);
  }
  return x.sort_by_label(std::move(out));
}

Poset retract(const Poset& x, NodeId simple) {
  auto simples = simple_nodes(x);  // also raises ZeroDimensional early
  if (std::find(simples.begin(), simples.end(), simple) == simples.end())
    throw Error(errc::not_simple_node, "'" + x.label(simple) + "' is not a simple node");
  std::vector<NodeId> keep;
  for (NodeId v : x.nodes())
    if (!x.less(v, simple)) keep.push_back(v);
  return x.induced(keep);
}

GluingResult split(const Poset& y, NodeId u) {
  if (y.height(u) != 0) throw Error(errc::not_minimal, "'" + y.label(u) + "' is not minimal");
  auto covers = y.upper_covers(u);
  if (covers.size() < 2)
    throw Error(errc::fewer_than_two_covers,
                "'" + y.label(u) + "' has " + std::to_string(covers.size()) + " cover(s)");

  std::vector<NodeId> survivors;
  for (NodeId v : y.nodes())
    if (v != u) survivors.push_back(v);

  std::vector<std::string> labels;
  for (NodeId v : survivors) labels.push_back(y.label(v));
  const std::size_t k = covers.size();
  for (std::size_t i = 0; i < k; ++i)
    labels.push_back(fresh_label(y.label(u) + std::to_string(i + 1), labels));

  // survivors keep their order; replacement u_i sits below exactly {v : c_i <= v}
  const std::size_t m = survivors.size() + k;
  std::vector<std::uint8_t> leq(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) leq[i * m + i] = 1;
  for (std::size_t i = 0; i < survivors.size(); ++i)
    for (std::size_t j = 0; j < survivors.size(); ++j)
      if (y.leq(survivors[i], survivors[j])) leq[i * m + j] = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < survivors.size(); ++j)
      if (y.leq(covers[i], survivors[j])) leq[(survivors.size() + i) * m + j] = 1;

  GluingResult out;
  out.map.dom = Poset::from_relation(std::move(labels), std::move(leq));
  out.quotient = y;
  out.map.cod = y;
  out.map.assign.assign(m, u);
  for (std::size_t i = 0; i < survivors.size(); ++i)
    out.map.assign[i] = survivors[i];
  for (std::size_t i = 0; i < k; ++i) out.glued.push_back(NodeId{survivors.size() + i});
  return out;
}

Poset attach_below(const Poset& x, NodeId p, std::size_t m) {
  if (x.height(p) != 0) throw Error(errc::not_minimal, "'" + x.label(p) + "' is not minimal");
  if (m == 0) throw Error(errc::precondition_failed, "must attach at least one node");

  const std::size_t n = x.size();
  std::vector<std::string> labels = x.labels();
  for (std::size_t i = 0; i < m; ++i)
    labels.push_back(fresh_label("q" + std::to_string(i + 1), labels));

  const std::size_t t = n + m;
  std::vector<std::uint8_t> leq(t * t, 0);
  for (std::size_t i = 0; i < t; ++i) leq[i * t + i] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (x.leq(NodeId{i}, NodeId{j})) leq[i * t + j] = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (x.leq(p, NodeId{j})) leq[(n + i) * t + j] = 1;
  return Poset::from_relation(std::move(labels), std::move(leq));
}

ReductionSequence reduce_to_point(const Poset& x) {
  if (x.maximals().size() != 1)
    throw Error(errc::no_unique_maximal, "reduction needs a unique maximal node");

  std::vector<Poset> walk{x};
  std::vector<ReductionStep> steps;  // steps[i] links walk[i] -> walk[i+1]
  while (walk.back().size() > 1) {
    const Poset& cur = walk.back();
    if (n_value(cur) > 0) {
      std::vector<NodeId> branching;
      for (NodeId v : cur.nodes())
        if (cur.height(v) == 0 && cur.upper_covers(v).size() >= 2) branching.push_back(v);
      NodeId u = cur.sort_by_label(std::move(branching)).front();
      GluingResult res = split(cur, u);
      ReductionStep step;
      step.kind = ReductionStep::Kind::split;
      step.node = cur.label(u);
      for (NodeId r : res.glued) step.detail.push_back(res.map.dom.label(r));
      steps.push_back(std::move(step));
      walk.push_back(res.map.dom);
    } else {
      NodeId s = simple_nodes(cur).front();
      ReductionStep step;
      step.kind = ReductionStep::Kind::retract;
      step.node = cur.label(s);
      for (NodeId v : cur.sort_by_label(cur.nodes()))
        if (cur.less(v, s)) step.detail.push_back(cur.label(v));
      steps.push_back(std::move(step));
      walk.push_back(retract(cur, s));
    }
  }

  ReductionSequence seq;
  seq.posets.assign(walk.rbegin(), walk.rend());
  seq.steps.assign(steps.rbegin(), steps.rend());
  return seq;
}

bool verify_reduction(const ReductionSequence& seq) {
  if (seq.posets.empty()) return false;
  if (seq.posets.front().size() != 1) return false;
  if (seq.steps.size() + 1 != seq.posets.size()) return false;

  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const Poset& source = seq.posets[i + 1];
    const Poset& derived = seq.posets[i];
    const ReductionStep& step = seq.steps[i];
    switch (step.kind) {
      case ReductionStep::Kind::identity:
        if (!(derived == source)) return false;
        break;
      case ReductionStep::Kind::split: {
        // derived glues back onto source along the recorded replacements
        auto u = source.node(step.node);
        if (!u) return false;
        std::vector<NodeId> c;
        PosetMap g;
        g.dom = derived;
        g.cod = source;
        g.assign.resize(derived.size());
        for (NodeId v : derived.nodes()) {
          bool replacement =
              std::find(step.detail.begin(), step.detail.end(), derived.label(v)) !=
              step.detail.end();
          if (replacement) {
            c.push_back(v);
            g.assign[v.value] = *u;
          } else {
            auto img = source.node(derived.label(v));
            if (!img) return false;
            g.assign[v.value] = *img;
          }
        }
        if (c.size() != step.detail.size()) return false;
        if (!verify_gluing(derived, c, source, g)) return false;
        if (!is_height_zero_gluing(GluingResult{source, g, c})) return false;
        if (!(n_value(derived) == 0 || n_value(derived) < n_value(source))) return false;
        break;
      }
      case ReductionStep::Kind::retract: {
        auto s = source.node(step.node);
        if (!s) return false;
        if (source.dim() == 0) return false;
        auto simples = simple_nodes(source);
        if (std::find(simples.begin(), simples.end(), *s) == simples.end()) return false;
        std::vector<std::string> removed;
        for (NodeId v : source.sort_by_label(source.nodes()))
          if (source.less(v, *s)) removed.push_back(source.label(v));
        if (removed != step.detail) return false;
        if (!(retract(source, *s) == derived)) return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace poset
