#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "maxplus/core.hpp"
#include "maxplus/tangent_digraph.hpp"

namespace maxplus {

/// Which extremality criterion fails.
enum class Condition {
  IsolatedSubset,    // Supp(x) has a proper isolated subset
  DisjointCycles,    // D_x has two node-disjoint cycles
  TwoVariableNodes,  // D_x has more than one variable node
};

inline std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::IsolatedSubset: return "ISOLATED_SUBSET";
    case Condition::DisjointCycles: return "DISJOINT_CYCLES";
    case Condition::TwoVariableNodes: return "TWO_VARIABLE_NODES";
  }
  return "?";
}

/// The step of the decision procedure that produced the verdict.
enum class Branch { SingleSupport, TwoVariableNodes, UniqueInArcs, Fountain };

inline std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::SingleSupport: return "single_support";
    case Branch::TwoVariableNodes: return "two_variable_nodes";
    case Branch::UniqueInArcs: return "unique_in_arcs";
    case Branch::Fountain: return "fountain";
  }
  return "?";
}

/// Elementary cycle c0 → c1 → … → c_{k-1} → c0. A loop is a single node.
using Cycle = std::vector<Index>;

struct IsolatedSubsetEvidence {
  IndexSet subset;
  IndexSet complement;
};

/// Both cycles are oriented as in D_x.
struct DisjointCyclesEvidence {
  Cycle first;
  Cycle second;
};

struct VariableNodesEvidence {
  Index first;
  Index second;
};

using Evidence = std::variant<std::monostate, IsolatedSubsetEvidence, DisjointCyclesEvidence, VariableNodesEvidence>;

/// Per-arc traversal counts for the jet and cover phases.
struct ArcTouchCounter {
  std::vector<std::uint32_t> touches;

  explicit ArcTouchCounter(std::size_t arcs = 0) : touches(arcs, 0) {}
  void touch(std::size_t id) { ++touches[id]; }
  std::uint32_t max() const { return touches.empty() ? 0 : *std::max_element(touches.begin(), touches.end()); }
};

enum class JetEnd { OCycle, Sigma };

struct JetTrace {
  Index first_step = 0;   // head of the arc leaving o
  JetEnd end = JetEnd::OCycle;
  std::size_t sigma = 0;  // index into JetSummary::sigma_cycles when end == Sigma
  std::optional<std::size_t> merged_into;  // earlier jet whose walk this one joined
  std::size_t arcs_walked = 0;
};

/// Cycles here are oriented as walked, i.e. in the reversed digraph.
struct JetSummary {
  std::vector<Cycle> sigma_cycles;
  bool has_o_cycle = false;
  Cycle o_cycle;  // first o-cycle met, starting at o
  std::vector<JetTrace> jets;
};

struct FountainReport {
  Index o = 0;
  JetSummary jets;
  IndexSet remainder;
  std::vector<std::uint32_t> arc_touches;  // indexed by arc id of the reversed digraph
};

struct Verdict {
  bool extremal = false;
  std::optional<Condition> condition;
  Evidence evidence;
  Branch branch = Branch::SingleSupport;
  std::optional<FountainReport> fountain;
};

/// G is an o-fountain: o has ≥ 2 outgoing arcs, every other node has exactly
/// one outgoing arc and no loop.
inline bool is_fountain(const TangentDigraph& g, Index o) {
  if (!g.contains(o) || g.out_degree(o) < 2) return false;
  for (Index v : g.nodes())
    if (v != o && (g.out_degree(v) != 1 || g.has_loop(v))) return false;
  return true;
}

namespace detail {

inline void require_fountain(const TangentDigraph& g, Index o) {
  if (!is_fountain(g, o)) throw PreconditionError("digraph is not an o-fountain at node " + std::to_string(o + 1));
}

inline Cycle rotate_to_min(Cycle c) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return c;
}

/// Reorients a cycle of the reversed digraph as a cycle of the original.
inline Cycle unreverse(Cycle c) {
  std::reverse(c.begin(), c.end());
  return rotate_to_min(std::move(c));
}

/// Walk unique successors from `start` until a node repeats; returns the cycle.
inline Cycle functional_cycle(const TangentDigraph& g, Index start) {
  std::vector<long> pos(g.dimension(), -1);
  std::vector<Index> path;
  Index cur = start;
  while (pos[cur] < 0) {
    pos[cur] = static_cast<long>(path.size());
    path.push_back(cur);
    if (g.out_degree(cur) != 1) throw InvariantViolation("functional walk met a node without a unique successor");
    cur = g.arc(g.out_begin(cur)).to;
  }
  return Cycle(path.begin() + pos[cur], path.end());
}

}  // namespace detail

/// Follows every jet leaving o in an o-fountain, in ascending order of the
/// arc heads. Nodes are marked with the jet that first reached them, so a
/// later jet stops as soon as it joins an earlier one; every arc is walked at
/// most once overall.
inline JetSummary jet_scan(const TangentDigraph& rev, Index o, ArcTouchCounter* counter = nullptr) {
  detail::require_fountain(rev, o);
  JetSummary out;
  std::vector<long> owner(rev.dimension(), -1);
  std::vector<std::size_t> pos(rev.dimension(), 0);
  std::vector<Index> path;

  for (std::size_t id = rev.out_begin(o); id < rev.out_end(o); ++id) {
    const std::size_t t = out.jets.size();
    if (counter) counter->touch(id);
    JetTrace trace;
    trace.first_step = rev.arc(id).to;
    trace.end = JetEnd::OCycle;
    Index cur = trace.first_step;
    path.clear();
    for (;;) {
      if (cur == o) {
        if (!out.has_o_cycle) {
          out.o_cycle.assign(1, o);
          out.o_cycle.insert(out.o_cycle.end(), path.begin(), path.end());
        }
        out.has_o_cycle = true;
        trace.end = JetEnd::OCycle;
        break;
      }
      if (owner[cur] == static_cast<long>(t)) {
        out.sigma_cycles.emplace_back(path.begin() + static_cast<std::ptrdiff_t>(pos[cur]), path.end());
        trace.end = JetEnd::Sigma;
        trace.sigma = out.sigma_cycles.size() - 1;
        break;
      }
      if (owner[cur] >= 0) {
        const JetTrace& earlier = out.jets[static_cast<std::size_t>(owner[cur])];
        trace.end = earlier.end;
        trace.sigma = earlier.sigma;
        trace.merged_into = static_cast<std::size_t>(owner[cur]);
        break;
      }
      owner[cur] = static_cast<long>(t);
      pos[cur] = path.size();
      path.push_back(cur);
      const std::size_t next = rev.out_begin(cur);
      if (counter) counter->touch(next);
      cur = rev.arc(next).to;
      ++trace.arcs_walked;
    }
    out.jets.push_back(trace);
  }
  return out;
}

/// Nodes outside D̄_o: neither reachable from o nor able to reach a node
/// reachable from o.
inline IndexSet remainder_after_cover(const TangentDigraph& rev, Index o, ArcTouchCounter* counter = nullptr) {
  detail::require_fountain(rev, o);
  std::vector<char> covered(rev.dimension(), 0);
  std::vector<Index> stack{o}, reach{o};
  covered[o] = 1;
  while (!stack.empty()) {
    const Index v = stack.back();
    stack.pop_back();
    for (std::size_t id = rev.out_begin(v); id < rev.out_end(v); ++id) {
      if (counter) counter->touch(id);
      const Index w = rev.arc(id).to;
      if (!covered[w]) {
        covered[w] = 1;
        stack.push_back(w);
        reach.push_back(w);
      }
    }
  }
  stack = std::move(reach);
  while (!stack.empty()) {
    const Index v = stack.back();
    stack.pop_back();
    for (std::size_t id : rev.in_arc_ids(v)) {
      if (counter) counter->touch(id);
      const Index u = rev.arc(id).from;
      if (!covered[u]) {
        covered[u] = 1;
        stack.push_back(u);
      }
    }
  }
  IndexSet rest;
  for (Index v : rev.nodes())
    if (!covered[v]) rest.push_back(v);
  return rest;
}

/// The decision procedure on a tangent digraph. Linear in nodes + arcs.
inline Verdict check_digraph(const TangentDigraph& g) {
  const IndexSet& nodes = g.nodes();
  if (nodes.empty()) throw PreconditionError("empty digraph");
  Verdict v;
  if (nodes.size() == 1) {
    v.extremal = true;
    v.branch = Branch::SingleSupport;
    return v;
  }

  const IndexSet vars = variable_nodes(g);
  if (vars.size() > 1) {
    v.condition = Condition::TwoVariableNodes;
    v.evidence = VariableNodesEvidence{vars[0], vars[1]};
    v.branch = Branch::TwoVariableNodes;
    return v;
  }

  const bool unique_in = std::all_of(nodes.begin(), nodes.end(), [&](Index i) { return g.in_degree(i) <= 1; });
  if (unique_in) {
    v.branch = Branch::UniqueInArcs;
    auto comps = weak_components(g);
    if (comps.size() == 1) {
      v.extremal = true;
      return v;
    }
    IndexSet rest;
    std::set_difference(nodes.begin(), nodes.end(), comps[0].begin(), comps[0].end(), std::back_inserter(rest));
    v.condition = Condition::IsolatedSubset;
    v.evidence = IsolatedSubsetEvidence{std::move(comps[0]), std::move(rest)};
    return v;
  }

  if (vars.empty()) throw InvariantViolation("all nodes invariable, yet some node has two incoming arcs");
  std::size_t single_in = 0;
  std::optional<Index> o;
  for (Index i : nodes) {
    if (g.in_degree(i) == 1 && !g.has_loop(i)) ++single_in;
    if (g.in_degree(i) >= 2) {
      if (o) throw InvariantViolation("two nodes with several incoming arcs under one variable node");
      o = i;
    }
  }
  if (single_in + 1 < nodes.size())
    throw InvariantViolation("fewer than s-1 nodes with a unique incoming arc and no loop");

  v.branch = Branch::Fountain;
  const TangentDigraph rev = reverse(g);
  ArcTouchCounter counter(rev.arc_count());
  FountainReport report;
  report.o = *o;
  report.jets = jet_scan(rev, *o, &counter);
  const JetSummary& jets = report.jets;

  auto fail = [&](const Cycle& first, const Cycle& second) {
    v.condition = Condition::DisjointCycles;
    v.evidence = DisjointCyclesEvidence{detail::unreverse(first), detail::unreverse(second)};
    report.arc_touches = counter.touches;
    v.fountain = std::move(report);
    return v;
  };

  if (jets.has_o_cycle && !jets.sigma_cycles.empty()) return fail(jets.o_cycle, jets.sigma_cycles[0]);
  if (jets.sigma_cycles.size() >= 2) return fail(jets.sigma_cycles[0], jets.sigma_cycles[1]);

  report.remainder = remainder_after_cover(rev, *o, &counter);
  if (!report.remainder.empty()) {
    const Cycle& covered = jets.has_o_cycle ? jets.o_cycle : jets.sigma_cycles.at(0);
    const Cycle other = detail::functional_cycle(rev, report.remainder.front());
    return fail(covered, other);
  }
  v.extremal = true;
  report.arc_touches = counter.touches;
  v.fountain = std::move(report);
  return v;
}

/// Decides whether x ∈ 𝒳 is an extremal of the solution space of A⊗x ≥ x.
/// O(n²): one pass over A to build D_x, then linear work on D_x.
inline Verdict check(const Matrix& a, const Vector& x) {
  require_solution(a, x);
  if (support(x).size() == 1) {
    Verdict v;
    v.extremal = true;
    v.branch = Branch::SingleSupport;
    return v;
  }
  return check_digraph(TangentDigraph::build(a, x));
}

inline bool is_elementary_cycle(const TangentDigraph& g, const Cycle& c) {
  if (c.empty()) return false;
  std::vector<char> seen(g.dimension(), 0);
  for (std::size_t t = 0; t < c.size(); ++t) {
    if (!g.contains(c[t]) || seen[c[t]]) return false;
    seen[c[t]] = 1;
    if (!g.has_arc(c[t], c[(t + 1) % c.size()])) return false;
  }
  return true;
}

/// Re-checks the evidence attached to a verdict against the digraph.
inline bool validate_evidence(const TangentDigraph& g, const Verdict& v) {
  if (v.extremal) return !v.condition && std::holds_alternative<std::monostate>(v.evidence);
  if (!v.condition) return false;
  switch (*v.condition) {
    case Condition::IsolatedSubset: {
      const auto* e = std::get_if<IsolatedSubsetEvidence>(&v.evidence);
      if (!e || e->subset.empty() || e->complement.empty()) return false;
      IndexSet all;
      std::set_union(e->subset.begin(), e->subset.end(), e->complement.begin(), e->complement.end(),
                     std::back_inserter(all));
      return all == g.nodes() && all.size() == e->subset.size() + e->complement.size() &&
             is_isolated_set(g, e->subset);
    }
    case Condition::DisjointCycles: {
      const auto* e = std::get_if<DisjointCyclesEvidence>(&v.evidence);
      if (!e || !is_elementary_cycle(g, e->first) || !is_elementary_cycle(g, e->second)) return false;
      for (Index a : e->first)
        if (std::find(e->second.begin(), e->second.end(), a) != e->second.end()) return false;
      return true;
    }
    case Condition::TwoVariableNodes: {
      const auto* e = std::get_if<VariableNodesEvidence>(&v.evidence);
      return e && e->first != e->second && g.contains(e->first) && g.contains(e->second) &&
             is_variable(g, e->first) && is_variable(g, e->second);
    }
  }
  return false;
}

inline constexpr std::size_t kBruteForceNodeCap = 12;

/// Node sets (as bitmasks over positions in g.nodes()) of all elementary
/// cycles, loops included. Exponential; test-scale only.
inline std::vector<std::uint32_t> elementary_cycle_masks(const TangentDigraph& g) {
  const IndexSet& nodes = g.nodes();
  if (nodes.size() > kBruteForceNodeCap) throw CapacityError("brute-force cycle enumeration is capped at 12 nodes");
  std::vector<long> local(g.dimension(), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) local[nodes[k]] = static_cast<long>(k);

  std::unordered_set<std::uint32_t> masks;
  // Cycles whose smallest local index is s, extended through larger indices only.
  auto dfs = [&](auto&& self, std::size_t s, Index v, std::uint32_t mask) -> void {
    for (const Arc& a : g.out_arcs(v)) {
      const auto w = static_cast<std::size_t>(local[a.to]);
      if (w == s) masks.insert(mask);
      else if (w > s && !(mask & (1u << w))) self(self, s, a.to, mask | (1u << w));
    }
  };
  for (std::size_t s = 0; s < nodes.size(); ++s) dfs(dfs, s, nodes[s], 1u << s);
  return {masks.begin(), masks.end()};
}

/// Test oracle for the disjoint-cycles criterion by full enumeration.
inline bool has_two_disjoint_cycles_bruteforce(const TangentDigraph& g) {
  const auto masks = elementary_cycle_masks(g);
  for (std::size_t p = 0; p < masks.size(); ++p)
    for (std::size_t q = p + 1; q < masks.size(); ++q)
      if ((masks[p] & masks[q]) == 0) return true;
  return false;
}

}  // namespace maxplus
