#pragma once

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

#include "maxplus/core.hpp"
#include "maxplus/extremality.hpp"
#include "maxplus/tangent_digraph.hpp"

namespace maxplus {

enum class Provenance { VariableNodes, IsolatedSubset, DisjointCycles, Oracle, External };

inline std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::VariableNodes: return "variable_nodes";
    case Provenance::IsolatedSubset: return "isolated_subset";
    case Provenance::DisjointCycles: return "disjoint_cycles";
    case Provenance::Oracle: return "oracle";
    case Provenance::External: return "external";
  }
  return "?";
}

/// x = x1 ⊕ x2 with x1, x2 solutions strictly below x.
struct WitnessPair {
  Vector x1;
  Vector x2;
  Provenance provenance = Provenance::External;
};

/// Reported when a constructed pair fails verification.
class WitnessError : public Error {
 public:
  using Error::Error;
};

/// Checks, exactly: x1, x2 ∈ 𝒳; x1, x2 ≤ x; x1 ≠ x; x2 ≠ x; x1 ⊕ x2 = x.
/// Never throws; any dimension mismatch simply fails.
inline bool verify_decomposition(const Matrix& a, const Vector& x, const WitnessPair& pair) {
  const std::size_t n = a.dim();
  if (x.size() != n || pair.x1.size() != n || pair.x2.size() != n) return false;
  return is_solution(a, pair.x1) && is_solution(a, pair.x2) && leq(pair.x1, x) && leq(pair.x2, x) &&
         pair.x1 != x && pair.x2 != x && oplus(pair.x1, pair.x2) == x;
}

/// Lowers the variable node i alone, keeping x′ ∈ 𝒳.
///
/// J collects the rows j ≠ i that are satisfied only through column i (every
/// other support column is strictly below x_j) while a_ji + x_i > x_j. The new
/// value is max_{j∈J} (x_j − a_ji) when J ≠ ∅, else x_i − 1.
inline Vector lower_variable(const Matrix& a, const Vector& x, Index i) {
  const TangentDigraph g = TangentDigraph::build(a, x);
  if (!g.contains(i)) throw PreconditionError("node " + std::to_string(i + 1) + " is outside Supp(x)");
  if (!is_variable(g, i))
    throw PreconditionError("node " + std::to_string(i + 1) + " is invariable and cannot be lowered alone");

  const Rational& xi = x[i].value();
  std::optional<Rational> bound;
  for (Index j : g.nodes()) {
    if (j == i || a(j, i).is_bottom()) continue;
    const Rational& xj = x[j].value();
    if (a(j, i).value() + xi <= xj) continue;
    bool only_through_i = true;
    for (Index s : g.nodes()) {
      if (s == i || a(j, s).is_bottom()) continue;
      if (a(j, s).value() + x[s].value() >= xj) {
        only_through_i = false;
        break;
      }
    }
    if (!only_through_i) continue;
    Rational need = xj - a(j, i).value();
    if (!bound || need > *bound) bound = std::move(need);
  }
  Vector lowered = x;
  lowered[i] = Scalar(bound ? *bound : Rational(xi - 1));
  return lowered;
}

inline WitnessPair decompose_two_variables(const Matrix& a, const Vector& x, Index i, Index j) {
  if (i == j) throw PreconditionError("the two variable nodes must differ");
  WitnessPair pair{lower_variable(a, x, i), lower_variable(a, x, j), Provenance::VariableNodes};
  return pair;
}

namespace detail {

/// Lowers every node of `lowered` by one common step. Rows in `watch` that
/// rely only on `lowered` (every column outside it is strictly below x_r)
/// bound the step by the slack of their best column inside `lowered`; the
/// step equals the smallest such bound, or 1 when no row is watched.
inline Vector uniform_lowering(const Matrix& a, const Vector& x, const IndexSet& lowered, const IndexSet& watch) {
  const std::size_t n = a.dim();
  std::vector<char> in_lowered(n, 0);
  for (Index v : lowered) in_lowered[v] = 1;

  std::optional<Rational> step;
  for (Index r : watch) {
    const Rational& xr = x[r].value();
    bool depends = true;
    std::optional<Rational> slack;
    for (Index j = 0; j < n && depends; ++j) {
      if (a(r, j).is_bottom() || x[j].is_bottom()) continue;
      Rational gap = a(r, j).value() + x[j].value() - xr;
      if (!in_lowered[j]) {
        if (gap >= 0) depends = false;
      } else if (gap > 0 && (!slack || gap > *slack)) {
        slack = std::move(gap);
      }
    }
    if (!depends) continue;
    if (!slack) throw InvariantViolation("row " + std::to_string(r + 1) + " has no feasible column");
    if (!step || *slack < *step) step = std::move(slack);
  }
  const Rational delta = step ? *step : Rational(1);
  Vector out = x;
  for (Index v : lowered) out[v] = Scalar(Rational(x[v].value() - delta));
  return out;
}

inline IndexSet set_minus(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Nodes reachable in g from `sources` without entering `blocked`; sources included.
inline IndexSet reach_avoiding(const TangentDigraph& g, const IndexSet& sources, const std::vector<char>& blocked) {
  std::vector<char> seen(g.dimension(), 0);
  std::vector<Index> stack;
  for (Index s : sources) {
    seen[s] = 1;
    stack.push_back(s);
  }
  while (!stack.empty()) {
    const Index v = stack.back();
    stack.pop_back();
    for (const Arc& arc : g.out_arcs(v))
      if (!seen[arc.to] && !blocked[arc.to]) {
        seen[arc.to] = 1;
        stack.push_back(arc.to);
      }
  }
  IndexSet out;
  for (Index v : g.nodes())
    if (seen[v]) out.push_back(v);
  return out;
}

}  // namespace detail

/// Decomposition along a proper isolated subset W1 and its complement W2:
/// x1 lowers W1 uniformly, x2 lowers W2 uniformly.
inline WitnessPair decompose_isolated(const Matrix& a, const Vector& x, const IndexSet& w1_in) {
  const TangentDigraph g = TangentDigraph::build(a, x);
  IndexSet w1 = w1_in;
  std::sort(w1.begin(), w1.end());
  w1.erase(std::unique(w1.begin(), w1.end()), w1.end());
  if (w1.empty() || w1.size() >= g.nodes().size() || !is_isolated_set(g, w1))
    throw PreconditionError("W1 must be a proper nonempty isolated subset of Supp(x)");
  const IndexSet w2 = detail::set_minus(g.nodes(), w1);
  return {detail::uniform_lowering(a, x, w1, w2), detail::uniform_lowering(a, x, w2, w1), Provenance::IsolatedSubset};
}

/// Σ-sets of a disjoint cycle pair: Σ1 is σ1 plus everything reachable from it
/// with σ2 deleted; Σ2 is σ2 plus what is reachable from it with σ1 deleted,
/// minus Σ1.
inline std::pair<IndexSet, IndexSet> cycle_basins(const TangentDigraph& g, const Cycle& c1, const Cycle& c2) {
  IndexSet l1(c1.begin(), c1.end()), l2(c2.begin(), c2.end());
  std::sort(l1.begin(), l1.end());
  std::sort(l2.begin(), l2.end());
  std::vector<char> blocked(g.dimension(), 0);
  for (Index v : l2) blocked[v] = 1;
  IndexSet sigma1 = detail::reach_avoiding(g, l1, blocked);
  std::fill(blocked.begin(), blocked.end(), 0);
  for (Index v : l1) blocked[v] = 1;
  IndexSet sigma2 = detail::set_minus(detail::reach_avoiding(g, l2, blocked), sigma1);
  return {std::move(sigma1), std::move(sigma2)};
}

/// Decomposition from two node-disjoint cycles of D_x: x1 lowers Σ1, x2 lowers Σ2.
inline WitnessPair decompose_disjoint_cycles(const Matrix& a, const Vector& x, const Cycle& c1, const Cycle& c2) {
  const TangentDigraph g = TangentDigraph::build(a, x);
  if (!is_elementary_cycle(g, c1) || !is_elementary_cycle(g, c2))
    throw PreconditionError("both arguments must be elementary cycles of the tangent digraph");
  for (Index v : c1)
    if (std::find(c2.begin(), c2.end(), v) != c2.end()) throw PreconditionError("cycles share node " + std::to_string(v + 1));

  auto [sigma1, sigma2] = cycle_basins(g, c1, c2);
  IndexSet both;
  std::set_union(sigma1.begin(), sigma1.end(), sigma2.begin(), sigma2.end(), std::back_inserter(both));
  const IndexSet outside = detail::set_minus(g.nodes(), both);
  return {detail::uniform_lowering(a, x, sigma1, outside), detail::uniform_lowering(a, x, sigma2, outside),
          Provenance::DisjointCycles};
}

/// Builds and verifies the decomposition matching a non-extremal verdict.
/// Throws WitnessError if the evidence no longer fits (A, x).
inline WitnessPair find_witness(const Matrix& a, const Vector& x, const Verdict& verdict) {
  if (verdict.extremal || !verdict.condition) throw PreconditionError("no witness exists for an extremal verdict");
  WitnessPair pair;
  try {
    switch (*verdict.condition) {
      case Condition::IsolatedSubset:
        pair = decompose_isolated(a, x, std::get<IsolatedSubsetEvidence>(verdict.evidence).subset);
        break;
      case Condition::DisjointCycles: {
        const auto& e = std::get<DisjointCyclesEvidence>(verdict.evidence);
        pair = decompose_disjoint_cycles(a, x, e.first, e.second);
        break;
      }
      case Condition::TwoVariableNodes: {
        const auto& e = std::get<VariableNodesEvidence>(verdict.evidence);
        pair = decompose_two_variables(a, x, e.first, e.second);
        break;
      }
    }
  } catch (const InputError& e) {
    throw WitnessError(std::string("evidence does not fit the instance: ") + e.what());
  } catch (const std::bad_variant_access&) {
    throw WitnessError("verdict evidence does not match its condition");
  }
  if (!verify_decomposition(a, x, pair)) throw WitnessError("constructed decomposition failed verification");
  return pair;
}

}  // namespace maxplus
