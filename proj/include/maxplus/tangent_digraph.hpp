#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "maxplus/core.hpp"

namespace maxplus {

/// Arc (from, to). In a tangent digraph, (j, i) means row i is tight at x
/// and its maximum is attained at column j.
struct Arc {
  Index from;
  Index to;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Tangent digraph D_x on Supp(x).
///
/// Arcs are stored grouped by source with ascending targets, so the arcs
/// leaving j occupy ids [out_begin(j), out_end(j)). Incoming arcs are kept as
/// id lists. Immutable after construction.
class TangentDigraph {
 public:
  TangentDigraph(std::size_t dimension, IndexSet nodes, std::vector<Arc> arcs)
      : dim_(dimension), nodes_(std::move(nodes)), member_(dimension, 0), loop_(dimension, 0) {
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      if (nodes_[k] >= dim_) throw PreconditionError("node index out of range");
      if (k > 0 && nodes_[k] <= nodes_[k - 1]) throw PreconditionError("node set must be sorted and unique");
      member_[nodes_[k]] = 1;
    }
    for (const Arc& a : arcs)
      if (a.from >= dim_ || a.to >= dim_ || !member_[a.from] || !member_[a.to])
        throw PreconditionError("arc endpoint outside the node set");

    // Two stable counting passes: by target, then by source.
    arcs_ = counting_sort(counting_sort(std::move(arcs), &Arc::to), &Arc::from);
    for (std::size_t k = 1; k < arcs_.size(); ++k)
      if (arcs_[k] == arcs_[k - 1]) throw PreconditionError("duplicate arc");

    out_offset_.assign(dim_ + 1, 0);
    in_offset_.assign(dim_ + 1, 0);
    for (const Arc& a : arcs_) {
      ++out_offset_[a.from + 1];
      ++in_offset_[a.to + 1];
      if (a.from == a.to) loop_[a.from] = 1;
    }
    for (std::size_t v = 0; v < dim_; ++v) {
      out_offset_[v + 1] += out_offset_[v];
      in_offset_[v + 1] += in_offset_[v];
    }
    in_ids_.resize(arcs_.size());
    std::vector<std::size_t> fill(in_offset_.begin(), in_offset_.end() - 1);
    for (std::size_t id = 0; id < arcs_.size(); ++id) in_ids_[fill[arcs_[id].to]++] = id;
  }

  /// D_x for x ∈ 𝒳. One pass over A.
  static TangentDigraph build(const Matrix& a, const Vector& x) {
    require_solution(a, x);
    const std::size_t n = a.dim();
    std::vector<Arc> arcs;
    std::vector<Rational> sums(n);
    std::vector<char> finite(n);
    for (Index i = 0; i < n; ++i) {
      if (x[i].is_bottom()) continue;
      const auto row = a.row(i);
      const Rational* best = nullptr;
      for (Index j = 0; j < n; ++j) {
        finite[j] = row[j].is_finite() && x[j].is_finite();
        if (!finite[j]) continue;
        sums[j] = row[j].value() + x[j].value();
        if (best == nullptr || sums[j] > *best) best = &sums[j];
      }
      const Rational& xi = x[i].value();
      if (best == nullptr || *best != xi) continue;  // slack row
      for (Index j = 0; j < n; ++j)
        if (finite[j] && sums[j] == xi) arcs.push_back({j, i});
    }
    return TangentDigraph(n, support(x), std::move(arcs));
  }

  std::size_t dimension() const noexcept { return dim_; }
  const IndexSet& nodes() const noexcept { return nodes_; }
  bool contains(Index v) const noexcept { return v < dim_ && member_[v]; }

  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& arc(std::size_t id) const { return arcs_[id]; }

  std::size_t out_begin(Index v) const { return out_offset_[v]; }
  std::size_t out_end(Index v) const { return out_offset_[v + 1]; }
  std::span<const Arc> out_arcs(Index v) const {
    return {arcs_.data() + out_offset_[v], out_offset_[v + 1] - out_offset_[v]};
  }
  std::span<const std::size_t> in_arc_ids(Index v) const {
    return {in_ids_.data() + in_offset_[v], in_offset_[v + 1] - in_offset_[v]};
  }

  /// Loops count once on each side.
  std::size_t in_degree(Index v) const { return in_offset_[v + 1] - in_offset_[v]; }
  std::size_t out_degree(Index v) const { return out_offset_[v + 1] - out_offset_[v]; }
  bool has_loop(Index v) const { return v < dim_ && loop_[v]; }

  bool has_arc(Index from, Index to) const {
    if (from >= dim_) return false;
    for (const Arc& a : out_arcs(from))
      if (a.to == to) return true;
    return false;
  }

  friend bool operator==(const TangentDigraph& g, const TangentDigraph& h) {
    return g.dim_ == h.dim_ && g.nodes_ == h.nodes_ && g.arcs_ == h.arcs_;
  }

 private:
  template <class Key>
  std::vector<Arc> counting_sort(std::vector<Arc> in, Key key) const {
    std::vector<std::size_t> count(dim_ + 1, 0);
    for (const Arc& a : in) ++count[a.*key + 1];
    for (std::size_t v = 0; v < dim_; ++v) count[v + 1] += count[v];
    std::vector<Arc> out(in.size());
    for (const Arc& a : in) out[count[a.*key]++] = a;
    return out;
  }

  std::size_t dim_;
  IndexSet nodes_;
  std::vector<char> member_;
  std::vector<char> loop_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offset_;
  std::vector<std::size_t> in_offset_;
  std::vector<std::size_t> in_ids_;
};

enum class NodeClass { IVariable, IIVariable, Invariable };

inline std::string_view to_string(NodeClass c) {
  switch (c) {
    case NodeClass::IVariable: return "I-variable";
    case NodeClass::IIVariable: return "II-variable";
    case NodeClass::Invariable: return "invariable";
  }
  return "?";
}

/// Invariable if some non-loop arc (i, j) ends at a node whose only incoming
/// arc it is. Otherwise I-variable when i has no non-loop outgoing arc at all,
/// II-variable when every such arc ends at a node with another incoming arc.
inline NodeClass classify_node(const TangentDigraph& g, Index i) {
  if (!g.contains(i)) throw PreconditionError("node " + std::to_string(i + 1) + " is not in the digraph");
  bool any_out = false;
  for (const Arc& a : g.out_arcs(i)) {
    if (a.to == i) continue;
    any_out = true;
    if (g.in_degree(a.to) == 1) return NodeClass::Invariable;
  }
  return any_out ? NodeClass::IIVariable : NodeClass::IVariable;
}

inline bool is_variable(const TangentDigraph& g, Index i) { return classify_node(g, i) != NodeClass::Invariable; }

inline IndexSet variable_nodes(const TangentDigraph& g) {
  IndexSet vars;
  for (Index v : g.nodes())
    if (is_variable(g, v)) vars.push_back(v);
  return vars;
}

/// Components of the underlying undirected graph, each sorted, ordered by
/// their smallest node.
inline std::vector<IndexSet> weak_components(const TangentDigraph& g) {
  std::vector<long> comp(g.dimension(), -1);
  std::vector<IndexSet> out;
  std::vector<Index> stack;
  for (Index start : g.nodes()) {
    if (comp[start] >= 0) continue;
    const long id = static_cast<long>(out.size());
    out.emplace_back();
    comp[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const Index v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      auto visit = [&](Index w) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      };
      for (const Arc& a : g.out_arcs(v)) visit(a.to);
      for (std::size_t id_in : g.in_arc_ids(v)) visit(g.arc(id_in).from);
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline bool is_weakly_connected(const TangentDigraph& g) {
  if (g.nodes().empty()) throw PreconditionError("empty digraph");
  return weak_components(g).size() == 1;
}

/// No arc of g joins W to its complement in either direction.
inline bool is_isolated_set(const TangentDigraph& g, const IndexSet& w) {
  std::vector<char> in_w(g.dimension(), 0);
  for (Index v : w) {
    if (!g.contains(v)) return false;
    in_w[v] = 1;
  }
  for (const Arc& a : g.arcs())
    if (in_w[a.from] != in_w[a.to]) return false;
  return true;
}

inline TangentDigraph reverse(const TangentDigraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (const Arc& a : g.arcs()) arcs.push_back({a.to, a.from});
  return TangentDigraph(g.dimension(), g.nodes(), std::move(arcs));
}

/// Graphviz text; nodes are labelled with 1-based index and class.
inline std::string to_dot(const TangentDigraph& g, std::string_view name = "tangent") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (Index v : g.nodes()) os << "  " << v + 1 << " [label=\"" << v + 1 << " [" << to_string(classify_node(g, v)) << "]\"];\n";
  for (const Arc& a : g.arcs()) os << "  " << a.from + 1 << " -> " << a.to + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace maxplus
