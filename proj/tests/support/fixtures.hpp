#pragma once

// Shared fixtures and independent reference computations for the test suites.
// Nothing here calls into the code paths it is used to check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "maxplus/maxplus.hpp"

namespace fixtures {

using maxplus::Arc;
using maxplus::bottom;
using maxplus::Index;
using maxplus::IndexSet;
using maxplus::Matrix;
using maxplus::Rational;
using maxplus::Scalar;
using maxplus::Vector;

inline const Scalar ninf = bottom;

inline Scalar q(long p, long d) { return Scalar(Rational(p, d)); }

/// The 5×5 matrix of the worked example.
inline Matrix example_matrix() {
  return Matrix{{-5, 0, ninf, ninf, ninf},
                {0, ninf, ninf, ninf, ninf},
                {0, ninf, ninf, ninf, ninf},
                {ninf, ninf, -3, ninf, 0},
                {ninf, ninf, ninf, 0, ninf}};
}
inline Vector example_x1() { return Vector{0, 0, 0, -3, ninf}; }
inline Vector example_x2() { return Vector{0, 0, 0, 0, 0}; }

/// 1-based index lists → 0-based sets / arcs, for writing expectations the way
/// the worked example numbers its nodes.
inline IndexSet nodes1(std::initializer_list<Index> one_based) {
  IndexSet out;
  for (Index v : one_based) out.push_back(v - 1);
  return out;
}
inline std::vector<Arc> arcs1(std::initializer_list<std::pair<Index, Index>> one_based) {
  std::vector<Arc> out;
  for (auto [j, i] : one_based) out.push_back({j - 1, i - 1});
  std::sort(out.begin(), out.end());
  return out;
}

/// Row-by-row max of a_ik + x_k with plain rationals.
inline Vector naive_mat_vec(const Matrix& a, const Vector& x) {
  Vector out(x.size());
  for (Index i = 0; i < a.dim(); ++i) {
    bool any = false;
    Rational best;
    for (Index k = 0; k < a.dim(); ++k) {
      if (a(i, k).is_bottom() || x[k].is_bottom()) continue;
      Rational s = a(i, k).value() + x[k].value();
      if (!any || s > best) best = s;
      any = true;
    }
    if (any) out[i] = Scalar(best);
  }
  return out;
}

/// Arc set of D_x straight from V_x(i) = {j : a_ij + x_j = max_k(a_ik + x_k) = x_i}.
inline std::vector<Arc> arcs_by_definition(const Matrix& a, const Vector& x) {
  const Vector ax = naive_mat_vec(a, x);
  std::vector<Arc> arcs;
  for (Index i = 0; i < a.dim(); ++i) {
    if (x[i].is_bottom() || !(ax[i] == x[i])) continue;
    for (Index j = 0; j < a.dim(); ++j)
      if (a(i, j).is_finite() && x[j].is_finite() && a(i, j).value() + x[j].value() == x[i].value())
        arcs.push_back({j, i});
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

struct Case {
  Matrix a;
  Vector x;
  std::string label;
};

/// Random solution instances with n ∈ [2, 6] and integer entries in [−5, 5].
///
/// Three families: the generator as is; the generator with a narrow [−1, 1]
/// range, which produces many ties and hence dense tangent digraphs; and
/// partial-support variants obtained by dropping coordinates of x while the
/// result stays a solution.
inline std::vector<Case> random_cases(std::size_t per_cell, std::uint64_t salt = 0) {
  std::vector<Case> out;
  const double densities[] = {0.3, 0.6, 1.0};
  std::mt19937_64 drop(12345 + salt);
  for (std::size_t n = 2; n <= 6; ++n)
    for (double d : densities)
      for (std::size_t k = 0; k < per_cell; ++k) {
        const std::uint64_t seed = salt * 1000003 + n * 10007 + static_cast<std::uint64_t>(d * 10) * 101 + k;
        const bool narrow = k % 2 == 1;
        auto inst = maxplus::generate_instance({n, d, narrow ? -1L : -5L, narrow ? 1L : 5L, seed});
        std::string label = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " seed=" + std::to_string(seed);
        out.push_back({inst.a, *inst.x, label});
        Vector partial = *inst.x;
        for (Index i = 0; i < n; ++i)
          if (drop() % 3 == 0) partial[i] = bottom;
        if (partial != *inst.x && maxplus::is_solution(inst.a, partial))
          out.push_back({inst.a, partial, label + " partial"});
      }
  return out;
}

/// Uniformly random digraph on nodes 0..n-1, each ordered pair (loops too)
/// present with probability p.
inline maxplus::TangentDigraph random_digraph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i)
      if (coin(rng)) arcs.push_back({j, i});
  IndexSet nodes(n);
  for (Index v = 0; v < n; ++v) nodes[v] = v;
  return maxplus::TangentDigraph(n, nodes, arcs);
}

/// Variable nodes from the definitions, counting incoming arcs by scanning
/// the whole arc list.
inline IndexSet variable_by_definition(const maxplus::TangentDigraph& g) {
  IndexSet vars;
  for (Index i : g.nodes()) {
    bool invariable = false;
    for (const Arc& a : g.arcs()) {
      if (a.from != i || a.to == i) continue;
      std::size_t incoming = 0;
      for (const Arc& b : g.arcs()) incoming += b.to == a.to;
      if (incoming == 1) invariable = true;
    }
    if (!invariable) vars.push_back(i);
  }
  return vars;
}

/// Weak connectivity by repeated relaxation over the arc list.
inline bool connected_by_relaxation(const maxplus::TangentDigraph& g) {
  const auto& nodes = g.nodes();
  std::vector<char> mark(g.dimension(), 0);
  mark[nodes.front()] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (const Arc& a : g.arcs())
      if (mark[a.from] != mark[a.to]) {
        mark[a.from] = mark[a.to] = 1;
        changed = true;
      }
  }
  for (Index v : nodes)
    if (!mark[v]) return false;
  return true;
}

}  // namespace fixtures
