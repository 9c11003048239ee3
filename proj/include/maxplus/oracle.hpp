#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "maxplus/core.hpp"
#include "maxplus/witness.hpp"

namespace maxplus {

/// base − eps·ε for a positive infinitesimal ε, or BOTTOM.
///
/// Values are ordered lexicographically: larger base first, then eps = 0 above
/// eps = 1. Adding an integer matrix entry keeps eps; max and min select.
struct PerturbedValue {
  std::optional<Integer> base;
  int eps = 0;

  static PerturbedValue at(Integer b, int e = 0) { return {std::move(b), e}; }
  bool is_bottom() const noexcept { return !base.has_value(); }

  friend bool operator==(const PerturbedValue& p, const PerturbedValue& q) {
    if (p.is_bottom() || q.is_bottom()) return p.is_bottom() == q.is_bottom();
    return *p.base == *q.base && p.eps == q.eps;
  }
  friend std::strong_ordering operator<=>(const PerturbedValue& p, const PerturbedValue& q) {
    if (p.is_bottom()) return q.is_bottom() ? std::strong_ordering::equal : std::strong_ordering::less;
    if (q.is_bottom()) return std::strong_ordering::greater;
    const int c = cmp(*p.base, *q.base);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return q.eps <=> p.eps;
  }
};

/// A and x multiplied by the least common denominator of their finite entries.
struct IntegerInstance {
  Matrix a;
  Vector x;
  Integer factor;
};

inline IntegerInstance to_integer_instance(const Matrix& a, const Vector& x) {
  require_same_dim(a, x);
  Integer lcd = 1;
  auto absorb = [&](const Scalar& s) {
    if (s.is_finite()) mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), s.value().get_den_mpz_t());
  };
  const std::size_t n = a.dim();
  for (Index i = 0; i < n; ++i) {
    absorb(x[i]);
    for (Index j = 0; j < n; ++j) absorb(a(i, j));
  }
  IntegerInstance out{a, x, lcd};
  if (lcd == 1) return out;
  const Rational f(lcd);
  for (Index i = 0; i < n; ++i) {
    if (x[i].is_finite()) out.x[i] = Scalar(Rational(x[i].value() * f));
    for (Index j = 0; j < n; ++j)
      if (a(i, j).is_finite()) out.a(i, j) = Scalar(Rational(a(i, j).value() * f));
  }
  return out;
}

/// Greatest y with y ≤ cap and y ≤ A⊗y, for an integer matrix.
///
/// Iterates y ← cap ∧ (A⊗y) from y = cap. The iterates decrease and stay above
/// the greatest solution, whose finite entries are a cap value plus the weight
/// of a path with fewer than n arcs. Entries that fall below that range are
/// therefore −∞ in the answer and are set to BOTTOM right away.
inline std::vector<PerturbedValue> greatest_capped_solution(const Matrix& a, const std::vector<PerturbedValue>& cap) {
  const std::size_t n = a.dim();
  if (cap.size() != n) throw DimensionMismatch("cap length differs from matrix dimension");
  Integer width = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (a(i, j).is_bottom()) continue;
      const Rational& v = a(i, j).value();
      if (v.get_den() != 1) throw PreconditionError("oracle requires integer matrix entries");
      if (abs(v.get_num()) > width) width = abs(v.get_num());
    }

  std::optional<Integer> lowest;
  for (const auto& c : cap) {
    if (c.is_bottom()) continue;
    if (c.eps < 0 || c.eps > 1) throw PreconditionError("cap perturbation must be 0 or 1");
    if (!lowest || *c.base < *lowest) lowest = *c.base;
  }
  if (!lowest) return cap;
  const Integer floor = *lowest - Integer(static_cast<unsigned long>(n)) * width - 1;

  // Each entry moves through at most 2·(cap − floor + 1) + 1 states.
  Integer budget = 1;
  for (const auto& c : cap)
    if (!c.is_bottom()) budget += 2 * (*c.base - floor + 1) + 1;

  std::vector<PerturbedValue> y = cap, next(n);
  for (Integer round = 0;; ++round) {
    if (round > budget) throw InvariantViolation("capped iteration exceeded its termination bound");
    for (Index i = 0; i < n; ++i) {
      PerturbedValue best;
      for (Index k = 0; k < n; ++k) {
        if (a(i, k).is_bottom() || y[k].is_bottom()) continue;
        PerturbedValue term{Integer(*y[k].base + a(i, k).value().get_num()), y[k].eps};
        if (term > best) best = std::move(term);
      }
      PerturbedValue v = std::min(cap[i], best);
      if (!v.is_bottom() && *v.base < floor) v = PerturbedValue{};
      if (v.eps > 1) throw InvariantViolation("perturbation coefficient exceeded 1");
      next[i] = std::move(v);
    }
    if (next == y) return y;
    std::swap(y, next);
  }
}

struct FixedSetResult {
  bool feasible = false;
  std::optional<Vector> solution;  // instantiated at ε = 1/2, in the original scale
};

namespace detail {

/// Same as is_feasible_fixed_set on already-integer data; `factor` undoes the scaling.
inline FixedSetResult feasible_fixed_set_integer(const Matrix& a, const Vector& x, const std::vector<char>& in_s,
                                                 const Integer& factor) {
  const std::size_t n = a.dim();
  std::vector<PerturbedValue> cap(n);
  for (Index i = 0; i < n; ++i)
    if (x[i].is_finite()) cap[i] = PerturbedValue{x[i].value().get_num(), in_s[i] ? 0 : 1};
  const auto y = greatest_capped_solution(a, cap);
  for (Index i = 0; i < n; ++i)
    if (in_s[i] && !(y[i] == cap[i])) return {};

  Vector concrete(n);
  const Rational half(1, 2);
  for (Index i = 0; i < n; ++i)
    if (!y[i].is_bottom()) concrete[i] = Scalar(Rational((Rational(*y[i].base) - half * y[i].eps) / Rational(factor)));
  return {true, std::move(concrete)};
}

}  // namespace detail

/// Is there x′ ∈ 𝒳 with x′ = x on S and x′ < x on Supp(x) \ S?
inline FixedSetResult is_feasible_fixed_set(const Matrix& a, const Vector& x, const IndexSet& s_in) {
  require_solution(a, x);
  const IndexSet supp = support(x);
  IndexSet s = s_in;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty() || s.size() >= supp.size() || !std::includes(supp.begin(), supp.end(), s.begin(), s.end()))
    throw PreconditionError("S must be a nonempty proper subset of Supp(x)");
  std::vector<char> in_s(a.dim(), 0);
  for (Index i : s) in_s[i] = 1;
  const IntegerInstance inst = to_integer_instance(a, x);
  return detail::feasible_fixed_set_integer(inst.a, inst.x, in_s, inst.factor);
}

struct OracleVerdict {
  bool extremal = true;
  std::optional<WitnessPair> witness;
  std::size_t subsets_examined = 0;  // distinct fixed-set feasibility tests run
};

/// Extremality straight from the definition.
///
/// x = x1 ⊕ x2 with x1, x2 ∈ 𝒳 below x and different from it exactly when two
/// nonempty proper subsets S1, S2 of Supp(x) with S1 ∪ S2 = Supp(x) are both
/// feasible fixed sets: the equality sets of x1, x2 are such a pair, and
/// conversely the two pattern solutions have maximum x. The equality sets may
/// overlap, and feasibility is not monotone in S, so S2 ranges over every
/// superset of Supp(x) \ S1. One of the two sets contains the first support
/// index; S1 is taken to be that one.
inline OracleVerdict extremal_bruteforce(const Matrix& a, const Vector& x) {
  require_solution(a, x);
  const IndexSet supp = support(x);
  if (supp.size() > kBruteForceNodeCap) throw CapacityError("oracle is capped at |Supp(x)| <= 12");
  OracleVerdict out;
  if (supp.size() == 1) return out;

  const IntegerInstance inst = to_integer_instance(a, x);
  const std::uint32_t full = (1u << supp.size()) - 1;
  // Memo over masks of supp positions: 0 unknown, 1 infeasible, 2 feasible.
  std::vector<char> memo(full + 1, 0);
  std::vector<std::optional<Vector>> solution(full + 1);
  std::vector<char> in_s(a.dim());
  auto feasible = [&](std::uint32_t mask) {
    if (!memo[mask]) {
      std::fill(in_s.begin(), in_s.end(), 0);
      for (std::size_t b = 0; b < supp.size(); ++b)
        if ((mask >> b) & 1u) in_s[supp[b]] = 1;
      ++out.subsets_examined;
      auto r = detail::feasible_fixed_set_integer(inst.a, inst.x, in_s, inst.factor);
      memo[mask] = r.feasible ? 2 : 1;
      solution[mask] = std::move(r.solution);
    }
    return memo[mask] == 2;
  };

  for (std::uint32_t s1 = 1; s1 < full; s1 += 2) {
    if (!feasible(s1)) continue;
    const std::uint32_t rest = full & ~s1;
    // Supersets of `rest` other than the full support, smallest first.
    for (std::uint32_t s2 = rest; s2 != full; s2 = ((s2 + 1) | rest) & full) {
      if (!feasible(s2)) continue;
      out.extremal = false;
      out.witness = WitnessPair{*solution[s1], *solution[s2], Provenance::Oracle};
      return out;
    }
  }
  return out;
}

}  // namespace maxplus
