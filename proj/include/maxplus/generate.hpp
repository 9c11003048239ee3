#pragma once

#include <cstdint>
#include <random>

#include "maxplus/core.hpp"
#include "maxplus/io.hpp"

namespace maxplus {

struct GenParams {
  std::size_t n = 5;
  double density = 0.5;  // probability that an entry of A is finite
  long lo = -5;
  long hi = 5;
  std::uint64_t seed = 1;
};

namespace detail {

// Distribution objects in <random> are implementation-defined; these are not.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t k) {
  const std::uint64_t threshold = (0 - k) % k;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % k;
  }
}

inline long uniform_in(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace detail

/// Random A and full-support x with x ∈ 𝒳. Entries of A are finite with
/// probability `density`; every row with (A⊗x)_i < x_i is then repaired by
/// setting a_ij = x_i − x_j for one uniformly chosen j. Same params, same bytes.
inline Instance generate_instance(const GenParams& p) {
  if (p.n == 0) throw InputError("n must be at least 1");
  if (!(p.density > 0.0 && p.density <= 1.0)) throw InputError("density must lie in (0, 1]");
  if (p.lo > p.hi) throw InputError("empty entry range");

  std::mt19937_64 rng(p.seed);
  Vector x(p.n);
  for (Index i = 0; i < p.n; ++i) x[i] = Scalar(detail::uniform_in(rng, p.lo, p.hi));
  Matrix a(p.n);
  for (Index i = 0; i < p.n; ++i)
    for (Index j = 0; j < p.n; ++j)
      if (detail::unit(rng) < p.density) a(i, j) = Scalar(detail::uniform_in(rng, p.lo, p.hi));
  for (Index i = 0; i < p.n; ++i) {
    if (row_product(a, i, x) >= x[i]) continue;
    const Index j = detail::uniform_below(rng, p.n);
    a(i, j) = Scalar(Rational(x[i].value() - x[j].value()));
  }
  return {std::move(a), std::move(x)};
}

/// Dense instance whose tangent digraph is a planted extremal o-fountain.
///
/// For a random order p_0, …, p_{n-1} the tight arcs are the path
/// p_0 → p_1 → … → p_{n-1}, the closing arc p_{n-1} → p_0 and one chord
/// p_k → p_0. Every other entry is x_i − x_j − d with d ∈ [1, 100], so the
/// checker runs through the jet scan and the cover on every call.
inline Instance generate_planted_fountain(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw InputError("a planted fountain needs n >= 3");
  std::mt19937_64 rng(seed);
  Vector x(n);
  for (Index i = 0; i < n; ++i) x[i] = Scalar(detail::uniform_in(rng, -100, 100));
  std::vector<Index> p(n);
  for (Index i = 0; i < n; ++i) p[i] = i;
  for (Index i = n - 1; i > 0; --i) std::swap(p[i], p[detail::uniform_below(rng, i + 1)]);

  Matrix a(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      a(i, j) = Scalar(Rational(x[i].value() - x[j].value() - detail::uniform_in(rng, 1, 100)));
  auto tight = [&](Index from, Index to) { a(to, from) = Scalar(Rational(x[to].value() - x[from].value())); };
  for (Index k = 0; k + 1 < n; ++k) tight(p[k], p[k + 1]);
  tight(p[n - 1], p[0]);
  tight(p[1 + detail::uniform_below(rng, n - 2)], p[0]);
  return {std::move(a), std::move(x)};
}

}  // namespace maxplus
