#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxplus/errors.hpp"
#include "maxplus/scalar.hpp"

namespace maxplus {

using Index = std::size_t;
/// Sorted, duplicate-free list of 0-based indices.
using IndexSet = std::vector<Index>;

class Vector {
 public:
  Vector() = default;
  /// n BOTTOM entries.
  explicit Vector(std::size_t n) : entries_(n) {}
  Vector(std::initializer_list<Scalar> entries) : entries_(entries) {}
  explicit Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  Scalar& operator[](Index i) { return entries_[i]; }
  const Scalar& operator[](Index i) const { return entries_[i]; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar> entries_;
};

/// Dense square matrix, row-major.
class Matrix {
 public:
  /// n×n, all BOTTOM.
  explicit Matrix(std::size_t n) : n_(n), entries_(n * n) {
    if (n == 0) throw InputError("matrix dimension must be positive");
  }
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) : Matrix(rows.size()) {
    Index i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw DimensionMismatch("matrix rows must all have length " + std::to_string(n_));
      std::copy(row.begin(), row.end(), entries_.begin() + static_cast<std::ptrdiff_t>(i * n_));
      ++i;
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (Index i = 0; i < n; ++i) m(i, i) = Scalar(0L);
    return m;
  }

  std::size_t dim() const noexcept { return n_; }
  Scalar& operator()(Index i, Index j) { return entries_[i * n_ + j]; }
  const Scalar& operator()(Index i, Index j) const { return entries_[i * n_ + j]; }
  std::span<const Scalar> row(Index i) const { return {entries_.data() + i * n_, n_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_;
  std::vector<Scalar> entries_;
};

inline void require_same_dim(const Matrix& a, const Vector& x) {
  if (a.dim() != x.size())
    throw DimensionMismatch("matrix is " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) +
                            " but vector has length " + std::to_string(x.size()));
}

/// Supp(x): indices of finite entries.
inline IndexSet support(const Vector& x) {
  IndexSet s;
  for (Index i = 0; i < x.size(); ++i)
    if (x[i].is_finite()) s.push_back(i);
  return s;
}

/// ‖x‖ = max_i x_i.
inline Scalar norm(const Vector& x) {
  Scalar m = bottom;
  for (const auto& v : x) m = oplus(m, v);
  return m;
}

/// α ⊗ x.
inline Vector shift(const Scalar& alpha, const Vector& x) {
  Vector r(x.size());
  for (Index i = 0; i < x.size(); ++i) r[i] = otimes(alpha, x[i]);
  return r;
}

/// Componentwise max.
inline Vector oplus(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector lengths differ");
  Vector r(x.size());
  for (Index i = 0; i < x.size(); ++i) r[i] = oplus(x[i], y[i]);
  return r;
}

/// Componentwise order x ≤ y.
inline bool leq(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector lengths differ");
  for (Index i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

/// A_i ⊗ x = max_k (a_ik + x_k).
inline Scalar row_product(const Matrix& a, Index i, const Vector& x) {
  Scalar best = bottom;
  Rational sum;
  const auto row = a.row(i);
  for (Index k = 0; k < row.size(); ++k) {
    if (row[k].is_bottom() || x[k].is_bottom()) continue;
    sum = row[k].value() + x[k].value();
    if (best.is_bottom() || sum > best.value()) best = Scalar(sum);
  }
  return best;
}

inline Vector mat_vec(const Matrix& a, const Vector& x) {
  require_same_dim(a, x);
  Vector r(x.size());
  for (Index i = 0; i < a.dim(); ++i) r[i] = row_product(a, i, x);
  return r;
}

/// First row i with (A⊗x)_i < x_i, if any. Does not look at the support.
inline std::optional<Index> first_violated_row(const Matrix& a, const Vector& x) {
  require_same_dim(a, x);
  for (Index i = 0; i < a.dim(); ++i) {
    if (x[i].is_bottom()) continue;
    if (row_product(a, i, x) < x[i]) return i;
  }
  return std::nullopt;
}

/// x ∈ 𝒳: A⊗x ≥ x and x is not all-BOTTOM.
inline bool is_solution(const Matrix& a, const Vector& x) {
  require_same_dim(a, x);
  return !support(x).empty() && !first_violated_row(a, x).has_value();
}

/// Throws NotASolution unless is_solution(a, x).
inline void require_solution(const Matrix& a, const Vector& x) {
  require_same_dim(a, x);
  if (support(x).empty()) throw NotASolution("x is all -inf", x.size());
  if (auto row = first_violated_row(a, x))
    throw NotASolution("x violates A*x >= x at row " + std::to_string(*row + 1), *row);
}

/// (−‖x‖) ⊗ x, so that the largest entry becomes 0.
inline Vector scale(const Vector& x) {
  const Scalar m = norm(x);
  if (m.is_bottom()) throw PreconditionError("cannot scale an all -inf vector");
  return shift(Scalar(Rational(-m.value())), x);
}

/// Rows i ∈ Supp(x) with (A⊗x)_i = x_i.
inline IndexSet tight_rows(const Matrix& a, const Vector& x) {
  require_solution(a, x);
  IndexSet rows;
  for (Index i = 0; i < a.dim(); ++i)
    if (x[i].is_finite() && row_product(a, i, x) == x[i]) rows.push_back(i);
  return rows;
}

}  // namespace maxplus
