#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "maxplus/errors.hpp"

namespace maxplus {

using Rational = mpq_class;
using Integer = mpz_class;

/// An element of the max-plus semiring: an exact rational or BOTTOM (−∞).
///
/// BOTTOM is a separate state, never a sentinel number, so no arithmetic is
/// ever performed on it. A default-constructed scalar is BOTTOM.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : value_(Rational(v)) {}
  explicit Scalar(Rational v) : value_(std::move(v)) { value_->canonicalize(); }

  bool is_bottom() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  /// The finite value. Throws PreconditionError on BOTTOM.
  const Rational& value() const {
    if (!value_) throw PreconditionError("value() of BOTTOM");
    return *value_;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_bottom() || b.is_bottom()) return a.is_bottom() == b.is_bottom();
    return *a.value_ == *b.value_;
  }

  // BOTTOM is the least element.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (a.is_bottom()) return b.is_bottom() ? std::strong_ordering::equal : std::strong_ordering::less;
    if (b.is_bottom()) return std::strong_ordering::greater;
    const int c = cmp(*a.value_, *b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::string to_string() const { return value_ ? value_->get_str() : std::string("-inf"); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  std::optional<Rational> value_;
};

inline const Scalar bottom{};

/// a ⊕ b = max(a, b).
inline Scalar oplus(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

/// a ⊗ b = a + b, absorbing on BOTTOM.
inline Scalar otimes(const Scalar& a, const Scalar& b) {
  if (a.is_bottom() || b.is_bottom()) return bottom;
  return Scalar(Rational(a.value() + b.value()));
}

}  // namespace maxplus
