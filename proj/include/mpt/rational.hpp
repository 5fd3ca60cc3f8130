#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace mpt {

using Rational = mpq_class;

/// Scalar of the max-plus semiring: an exact rational or the absorbing -inf.
///
/// Default construction yields -inf, the semiring zero, so freshly sized
/// matrices and vectors start out empty of walks.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(long value) : value_(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  ExtendedRational(const Rational& value) : value_(value) {  // NOLINT(google-explicit-constructor)
    value_->canonicalize();
  }
  ExtendedRational(long num, long den);

  static ExtendedRational neg_inf() { return {}; }

  /// Accepts `[+-]int`, `[+-]p/q` and `-inf` (case-insensitive).
  static ExtendedRational parse(std::string_view token);
  static std::optional<ExtendedRational> try_parse(std::string_view token);

  bool is_neg_inf() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  /// Finite value; throws InputError on -inf.
  const Rational& value() const;

  /// "p/q", "p" for integers, or "-inf".
  std::string to_string() const;

  ExtendedRational& operator+=(const ExtendedRational& rhs);
  ExtendedRational& operator-=(const Rational& rhs);

  friend ExtendedRational operator+(ExtendedRational lhs, const ExtendedRational& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ExtendedRational operator-(ExtendedRational lhs, const Rational& rhs) {
    lhs -= rhs;
    return lhs;
  }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return a.is_neg_inf() == b.is_neg_inf();
    return *a.value_ == *b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

 private:
  std::optional<Rational> value_;
};

/// Semiring addition.
inline const ExtendedRational& max(const ExtendedRational& a, const ExtendedRational& b) {
  return (a < b) ? b : a;
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& x);

std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view token);

/// Exact floor / ceiling of a rational as a 64-bit integer.
std::int64_t floor_to_int(const Rational& q);
std::int64_t ceil_to_int(const Rational& q);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace mpt
