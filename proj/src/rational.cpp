#include "mpt/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>

#include "mpt/errors.hpp"

namespace mpt {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

std::optional<Rational> try_parse_rational(std::string_view token) {
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num)) return std::nullopt;
  if (slash != std::string_view::npos && !all_digits(den)) return std::nullopt;

  mpz_class n(std::string(num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) return std::nullopt;
  }
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

ExtendedRational::ExtendedRational(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  value_ = Rational(num, den);
  value_->canonicalize();
}

std::optional<ExtendedRational> ExtendedRational::try_parse(std::string_view token) {
  if (iequals(token, "-inf")) return ExtendedRational::neg_inf();
  if (auto q = try_parse_rational(token)) return ExtendedRational(*q);
  return std::nullopt;
}

ExtendedRational ExtendedRational::parse(std::string_view token) {
  if (auto x = try_parse(token)) return *x;
  throw InputError("malformed rational token '" + std::string(token) + "'");
}

const Rational& ExtendedRational::value() const {
  if (!value_) throw InputError("value of -inf requested");
  return *value_;
}

std::string ExtendedRational::to_string() const {
  return value_ ? rational_to_string(*value_) : std::string("-inf");
}

ExtendedRational& ExtendedRational::operator+=(const ExtendedRational& rhs) {
  if (!value_) return *this;
  if (!rhs.value_) {
    value_.reset();
    return *this;
  }
  *value_ += *rhs.value_;
  return *this;
}

ExtendedRational& ExtendedRational::operator-=(const Rational& rhs) {
  if (value_) *value_ -= rhs;
  return *this;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_neg_inf()) return b.is_neg_inf() ? std::strong_ordering::equal : std::strong_ordering::less;
  if (b.is_neg_inf()) return std::strong_ordering::greater;
  const int c = cmp(*a.value_, *b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& x) { return os << x.to_string(); }

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view token) {
  if (auto q = try_parse_rational(token)) return *q;
  throw InputError("malformed rational token '" + std::string(token) + "'");
}

std::int64_t floor_to_int(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw ResourceError("integer overflow converting " + rational_to_string(q));
  return f.get_si();
}

std::int64_t ceil_to_int(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!c.fits_slong_p()) throw ResourceError("integer overflow converting " + rational_to_string(q));
  return c.get_si();
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::int64_t g = std::gcd(a, b);
  if (a / g > std::numeric_limits<std::int64_t>::max() / b) throw ResourceError("lcm overflow");
  return a / g * b;
}

}  // namespace mpt
