#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mpt/rational.hpp"

namespace mpt {

/// Column vector over the max-plus semiring.
class MaxPlusVector {
 public:
  MaxPlusVector() = default;
  explicit MaxPlusVector(std::size_t n, const ExtendedRational& fill = ExtendedRational::neg_inf())
      : entries_(n, fill) {}
  explicit MaxPlusVector(std::vector<ExtendedRational> entries) : entries_(std::move(entries)) {}

  /// e^j: 0 at j, -inf elsewhere.
  static MaxPlusVector unit(std::size_t n, std::size_t j);
  /// Unit vector with every -inf entry replaced by -mu.
  static MaxPlusVector truncated_unit(std::size_t n, std::size_t j, const Rational& mu);

  std::size_t size() const noexcept { return entries_.size(); }
  ExtendedRational& operator[](std::size_t i) { return entries_[i]; }
  const ExtendedRational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<ExtendedRational>& entries() const noexcept { return entries_; }

  bool all_finite() const;

  /// Adds a finite scalar to every entry (-inf stays -inf).
  MaxPlusVector shifted(const Rational& c) const;

  friend bool operator==(const MaxPlusVector&, const MaxPlusVector&) = default;

 private:
  std::vector<ExtendedRational> entries_;
};

/// ||v|| = max entry - min entry; -inf when v has a -inf entry.
ExtendedRational vector_norm(const MaxPlusVector& v);

/// Square matrix over the max-plus semiring, row-major, 0-based.
class MaxPlusMatrix {
 public:
  MaxPlusMatrix() = default;
  /// n x n matrix of -inf; n must be positive.
  explicit MaxPlusMatrix(std::size_t n);

  static MaxPlusMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  ExtendedRational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const ExtendedRational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  MaxPlusMatrix shifted(const Rational& c) const;

  /// Smallest / largest finite entry, -inf if there is none.
  ExtendedRational min_finite() const;
  ExtendedRational max_finite() const;

  /// ||A|| = Delta - delta over finite entries.
  ExtendedRational norm() const;

  /// Principal submatrix on the given (sorted, distinct) indices.
  MaxPlusMatrix submatrix(const std::vector<std::size_t>& indices) const;

  friend bool operator==(const MaxPlusMatrix&, const MaxPlusMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExtendedRational> a_;
};

MaxPlusMatrix mat_mul(const MaxPlusMatrix& a, const MaxPlusMatrix& b);
MaxPlusVector mat_vec(const MaxPlusMatrix& a, const MaxPlusVector& v);

/// A^{(x)n} by iterated multiplication.
MaxPlusMatrix mat_power(const MaxPlusMatrix& a, std::int64_t n);

/// A^{(x)0}, ..., A^{(x)n}.
std::vector<MaxPlusMatrix> power_sequence(const MaxPlusMatrix& a, std::int64_t n);

/// A - lambda on finite entries; lambda must be finite.
MaxPlusMatrix normalize(const MaxPlusMatrix& a, const ExtendedRational& lambda);

/// Entrywise A == B + c (with -inf == -inf).
bool equals_shifted(const MaxPlusMatrix& a, const MaxPlusMatrix& b, const Rational& c);
bool equals_shifted(const MaxPlusVector& a, const MaxPlusVector& b, const Rational& c);

inline constexpr std::uint64_t kDefaultWalkBudget = 10'000'000;

/// Maximum weight over all walks of length n from i to j (or to any node when
/// j is empty), found by explicit enumeration. When v is given, the weight of
/// a walk ending at h is A(W) + v_h, matching (A^{(x)n} (x) v)_i.
/// Throws ResourceError once more than `budget` partial walks are expanded.
ExtendedRational brute_force_walk_max(const MaxPlusMatrix& a, std::int64_t n, std::size_t i,
                                      std::optional<std::size_t> j,
                                      const MaxPlusVector* v = nullptr,
                                      std::uint64_t budget = kDefaultWalkBudget);

/// Min-plus scalar: exact rational, or +inf when empty.
using MinPlusScalar = std::optional<Rational>;

/// Square matrix over the min-plus semiring; std::nullopt encodes +inf.
class MinPlusMatrix {
 public:
  MinPlusMatrix() = default;
  explicit MinPlusMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static MinPlusMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  MinPlusScalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const MinPlusScalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  /// -A as a max-plus matrix (+inf becomes -inf).
  MaxPlusMatrix negated() const;

  friend bool operator==(const MinPlusMatrix&, const MinPlusMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<MinPlusScalar> a_;
};

using MinPlusVector = std::vector<MinPlusScalar>;

MaxPlusVector negate(const MinPlusVector& w);
MinPlusVector negate(const MaxPlusVector& x);

/// A (x)' w computed as -((-A) (x) (-w)).
MinPlusVector min_plus_mat_vec(const MinPlusMatrix& a, const MinPlusVector& w);

}  // namespace mpt
