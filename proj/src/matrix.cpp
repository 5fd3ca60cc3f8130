#include "mpt/matrix.hpp"

#include <string>

#include "mpt/errors.hpp"

namespace mpt {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
  }
}

}  // namespace

MaxPlusVector MaxPlusVector::unit(std::size_t n, std::size_t j) {
  MaxPlusVector e(n);
  e[j] = 0L;
  return e;
}

MaxPlusVector MaxPlusVector::truncated_unit(std::size_t n, std::size_t j, const Rational& mu) {
  MaxPlusVector e(n, ExtendedRational(Rational(-mu)));
  e[j] = 0L;
  return e;
}

bool MaxPlusVector::all_finite() const {
  for (const auto& x : entries_)
    if (x.is_neg_inf()) return false;
  return true;
}

MaxPlusVector MaxPlusVector::shifted(const Rational& c) const {
  MaxPlusVector out = *this;
  for (auto& x : out.entries_) x += ExtendedRational(c);
  return out;
}

ExtendedRational vector_norm(const MaxPlusVector& v) {
  if (v.size() == 0 || !v.all_finite()) return ExtendedRational::neg_inf();
  Rational lo = v[0].value();
  Rational hi = lo;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const Rational& x = v[i].value();
    if (x < lo) lo = x;
    if (x > hi) hi = x;
  }
  return ExtendedRational(Rational(hi - lo));
}

MaxPlusMatrix::MaxPlusMatrix(std::size_t n) : n_(n), a_(n * n) {
  if (n == 0) throw InputError("matrix dimension must be positive");
}

MaxPlusMatrix MaxPlusMatrix::identity(std::size_t n) {
  MaxPlusMatrix id(n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 0L;
  return id;
}

MaxPlusMatrix MaxPlusMatrix::shifted(const Rational& c) const {
  MaxPlusMatrix out = *this;
  const ExtendedRational shift(c);
  for (auto& x : out.a_) x += shift;
  return out;
}

ExtendedRational MaxPlusMatrix::min_finite() const {
  ExtendedRational best;
  for (const auto& x : a_) {
    if (x.is_finite() && (best.is_neg_inf() || x < best)) best = x;
  }
  return best;
}

ExtendedRational MaxPlusMatrix::max_finite() const {
  ExtendedRational best;
  for (const auto& x : a_) best = max(best, x);
  return best;
}

ExtendedRational MaxPlusMatrix::norm() const {
  const ExtendedRational hi = max_finite();
  if (hi.is_neg_inf()) return hi;
  return hi - min_finite().value();
}

MaxPlusMatrix MaxPlusMatrix::submatrix(const std::vector<std::size_t>& indices) const {
  MaxPlusMatrix out(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t c = 0; c < indices.size(); ++c) out(r, c) = (*this)(indices[r], indices[c]);
  return out;
}

MaxPlusMatrix mat_mul(const MaxPlusMatrix& a, const MaxPlusMatrix& b) {
  require_same_size(a.size(), b.size(), "mat_mul");
  const std::size_t n = a.size();
  MaxPlusMatrix c(n);
  Rational sum;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const ExtendedRational& aik = a(i, k);
      if (aik.is_neg_inf()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const ExtendedRational& bkj = b(k, j);
        if (bkj.is_neg_inf()) continue;
        sum = aik.value() + bkj.value();
        ExtendedRational& cij = c(i, j);
        if (cij.is_neg_inf() || cij.value() < sum) cij = ExtendedRational(sum);
      }
    }
  }
  return c;
}

MaxPlusVector mat_vec(const MaxPlusMatrix& a, const MaxPlusVector& v) {
  require_same_size(a.size(), v.size(), "mat_vec");
  const std::size_t n = a.size();
  MaxPlusVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    ExtendedRational best;
    for (std::size_t j = 0; j < n; ++j) best = max(best, a(i, j) + v[j]);
    out[i] = std::move(best);
  }
  return out;
}

MaxPlusMatrix mat_power(const MaxPlusMatrix& a, std::int64_t n) {
  if (n < 0) throw InputError("negative matrix power");
  MaxPlusMatrix p = MaxPlusMatrix::identity(a.size());
  for (std::int64_t k = 0; k < n; ++k) p = mat_mul(a, p);
  return p;
}

std::vector<MaxPlusMatrix> power_sequence(const MaxPlusMatrix& a, std::int64_t n) {
  if (n < 0) throw InputError("negative matrix power");
  std::vector<MaxPlusMatrix> seq;
  seq.reserve(static_cast<std::size_t>(n) + 1);
  seq.push_back(MaxPlusMatrix::identity(a.size()));
  for (std::int64_t k = 0; k < n; ++k) seq.push_back(mat_mul(a, seq.back()));
  return seq;
}

MaxPlusMatrix normalize(const MaxPlusMatrix& a, const ExtendedRational& lambda) {
  if (lambda.is_neg_inf()) throw InputError("normalize: lambda must be finite");
  return a.shifted(Rational(-lambda.value()));
}

bool equals_shifted(const MaxPlusMatrix& a, const MaxPlusMatrix& b, const Rational& c) {
  if (a.size() != b.size()) return false;
  const ExtendedRational shift(c);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a(i, j) != b(i, j) + shift) return false;
  return true;
}

bool equals_shifted(const MaxPlusVector& a, const MaxPlusVector& b, const Rational& c) {
  if (a.size() != b.size()) return false;
  const ExtendedRational shift(c);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i] + shift) return false;
  return true;
}

namespace {

struct WalkSearch {
  const MaxPlusMatrix& a;
  const MaxPlusVector* v;
  std::optional<std::size_t> target;
  std::uint64_t budget;
  std::uint64_t expanded = 0;
  ExtendedRational best;

  void visit(std::size_t node, std::int64_t remaining, const Rational& weight) {
    if (++expanded > budget) {
      throw ResourceError("walk enumeration budget of " + std::to_string(budget) + " exceeded");
    }
    if (remaining == 0) {
      if (target && *target != node) return;
      ExtendedRational total(weight);
      if (v) total += (*v)[node];
      best = max(best, total);
      return;
    }
    for (std::size_t next = 0; next < a.size(); ++next) {
      const ExtendedRational& w = a(node, next);
      if (w.is_neg_inf()) continue;
      visit(next, remaining - 1, weight + w.value());
    }
  }
};

}  // namespace

ExtendedRational brute_force_walk_max(const MaxPlusMatrix& a, std::int64_t n, std::size_t i,
                                      std::optional<std::size_t> j, const MaxPlusVector* v,
                                      std::uint64_t budget) {
  if (n < 0) throw InputError("negative walk length");
  if (i >= a.size() || (j && *j >= a.size())) throw InputError("node index out of range");
  if (v) require_same_size(a.size(), v->size(), "brute_force_walk_max");
  WalkSearch search{a, v, j, budget, 0, {}};
  search.visit(i, n, Rational(0));
  return search.best;
}

MinPlusMatrix MinPlusMatrix::identity(std::size_t n) {
  MinPlusMatrix id(n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = Rational(0);
  return id;
}

MaxPlusMatrix MinPlusMatrix::negated() const {
  MaxPlusMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (const auto& x = (*this)(i, j)) out(i, j) = ExtendedRational(Rational(-*x));
  return out;
}

MaxPlusVector negate(const MinPlusVector& w) {
  MaxPlusVector out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) out[i] = ExtendedRational(Rational(-*w[i]));
  return out;
}

MinPlusVector negate(const MaxPlusVector& x) {
  MinPlusVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].is_finite()) out[i] = Rational(-x[i].value());
  return out;
}

MinPlusVector min_plus_mat_vec(const MinPlusMatrix& a, const MinPlusVector& w) {
  require_same_size(a.size(), w.size(), "min_plus_mat_vec");
  return negate(mat_vec(a.negated(), negate(w)));
}

}  // namespace mpt
