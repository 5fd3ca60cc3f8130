#pragma once

#include <cstdint>
#include <utility>

#include "mpt/critical.hpp"
#include "mpt/matrix.hpp"

namespace mpt {

/// Upper bounds on the transient of a system <A, v>; all values exact.
struct SystemBoundReport {
  Rational critical_bound;
  /// Same expression with Delta_nc not clamped below by lambda; can undercut the
  /// transient when Delta_nc < lambda.
  Rational critical_bound_unclamped;
  Rational repetitive;
  Rational explorative;
  Rational best;
  /// (ghat-1) + 2 ghat (N-1)
  Rational repetitive_term;
  /// (gammahat-1) + 2 gammahat (N-1) + ephat
  Rational explorative_term;
  Rational vector_norm;
  /// Least integer B such that every length n >= B admits a maximum-weight walk
  /// through a critical node and the pumping term applies. At most floor(best) + 1,
  /// and equal to best when best is an integer reached through a strict estimate.
  std::int64_t integer_bound = 0;
  CriticalAnalysis params;

  std::int64_t best_floor() const { return floor_to_int(best); }
};

/// Upper bounds on the transient of the matrix sequence A^{(x)n}.
struct MatrixBoundReport {
  std::int64_t b_one = 0;  // 2(N-1) + ephat + (ep(G) + gammahat - 1)
  Rational mu_upper;       // ||A|| * B1
  Rational critical_term;  // (||A|| B1 + (max{Delta_nc, lambda} - delta)(N-1)) / (lambda - lambda_nc), 0 if lambda_nc = -inf
  Rational repetitive_matrix;
  Rational explorative_matrix;
  Rational best;
  std::int64_t integer_bound = 0;  // integer counterpart of best, as for systems
  CriticalAnalysis params;

  std::int64_t best_floor() const { return floor_to_int(best); }
};

/// (numerator) / (lambda - lambda_nc), or 0 when lambda_nc = -inf.
Rational gap_fraction(const CriticalAnalysis& params, const Rational& numerator);

/// B_c = max{N, (||v|| + (max{Delta_nc, lambda} - delta)(N-1)) / (lambda - lambda_nc)}.
Rational critical_bound(const CriticalAnalysis& params, const Rational& v_norm);
/// B_c with Delta_nc used as is.
Rational critical_bound_unclamped(const CriticalAnalysis& params, const Rational& v_norm);

/// Least integer T >= N such that every maximum-weight walk of length n >= T
/// visits a critical node.
std::int64_t critical_threshold(const CriticalAnalysis& params, const Rational& v_norm);
/// Least integer T >= N such that every maximum-weight walk of length n >= T
/// visits a critical node.
std::int64_t critical_threshold(const CriticalAnalysis& params, const Rational& v_norm);
Rational repetitive_bound(const CriticalAnalysis& params, const Rational& v_norm);
Rational explorative_bound(const CriticalAnalysis& params, const Rational& v_norm);

/// Throws PreconditionError for reducible A and InputError for a v with -inf entries.
SystemBoundReport system_bounds(const MaxPlusMatrix& a, const MaxPlusVector& v);
SystemBoundReport system_bounds(const CriticalAnalysis& params, const MaxPlusVector& v);

MatrixBoundReport matrix_bounds(const MaxPlusMatrix& a);
MatrixBoundReport matrix_bounds(const CriticalAnalysis& params);

/// ((N - N_nc) * N_nc, N^2 / 4): upper estimates of 1/(lambda - lambda_nc)
/// for integer matrices. Requires 0 < N_nc < N.
std::pair<Rational, Rational> integer_gap_estimate(std::int64_t node_count, std::int64_t n_nc);

/// mu = sup{A^n_{i,h} - A^n_{i,j} : n >= B1, A^n_{i,j} finite}, taken over
/// the window B1 <= n <= horizon. Throws InputError when horizon < B1.
/// mu_supremum (transient oracle) picks a window that attains the supremum.
Rational mu_empirical(const MaxPlusMatrix& a, std::int64_t horizon);

/// Largest A^n_{i,h} - A^n_{i,j} over a single power (finite A^n_{i,j} only).
Rational power_spread(const MaxPlusMatrix& power);

}  // namespace mpt
