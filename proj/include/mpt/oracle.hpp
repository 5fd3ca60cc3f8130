#pragma once

#include <cstdint>
#include <optional>

#include "mpt/bounds.hpp"
#include "mpt/critical.hpp"
#include "mpt/matrix.hpp"

namespace mpt {

struct OracleOptions {
  /// Scan horizon override; a value below the proven horizon marks the result unverified.
  std::optional<std::int64_t> horizon;
  /// Period used is period_multiplier * gamma(A).
  std::int64_t period_multiplier = 1;
};

/// Measured transient of a sequence f with f(n + p) = f(n) + p * lambda for n >= transient.
struct TransientMeasurement {
  std::int64_t transient = 0;
  std::int64_t period = 1;
  ExtendedRational ratio;
  /// Proven bound the scan horizon was derived from (floor of the best bound).
  std::int64_t proven_bound = 0;
  std::int64_t scan_horizon = 0;
  /// Last index violating the periodicity equation, if any.
  std::optional<std::int64_t> witness;
  /// Further periods checked past the transient without a violation.
  std::int64_t confirmed_steps = 0;
  /// False when a user horizon below the proven one was used.
  bool verified = true;
  /// True when no index inside the horizon satisfied the equation.
  bool horizon_exhausted = false;
};

/// Transient of x(n) = A^{(x)n} (x) v. Requires irreducible A.
///
/// Since A (x) (x + c) = A (x) x + c, once x(m + p) = x(m) + p lambda holds it
/// holds for every n >= m, so the first index satisfying the equation is the
/// transient and the scan stops there; 3p further indices are then confirmed.
TransientMeasurement system_transient(const MaxPlusMatrix& a, const MaxPlusVector& v, const OracleOptions& options = {});
TransientMeasurement system_transient(const MaxPlusMatrix& a, const CriticalAnalysis& params, const MaxPlusVector& v,
                                      const OracleOptions& options = {});

/// Transient of the power sequence A^{(x)n} (entrywise, -inf = -inf + c).
TransientMeasurement matrix_transient(const MaxPlusMatrix& a, const OracleOptions& options = {});
TransientMeasurement matrix_transient(const MaxPlusMatrix& a, const CriticalAnalysis& params,
                                      const OracleOptions& options = {});

/// Transient with period m * gamma equals the transient with period gamma.
bool minimal_transient_invariance(const MaxPlusMatrix& a, const MaxPlusVector& v, std::int64_t multiplier);

/// mu over a window that provably attains the supremum: [B1, max(B1, n_A) + gamma - 1].
Rational mu_supremum(const MaxPlusMatrix& a);

}  // namespace mpt
