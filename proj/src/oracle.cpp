#include "mpt/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "mpt/errors.hpp"

namespace mpt {

namespace {

// Scans a sequence produced by `advance` (state n -> state n+1) for the first
// index m with state(m + p) == state(m) + p*lambda.
template <typename State, typename Advance>
TransientMeasurement scan(State initial, Advance advance, std::int64_t period, const Rational& lambda,
                          std::int64_t proven_bound, const OracleOptions& options) {
  TransientMeasurement m;
  m.period = period;
  m.ratio = ExtendedRational(lambda);
  m.proven_bound = proven_bound;
  const std::int64_t proven_horizon = proven_bound + period;
  m.scan_horizon = options.horizon.value_or(proven_horizon);
  m.verified = m.scan_horizon >= proven_horizon;

  const Rational shift = lambda * Rational(period);
  std::deque<State> window{std::move(initial)};
  for (std::int64_t k = 0; k < period; ++k) window.push_back(advance(window.back()));

  std::int64_t n = 0;
  for (;; ++n) {
    if (n + period > m.scan_horizon) {
      m.horizon_exhausted = true;
      m.transient = n;
      if (n > 0) m.witness = n - 1;
      if (m.verified) {
        throw InternalError("no periodic index within the proven horizon " + std::to_string(m.scan_horizon));
      }
      return m;
    }
    if (equals_shifted(window.back(), window.front(), shift)) break;
    window.pop_front();
    window.push_back(advance(window.back()));
  }
  m.transient = n;
  if (n > 0) m.witness = n - 1;

  for (std::int64_t k = 0; k < 3 * period; ++k) {
    window.pop_front();
    window.push_back(advance(window.back()));
    if (!equals_shifted(window.back(), window.front(), shift)) {
      throw InternalError("periodicity broke after index " + std::to_string(n));
    }
  }
  m.confirmed_steps = 3 * period;
  return m;
}

void require_irreducible(const CriticalAnalysis& params) {
  if (!params.irreducible) throw PreconditionError("matrix is not irreducible (G(A) is not strongly connected)");
}

void require_multiplier(const OracleOptions& options) {
  if (options.period_multiplier < 1) throw InputError("period multiplier must be positive");
}

}  // namespace

TransientMeasurement system_transient(const MaxPlusMatrix& a, const MaxPlusVector& v, const OracleOptions& options) {
  return system_transient(a, analyze_critical(a), v, options);
}

TransientMeasurement system_transient(const MaxPlusMatrix& a, const CriticalAnalysis& params, const MaxPlusVector& v,
                                      const OracleOptions& options) {
  require_irreducible(params);
  require_multiplier(options);
  if (v.size() != a.size()) throw InputError("vector dimension mismatch");
  bool any_finite = false;
  for (const auto& x : v.entries()) any_finite = any_finite || x.is_finite();
  if (!any_finite) throw InputError("initial vector is entirely -inf");

  // n_{A,v} <= n_A, so the matrix bound covers vectors with -inf entries.
  const std::int64_t proven =
      v.all_finite() ? system_bounds(params, v).integer_bound : matrix_bounds(params).integer_bound;
  const std::int64_t period = params.gamma_A * options.period_multiplier;
  return scan(v, [&a](const MaxPlusVector& x) { return mat_vec(a, x); }, period, params.lambda.value(), proven,
              options);
}

TransientMeasurement matrix_transient(const MaxPlusMatrix& a, const OracleOptions& options) {
  return matrix_transient(a, analyze_critical(a), options);
}

TransientMeasurement matrix_transient(const MaxPlusMatrix& a, const CriticalAnalysis& params,
                                      const OracleOptions& options) {
  require_irreducible(params);
  require_multiplier(options);
  const std::int64_t proven = matrix_bounds(params).integer_bound;
  const std::int64_t period = params.gamma_A * options.period_multiplier;
  return scan(MaxPlusMatrix::identity(a.size()), [&a](const MaxPlusMatrix& p) { return mat_mul(a, p); }, period,
              params.lambda.value(), proven, options);
}

bool minimal_transient_invariance(const MaxPlusMatrix& a, const MaxPlusVector& v, std::int64_t multiplier) {
  if (multiplier < 2) throw InputError("minimal_transient_invariance: multiplier must be at least 2");
  const CriticalAnalysis params = analyze_critical(a);
  OracleOptions multiple;
  multiple.period_multiplier = multiplier;
  return system_transient(a, params, v).transient == system_transient(a, params, v, multiple).transient;
}

Rational mu_supremum(const MaxPlusMatrix& a) {
  const CriticalAnalysis params = analyze_critical(a);
  const MatrixBoundReport bounds = matrix_bounds(params);
  const std::int64_t n_a = matrix_transient(a, params).transient;
  return mu_empirical(a, std::max(bounds.b_one, n_a) + params.gamma_A - 1);
}

}  // namespace mpt
