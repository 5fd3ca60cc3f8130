#include "mpt/bounds.hpp"

#include <algorithm>

#include "mpt/errors.hpp"

namespace mpt {

namespace {

void require_irreducible(const CriticalAnalysis& params) {
  if (!params.irreducible) throw PreconditionError("matrix is not irreducible (G(A) is not strongly connected)");
}

Rational finite_or_throw(const ExtendedRational& x, const char* what) {
  if (x.is_neg_inf()) throw InputError(std::string(what) + " is -inf");
  return x.value();
}

Rational max3(const Rational& a, const Rational& b, const Rational& c) { return std::max({a, b, c}); }

}  // namespace

Rational gap_fraction(const CriticalAnalysis& params, const Rational& numerator) {
  if (params.lambda_nc.is_neg_inf()) return Rational(0);
  const Rational gap = params.lambda.value() - params.lambda_nc.value();
  if (gap <= 0) throw InternalError("lambda_nc >= lambda: critical analysis is inconsistent");
  Rational q = numerator / gap;
  q.canonicalize();
  return q;
}

namespace {

// (max{Delta_nc, lambda} - delta)(N-1). A walk W3 among non-critical nodes of
// length at most N-1 has normalized weight at most max{Delta_nc - lambda, 0}(N-1),
// so Delta_nc must not drop below lambda here. Only consulted when lambda_nc is
// finite, which implies Delta_nc finite.
Rational non_critical_spread(const CriticalAnalysis& params, bool clamp = true) {
  if (params.Delta_nc.is_neg_inf()) return Rational(0);
  Rational top = params.Delta_nc.value();
  if (clamp) top = std::max(top, params.lambda.value());
  return (top - params.delta.value()) * Rational(params.node_count - 1);
}

Rational repetitive_term(const CriticalAnalysis& p) {
  return Rational((p.g_hat - 1) + 2 * p.g_hat * (p.node_count - 1));
}

Rational explorative_term(const CriticalAnalysis& p) {
  return Rational((p.gamma_hat - 1) + 2 * p.gamma_hat * (p.node_count - 1) + p.ep_hat);
}

}  // namespace

Rational critical_bound(const CriticalAnalysis& params, const Rational& v_norm) {
  const Rational fraction = gap_fraction(params, v_norm + non_critical_spread(params));
  return std::max(Rational(params.node_count), fraction);
}

Rational critical_bound_unclamped(const CriticalAnalysis& params, const Rational& v_norm) {
  const Rational fraction = gap_fraction(params, v_norm + non_critical_spread(params, false));
  return std::max(Rational(params.node_count), fraction);
}

std::int64_t critical_threshold(const CriticalAnalysis& params, const Rational& v_norm) {
  if (params.lambda_nc.is_neg_inf()) return params.node_count;
  const Rational fraction = gap_fraction(params, v_norm + non_critical_spread(params));
  // With Delta_nc > lambda the walk-length estimate is strict; otherwise equality
  // can occur and the threshold moves one past floor.
  const bool strict = params.Delta_nc > params.lambda;
  const std::int64_t t = strict ? ceil_to_int(fraction) : floor_to_int(fraction) + 1;
  return std::max(params.node_count, t);
}

Rational repetitive_bound(const CriticalAnalysis& params, const Rational& v_norm) {
  return std::max(critical_bound(params, v_norm), repetitive_term(params));
}

Rational explorative_bound(const CriticalAnalysis& params, const Rational& v_norm) {
  return std::max(critical_bound(params, v_norm), explorative_term(params));
}

SystemBoundReport system_bounds(const MaxPlusMatrix& a, const MaxPlusVector& v) {
  return system_bounds(analyze_critical(a), v);
}

SystemBoundReport system_bounds(const CriticalAnalysis& params, const MaxPlusVector& v) {
  require_irreducible(params);
  if (static_cast<std::int64_t>(v.size()) != params.node_count) throw InputError("vector dimension mismatch");
  SystemBoundReport r;
  r.vector_norm = finite_or_throw(vector_norm(v), "||v|| (v has a -inf entry)");
  r.critical_bound = critical_bound(params, r.vector_norm);
  r.critical_bound_unclamped = critical_bound_unclamped(params, r.vector_norm);
  r.repetitive_term = repetitive_term(params);
  r.explorative_term = explorative_term(params);
  r.repetitive = std::max(r.critical_bound, r.repetitive_term);
  r.explorative = std::max(r.critical_bound, r.explorative_term);
  r.best = std::min(r.repetitive, r.explorative);
  const std::int64_t threshold = critical_threshold(params, r.vector_norm);
  r.integer_bound = std::min(std::max(threshold, floor_to_int(r.repetitive_term)),
                             std::max(threshold, floor_to_int(r.explorative_term)));
  r.params = params;
  return r;
}

MatrixBoundReport matrix_bounds(const MaxPlusMatrix& a) { return matrix_bounds(analyze_critical(a)); }

MatrixBoundReport matrix_bounds(const CriticalAnalysis& params) {
  require_irreducible(params);
  MatrixBoundReport r;
  const std::int64_t n = params.node_count;
  r.b_one = 2 * (n - 1) + params.ep_hat + (*params.ep_G + params.gamma_hat - 1);
  r.mu_upper = params.norm_A.value() * Rational(r.b_one);
  r.critical_term = gap_fraction(params, r.mu_upper + non_critical_spread(params));
  const Rational b_one(r.b_one);
  r.repetitive_matrix = max3(b_one, r.critical_term, repetitive_term(params));
  r.explorative_matrix = max3(b_one, r.critical_term, explorative_term(params));
  r.best = std::min(r.repetitive_matrix, r.explorative_matrix);
  const std::int64_t threshold = std::max(r.b_one, critical_threshold(params, r.mu_upper));
  r.integer_bound = std::min(std::max(threshold, floor_to_int(repetitive_term(params))),
                             std::max(threshold, floor_to_int(explorative_term(params))));
  r.params = params;
  return r;
}

std::pair<Rational, Rational> integer_gap_estimate(std::int64_t node_count, std::int64_t n_nc) {
  if (n_nc <= 0 || n_nc >= node_count) throw InputError("integer_gap_estimate: need 0 < N_nc < N");
  Rational quarter(node_count * node_count, 4);
  quarter.canonicalize();
  return {Rational((node_count - n_nc) * n_nc), quarter};
}

Rational power_spread(const MaxPlusMatrix& power) {
  Rational spread(0);
  for (std::size_t i = 0; i < power.size(); ++i) {
    ExtendedRational hi, lo;
    for (std::size_t j = 0; j < power.size(); ++j) {
      const auto& x = power(i, j);
      if (x.is_neg_inf()) continue;
      hi = max(hi, x);
      if (lo.is_neg_inf() || x < lo) lo = x;
    }
    if (hi.is_finite()) spread = std::max(spread, Rational(hi.value() - lo.value()));
  }
  return spread;
}

Rational mu_empirical(const MaxPlusMatrix& a, std::int64_t horizon) {
  const MatrixBoundReport bounds = matrix_bounds(a);
  if (horizon < bounds.b_one) throw InputError("mu_empirical: horizon is below B1");
  MaxPlusMatrix power = mat_power(a, bounds.b_one);
  Rational mu = power_spread(power);
  for (std::int64_t n = bounds.b_one + 1; n <= horizon; ++n) {
    power = mat_mul(a, power);
    mu = std::max(mu, power_spread(power));
  }
  return mu;
}

}  // namespace mpt
