#include "mpt/synchronizer.hpp"

#include "mpt/errors.hpp"
#include "mpt/families.hpp"
#include "mpt/graph.hpp"

namespace mpt {

SynchronizerSystem synchronizer_system(const MaxPlusMatrix& delays, const std::optional<MaxPlusVector>& t0) {
  const std::size_t n = delays.size();
  if (!is_irreducible(delays)) throw InputError("delay graph is not strongly connected");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ExtendedRational& d = delays(i, j);
      if (d.is_finite() && (d.value().get_den() != 1 || d.value() <= 0))
        throw InputError("delay " + d.to_string() + " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") is not a positive integer");
    }
  MaxPlusVector v = t0.value_or(MaxPlusVector(n, ExtendedRational(0L)));
  if (v.size() != n) throw InputError("initial vector has dimension " + std::to_string(v.size()) + ", expected " + std::to_string(n));
  if (!v.all_finite()) throw InputError("initial round-start times must be finite");
  return {delays, std::move(v)};
}

SynchronizerReport analyze_synchronizer(const MaxPlusMatrix& delays, const std::optional<MaxPlusVector>& t0,
                                        bool run_oracle, const OracleOptions& options) {
  SynchronizerReport r;
  r.system = synchronizer_system(delays, t0);
  const CriticalAnalysis params = analyze_critical(r.system.a);
  r.bounds = system_bounds(params, r.system.v);
  if (run_oracle) r.measurement = system_transient(r.system.a, params, r.system.v, options);
  r.cherry = recognize_cherry(delays);
  if (r.cherry) r.er_bound = er_bound(r.cherry->first, r.cherry->second);
  return r;
}

}  // namespace mpt
