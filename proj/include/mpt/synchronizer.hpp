#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "mpt/bounds.hpp"
#include "mpt/matrix.hpp"
#include "mpt/oracle.hpp"

namespace mpt {

/// Round-start times t(n) = A^{(x)n} (x) t(0) of a synchronizer on a network
/// whose delay matrix is A (A_{i,j} = delay of the link j -> i as seen by i).
struct SynchronizerSystem {
  MaxPlusMatrix a;
  MaxPlusVector v;
};

/// Requires a strongly connected delay graph with positive integer delays
/// (InputError otherwise). t0 defaults to the all-zero vector.
SynchronizerSystem synchronizer_system(const MaxPlusMatrix& delays, const std::optional<MaxPlusVector>& t0 = std::nullopt);

struct SynchronizerReport {
  SynchronizerSystem system;
  SystemBoundReport bounds;
  std::optional<TransientMeasurement> measurement;
  /// (l, c) and B_ER when the delay matrix is a cherry graph.
  std::optional<std::pair<std::int64_t, std::int64_t>> cherry;
  std::optional<std::int64_t> er_bound;
};

SynchronizerReport analyze_synchronizer(const MaxPlusMatrix& delays, const std::optional<MaxPlusVector>& t0,
                                        bool run_oracle, const OracleOptions& options = {});

}  // namespace mpt
