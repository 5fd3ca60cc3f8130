#pragma once

#include <cstdint>

#include "mpt/graph.hpp"

namespace mpt {

/// Known upper bounds on the exploration penalty of a strongly connected graph.
struct EpUpperBounds {
  /// min{N + (N-2)g, 2gN/gamma - g/gamma - 2g + gamma}
  Rational girth_bound;
  std::int64_t girth_bound_ceil = 0;
  /// N^2 - 2N + 2; only a bound for primitive graphs.
  std::int64_t wielandt = 0;
  /// gamma * W(floor(N/gamma)) + (N mod gamma)
  std::int64_t schwarz = 0;
};

/// W(m) = m^2 - 2m + 2.
std::int64_t wielandt_number(std::int64_t m);

EpUpperBounds ep_upper_bounds(std::int64_t node_count, std::int64_t girth, std::int64_t cyclicity);

/// Smallest e such that every node has a closed walk of every length n >= e
/// that is a multiple of the cyclicity. Requires a strongly connected graph.
///
/// Scans Boolean matrix powers at multiples of the cyclicity up to the
/// smaller of the girth and Schwarz bounds plus one cyclicity step.
std::int64_t exploration_penalty(const Digraph& h);

}  // namespace mpt
