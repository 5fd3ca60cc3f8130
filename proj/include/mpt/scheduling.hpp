#pragma once

#include <cstdint>
#include <vector>

#include "mpt/matrix.hpp"
#include "mpt/oracle.hpp"

namespace mpt {

/// Restriction t(src, n) >= t(dst, n - height) + weight.
struct UniformEdge {
  std::size_t src = 0;
  std::size_t dst = 0;
  std::int64_t weight = 1;
  std::int64_t height = 0;
  friend bool operator==(const UniformEdge&, const UniformEdge&) = default;
};

/// Task multigraph of a cyclic scheduling problem.
struct UniformGraph {
  std::size_t tasks = 0;
  std::vector<UniformEdge> edges;
  friend bool operator==(const UniformGraph&, const UniformGraph&) = default;
};

/// Throws InputError on any height outside {0, 1} or a non-positive weight.
void require_binary_heights(const UniformGraph& g);

/// Strongly connected, and the height-0 edges form no closed walk.
bool is_well_formed(const UniformGraph& g);

/// Adds a height-1 copy of every height-0 edge that lacks one.
UniformGraph add_redundant_restrictions(const UniformGraph& g);

struct ScheduleSystem {
  MaxPlusMatrix a;
  MaxPlusVector v;
};

/// A = Z* (x) O and v_i = max_j Z*_{i,j}, where Z / O hold the height-0 /
/// height-1 edge weights. Throws InputError unless binary heights, and
/// PreconditionError when the height-0 subgraph has a cycle.
ScheduleSystem schedule_system(const UniformGraph& g);

/// t(i, n) for n = 0..n_max, indexed [n][i].
using ScheduleTable = std::vector<std::vector<Rational>>;

/// Earliest schedule via t(n) = A^{(x)n} (x) v.
ScheduleTable earliest_schedule(const UniformGraph& g, std::int64_t n_max);

/// Earliest schedule straight from the restrictions: t(i, n) is the least
/// nonnegative value meeting every restriction, resolved in height-0
/// topological order for each n. Independent of the max-plus formulation.
ScheduleTable earliest_schedule_direct(const UniformGraph& g, std::int64_t n_max);

/// True iff every restriction holds on the table (for all n >= height).
bool satisfies_restrictions(const UniformGraph& g, const ScheduleTable& t);

struct ScheduleReport {
  UniformGraph transformed;
  ScheduleSystem system;
  SystemBoundReport bounds;
  TransientMeasurement measurement;
  ScheduleTable table;
};

/// Adds redundant restrictions, builds the (irreducible) system and measures it.
ScheduleReport analyze_schedule(const UniformGraph& g, std::int64_t n_max, const OracleOptions& options = {});

}  // namespace mpt
