#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpt/bounds.hpp"
#include "mpt/graph.hpp"
#include "mpt/matrix.hpp"
#include "mpt/oracle.hpp"

namespace mpt {

// Full Reversal on an orientation of an undirected graph. Destinations are
// the nodes carrying a self-loop; they are never sinks.

/// InputError on an antiparallel pair, on a graph without edges, or when the
/// graph minus self-loops is not weakly connected.
void validate_reversal_graph(const Digraph& g);

std::vector<std::size_t> destinations(const Digraph& g);
std::vector<std::size_t> sinks(const Digraph& g);

/// True when the underlying undirected graph (self-loops ignored) is a tree.
bool is_tree(const Digraph& g);

/// True when G minus self-loops has no directed cycle.
bool is_acyclic_ignoring_loops(const Digraph& g);

struct ReversalState {
  Digraph graph;
  std::vector<std::int64_t> work;
  std::int64_t step = 0;
};

ReversalState initial_state(const Digraph& g0);

/// Every current sink reverses all of its incoming edges and its work grows
/// by one. Throws InternalError if two sinks are adjacent.
ReversalState full_reversal_step(const ReversalState& s);

/// Min-plus matrix with W(t+1) = A (x)' W(t): for every initial edge u -> v,
/// A_{v,u} = 1 and A_{u,v} = 0; a destination d gets A_{d,d} = 0.
MinPlusMatrix reversal_matrix(const Digraph& g0);

/// Work vectors W(0) .. W(steps) of the greedy simulation.
std::vector<std::vector<std::int64_t>> simulate_work(const Digraph& g0, std::int64_t steps);

/// Work vectors W(0) .. W(steps) from the min-plus iteration.
std::vector<std::vector<std::int64_t>> min_plus_work(const Digraph& g0, std::int64_t steps);

enum class ReversalMode { routing, scheduling };

struct ReversalReport {
  ReversalMode mode = ReversalMode::routing;
  std::int64_t node_count = 0;
  bool tree = false;
  /// -A as a max-plus system <-A, 0>.
  MaxPlusMatrix system_matrix;
  SystemBoundReport bounds;
  TransientMeasurement measurement;
  /// Routing: first t without sinks, from the simulation.
  std::optional<std::int64_t> termination_time;
  std::vector<std::int64_t> final_work;
  /// Applicable closed-form bound: 2(N-1) or (N-1)^2 for routing,
  /// 4N-3 or N^2(N-1)/4 for scheduling.
  Rational applicable_bound;
  std::string applicable_bound_name;
  bool within_bound = false;
  /// Scheduling on trees: lambda(-A) == -1/2.
  std::optional<bool> lambda_check;
  /// Simulation and min-plus iterates agree on [0, checked_steps].
  std::int64_t checked_steps = 0;
  bool simulation_matches = false;
};

/// Routing requires at least one destination and an acyclic G0 minus
/// self-loops; scheduling requires an acyclic G0 without self-loops.
/// Violations raise PreconditionError.
ReversalReport reversal_analysis(const Digraph& g0, ReversalMode mode, const OracleOptions& options = {});

}  // namespace mpt
