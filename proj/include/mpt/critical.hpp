#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mpt/graph.hpp"
#include "mpt/matrix.hpp"

namespace mpt {

/// lambda(A), the maximum mean weight of a nonempty closed walk, via Karp's
/// recurrence on each strongly connected component. -inf when G(A) is acyclic.
ExtendedRational max_cycle_mean(const MaxPlusMatrix& a);

/// All-pairs maximum walk weights including the empty walk on the diagonal.
/// Requires that G(A) has no cycle of positive weight (throws InputError).
MaxPlusMatrix max_walk_weights(const MaxPlusMatrix& a);

struct CriticalSubgraph {
  ExtendedRational lambda;
  std::vector<std::size_t> nodes;
  std::vector<Edge> edges;
  /// Strongly connected components of G_c, each containing a critical cycle.
  std::vector<std::vector<std::size_t>> components;
  /// G_c on all N nodes (non-critical nodes isolated).
  Digraph graph;
};

/// Edge (i,j) is critical iff it closes a cycle of mean lambda, i.e.
/// (A-lambda)_{i,j} + D_{j,i} = 0 with D the max walk weights of A-lambda.
CriticalSubgraph critical_subgraph(const MaxPlusMatrix& a);

struct CriticalComponent {
  std::vector<std::size_t> nodes;
  std::int64_t girth = 0;
  std::int64_t cyclicity = 0;
  std::int64_t exploration_penalty = 0;
};

/// Every structural and weight parameter the transience bounds consume.
struct CriticalAnalysis {
  std::int64_t node_count = 0;
  ExtendedRational lambda;
  std::vector<std::size_t> critical_nodes;
  std::vector<Edge> critical_edges;
  std::vector<CriticalComponent> components;

  std::int64_t g_hat = 0;      // max girth over G_c components
  std::int64_t gamma_hat = 0;  // max cyclicity over G_c components
  std::int64_t ep_hat = 0;     // max exploration penalty over G_c components
  std::int64_t gamma_A = 0;    // cyclicity of G_c (lcm over its components)
  std::int64_t gamma_G = 0;    // cyclicity of G(A)
  /// Exploration penalty of G(A); only defined when G(A) is strongly connected.
  std::optional<std::int64_t> ep_G;
  /// Exploration penalty of every strongly connected component of G(A) that has a cycle.
  std::vector<std::pair<std::vector<std::size_t>, std::int64_t>> ep_per_component;

  ExtendedRational lambda_nc;  // -inf without a cycle through non-critical nodes only
  ExtendedRational delta;
  ExtendedRational Delta;
  ExtendedRational Delta_nc;  // -inf without edges between non-critical nodes
  ExtendedRational norm_A;
  std::int64_t n_nc = 0;
  bool irreducible = false;
};

/// Requires G(A) to contain a cycle (throws PreconditionError otherwise).
CriticalAnalysis analyze_critical(const MaxPlusMatrix& a);

}  // namespace mpt
