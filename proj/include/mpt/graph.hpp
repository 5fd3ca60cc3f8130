#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mpt/matrix.hpp"

namespace mpt {

using Edge = std::pair<std::size_t, std::size_t>;

/// Directed graph on nodes 0..N-1 without duplicate edges; self-loops allowed.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t node_count) : succ_(node_count) {}

  std::size_t node_count() const noexcept { return succ_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Returns false when the edge was already present.
  bool add_edge(std::size_t from, std::size_t to);
  bool has_edge(std::size_t from, std::size_t to) const;

  /// Successors in increasing order.
  const std::vector<std::size_t>& successors(std::size_t u) const { return succ_[u]; }

  /// All edges, lexicographically ordered.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `nodes`, relabelled 0..k-1 in the given order.
  Digraph induced(const std::vector<std::size_t>& nodes) const;

 private:
  std::vector<std::vector<std::size_t>> succ_;
  std::size_t edge_count_ = 0;
};

/// G(A): edge (i,j) iff A_{i,j} is finite.
Digraph graph_of_matrix(const MaxPlusMatrix& a);

/// Tarjan decomposition; components come out in reverse topological order
/// (sinks of the condensation first), each sorted ascending.
std::vector<std::vector<std::size_t>> strongly_connected_components(const Digraph& g);

bool is_strongly_connected(const Digraph& g);
bool is_irreducible(const MaxPlusMatrix& a);

/// True when the component contains at least one edge (a nonempty cycle).
bool component_has_cycle(const Digraph& g, const std::vector<std::size_t>& component);

/// Length of a shortest nonempty cycle; std::nullopt marks an acyclic graph.
std::optional<std::int64_t> girth(const Digraph& g);

/// gcd of cycle lengths of a strongly connected graph, lcm over the
/// components otherwise. A component without any cycle counts as 1.
std::int64_t cyclicity(const Digraph& g);

/// Cyclicity of one strongly connected component of g.
std::int64_t component_cyclicity(const Digraph& g, const std::vector<std::size_t>& component);

/// Dense Boolean adjacency matrix; used for walk-existence scans.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}

  static BoolMatrix identity(std::size_t n);
  static BoolMatrix adjacency(const Digraph& g);

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value = true) { bits_[i * n_ + j] = value ? 1 : 0; }

  friend BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b);
  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// table[n](i,j) is true iff a walk of length exactly n leads from i to j.
std::vector<BoolMatrix> walk_existence_table(const Digraph& g, std::int64_t n_max);

}  // namespace mpt
