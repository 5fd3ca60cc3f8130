#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mpt/graph.hpp"
#include "mpt/matrix.hpp"

namespace mpt {

/// A walk stored as its node sequence v_0 .. v_L; edge t is (v_t, v_{t+1}).
class Walk {
 public:
  /// Empty walk at `start`.
  explicit Walk(std::size_t start) : nodes_{start} {}
  /// Throws InputError unless consecutive edges chain.
  Walk(std::size_t start, const std::vector<Edge>& edges);
  static Walk from_nodes(std::vector<std::size_t> nodes);

  std::size_t start() const noexcept { return nodes_.front(); }
  std::size_t end() const noexcept { return nodes_.back(); }
  std::int64_t length() const noexcept { return static_cast<std::int64_t>(nodes_.size()) - 1; }
  const std::vector<std::size_t>& nodes() const noexcept { return nodes_; }
  std::vector<Edge> edges() const;

  bool visits(std::size_t node) const;
  bool lies_in(const Digraph& g) const;

  /// A(W): sum of edge weights, 0 for the empty walk.
  ExtendedRational weight(const MaxPlusMatrix& a) const;

  friend bool operator==(const Walk&, const Walk&) = default;

 private:
  Walk() = default;
  std::vector<std::size_t> nodes_;
};

/// Closed subwalk occupying edge positions [begin, end) of its host walk.
struct CycleSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::int64_t length() const noexcept { return static_cast<std::int64_t>(end - begin); }
  friend bool operator==(const CycleSpan&, const CycleSpan&) = default;
};

/// Disjoint nonempty cycles of a walk, in walk order.
struct CyclePattern {
  std::vector<CycleSpan> cycles;
  std::int64_t length() const;
  friend bool operator==(const CyclePattern&, const CyclePattern&) = default;
};

/// Throws InputError unless every span is a cycle (closed, no repeated inner
/// node) and the spans are ordered and pairwise disjoint.
void validate_pattern(const Walk& w, const CyclePattern& s);

/// U_0 U_1 ... U_n: splices every cycle of the pattern out of the walk.
Walk remove_cycle_pattern(const Walk& w, const CyclePattern& s);

/// Cycle starting at edge position p, if the walk closes at v_p before
/// repeating any other node.
std::optional<CycleSpan> cycle_at(const Walk& w, std::size_t p);

/// Nonempty pattern of maximal total length with length = 0 (mod d) whose
/// removal keeps node k on the walk; std::nullopt when none exists.
/// Ties resolve toward cycles starting further left.
std::optional<CyclePattern> find_removable_pattern(const Walk& w, std::int64_t d, std::size_t k);

/// (d,k)-reduction: removes maximal removable patterns until none is left.
Walk reduce(const Walk& w, std::int64_t d, std::size_t k);

/// (d-1) + 2d(N-1).
std::int64_t reduction_length_bound(std::int64_t d, std::int64_t node_count);

inline constexpr std::uint64_t kDefaultPatternBudget = 5'000'000;

/// Exhaustive backtracking counterpart of find_removable_pattern, used to
/// certify fixpoints. Throws ResourceError past `budget` search nodes.
bool removable_pattern_exists_exhaustive(const Walk& w, std::int64_t d, std::size_t k,
                                         std::uint64_t budget = kDefaultPatternBudget);

/// Largest number of cycles in a pattern whose removal keeps k, by exhaustive search.
std::int64_t max_k_preserving_pattern_size(const Walk& w, std::size_t k,
                                           std::uint64_t budget = kDefaultPatternBudget);

}  // namespace mpt
