#include "mpt/walk.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "mpt/errors.hpp"

namespace mpt {

Walk::Walk(std::size_t start, const std::vector<Edge>& edges) : nodes_{start} {
  for (const auto& [from, to] : edges) {
    if (from != nodes_.back()) {
      throw InputError("walk edges do not chain at position " + std::to_string(nodes_.size() - 1));
    }
    nodes_.push_back(to);
  }
}

Walk Walk::from_nodes(std::vector<std::size_t> nodes) {
  if (nodes.empty()) throw InputError("walk needs a start node");
  Walk w;
  w.nodes_ = std::move(nodes);
  return w;
}

std::vector<Edge> Walk::edges() const {
  std::vector<Edge> out;
  for (std::size_t t = 0; t + 1 < nodes_.size(); ++t) out.emplace_back(nodes_[t], nodes_[t + 1]);
  return out;
}

bool Walk::visits(std::size_t node) const { return std::find(nodes_.begin(), nodes_.end(), node) != nodes_.end(); }

bool Walk::lies_in(const Digraph& g) const {
  for (std::size_t v : nodes_)
    if (v >= g.node_count()) return false;
  for (std::size_t t = 0; t + 1 < nodes_.size(); ++t)
    if (!g.has_edge(nodes_[t], nodes_[t + 1])) return false;
  return true;
}

ExtendedRational Walk::weight(const MaxPlusMatrix& a) const {
  ExtendedRational total(0L);
  for (std::size_t t = 0; t + 1 < nodes_.size(); ++t) total += a(nodes_[t], nodes_[t + 1]);
  return total;
}

std::int64_t CyclePattern::length() const {
  std::int64_t total = 0;
  for (const auto& c : cycles) total += c.length();
  return total;
}

std::optional<CycleSpan> cycle_at(const Walk& w, std::size_t p) {
  const auto& v = w.nodes();
  std::vector<std::size_t> seen;
  for (std::size_t q = p + 1; q < v.size(); ++q) {
    if (v[q] == v[p]) return CycleSpan{p, q};
    if (std::find(seen.begin(), seen.end(), v[q]) != seen.end()) return std::nullopt;
    seen.push_back(v[q]);
  }
  return std::nullopt;
}

void validate_pattern(const Walk& w, const CyclePattern& s) {
  std::size_t prev_end = 0;
  const auto last = static_cast<std::size_t>(w.length());
  for (const auto& c : s.cycles) {
    if (c.begin >= c.end || c.end > last) throw InputError("cycle span out of range or empty");
    if (c.begin < prev_end) throw InputError("cycle spans overlap or are out of order");
    const auto found = cycle_at(w, c.begin);
    if (!found || found->end != c.end) throw InputError("span is not a cycle of the walk");
    prev_end = c.end;
  }
}

Walk remove_cycle_pattern(const Walk& w, const CyclePattern& s) {
  validate_pattern(w, s);
  const auto& v = w.nodes();
  std::vector<std::size_t> out;
  out.reserve(v.size());
  std::size_t pos = 0;
  for (const auto& c : s.cycles) {
    // Keep nodes up to and including v_begin; v_end repeats it.
    out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(pos),
               v.begin() + static_cast<std::ptrdiff_t>(c.begin));
    pos = c.end;
  }
  out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(pos), v.end());
  return Walk::from_nodes(std::move(out));
}

std::optional<CyclePattern> find_removable_pattern(const Walk& w, std::int64_t d, std::size_t k) {
  if (d < 1) throw InputError("find_removable_pattern: d must be positive");
  if (!w.visits(k)) throw InputError("find_removable_pattern: node k is not on the walk");

  // best[pos][r][kept]: maximal removed length reaching position pos with
  // removed length = r (mod d); kept records whether k survives so far.
  const auto& v = w.nodes();
  const std::size_t positions = v.size();
  const auto residues = static_cast<std::size_t>(d);
  constexpr std::int64_t kUnreached = -1;
  struct Cell {
    std::int64_t value = kUnreached;
    std::size_t prev_pos = 0;
    std::size_t prev_r = 0;
    int prev_kept = 0;
    bool via_cycle = false;
    bool has_prev = false;
  };
  std::vector<Cell> table(positions * residues * 2);
  auto at = [&](std::size_t pos, std::size_t r, int kept) -> Cell& {
    return table[(pos * residues + r) * 2 + static_cast<std::size_t>(kept)];
  };
  auto relax = [&](std::size_t pos, std::size_t r, int kept, std::int64_t value, std::size_t from_pos,
                   std::size_t from_r, int from_kept, bool via_cycle) {
    Cell& c = at(pos, r, kept);
    if (value > c.value) c = Cell{value, from_pos, from_r, from_kept, via_cycle, true};
  };

  at(0, 0, v[0] == k ? 1 : 0).value = 0;
  for (std::size_t pos = 0; pos + 1 < positions; ++pos) {
    const auto cycle = cycle_at(w, pos);
    for (std::size_t r = 0; r < residues; ++r)
      for (int kept = 0; kept < 2; ++kept) {
        const Cell& c = at(pos, r, kept);
        if (c.value == kUnreached) continue;
        if (cycle) {
          const auto len = cycle->length();
          relax(cycle->end, (r + static_cast<std::size_t>(len)) % residues, kept, c.value + len, pos, r, kept, true);
        }
        relax(pos + 1, r, kept | (v[pos + 1] == k ? 1 : 0), c.value, pos, r, kept, false);
      }
  }

  const Cell& final_cell = at(positions - 1, 0, 1);
  if (final_cell.value <= 0) return std::nullopt;

  CyclePattern pattern;
  const Cell* cell = &final_cell;
  std::size_t pos = positions - 1;
  while (cell->has_prev) {
    if (cell->via_cycle) pattern.cycles.push_back(CycleSpan{cell->prev_pos, pos});
    pos = cell->prev_pos;
    cell = &at(cell->prev_pos, cell->prev_r, cell->prev_kept);
  }
  std::reverse(pattern.cycles.begin(), pattern.cycles.end());
  return pattern;
}

Walk reduce(const Walk& w, std::int64_t d, std::size_t k) {
  Walk current = w;
  for (;;) {
    const auto pattern = find_removable_pattern(current, d, k);
    if (!pattern) return current;
    current = remove_cycle_pattern(current, *pattern);
  }
}

std::int64_t reduction_length_bound(std::int64_t d, std::int64_t node_count) {
  return (d - 1) + 2 * d * (node_count - 1);
}

namespace {

// Enumerates cycle patterns left to right; positions of removed nodes are
// tracked so the survival of k can be judged at the leaves.
class PatternSearch {
 public:
  PatternSearch(const Walk& w, std::size_t k, std::uint64_t budget) : w_(w), k_(k), budget_(budget) {
    for (std::size_t p = 0; p + 1 < w.nodes().size(); ++p) cycles_.push_back(cycle_at(w, p));
  }

  template <typename Visit>
  void run(Visit&& visit) {
    std::vector<CycleSpan> chosen;
    descend(0, chosen, visit);
  }

 private:
  bool keeps_k(const std::vector<CycleSpan>& chosen) const {
    const auto& v = w_.nodes();
    std::size_t c = 0;
    for (std::size_t pos = 0; pos < v.size(); ++pos) {
      while (c < chosen.size() && chosen[c].end < pos) ++c;
      const bool removed = c < chosen.size() && chosen[c].begin < pos && pos <= chosen[c].end;
      if (!removed && v[pos] == k_) return true;
    }
    return false;
  }

  template <typename Visit>
  bool descend(std::size_t from, std::vector<CycleSpan>& chosen, Visit& visit) {
    if (++expanded_ > budget_) throw ResourceError("cycle pattern search budget exceeded");
    if (!chosen.empty()) {
      // Dropping cycles never removes k, so a pattern losing k cannot be extended into one keeping it.
      if (!keeps_k(chosen)) return false;
      if (visit(chosen)) return true;
    }
    for (std::size_t p = from; p < cycles_.size(); ++p) {
      if (!cycles_[p]) continue;
      chosen.push_back(*cycles_[p]);
      const bool stop = descend(cycles_[p]->end, chosen, visit);
      chosen.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const Walk& w_;
  std::size_t k_;
  std::uint64_t budget_;
  std::uint64_t expanded_ = 0;
  std::vector<std::optional<CycleSpan>> cycles_;
};

}  // namespace

bool removable_pattern_exists_exhaustive(const Walk& w, std::int64_t d, std::size_t k, std::uint64_t budget) {
  if (d < 1) throw InputError("d must be positive");
  if (!w.visits(k)) throw InputError("node k is not on the walk");
  bool found = false;
  PatternSearch(w, k, budget).run([&](const std::vector<CycleSpan>& chosen) {
    std::int64_t total = 0;
    for (const auto& c : chosen) total += c.length();
    found = total % d == 0;
    return found;
  });
  return found;
}

std::int64_t max_k_preserving_pattern_size(const Walk& w, std::size_t k, std::uint64_t budget) {
  if (!w.visits(k)) throw InputError("node k is not on the walk");
  std::int64_t best = 0;
  PatternSearch(w, k, budget).run([&](const std::vector<CycleSpan>& chosen) {
    best = std::max(best, static_cast<std::int64_t>(chosen.size()));
    return false;
  });
  return best;
}

}  // namespace mpt
