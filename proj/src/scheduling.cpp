#include "mpt/scheduling.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "mpt/errors.hpp"
#include "mpt/graph.hpp"

namespace mpt {

namespace {

Digraph height_zero_graph(const UniformGraph& g) {
  Digraph h(g.tasks);
  for (const auto& e : g.edges)
    if (e.height == 0) h.add_edge(e.src, e.dst);
  return h;
}

bool has_cycle(const Digraph& g) {
  for (const auto& comp : strongly_connected_components(g))
    if (component_has_cycle(g, comp)) return true;
  return false;
}

// Height-0 dependency order: dst before src for every height-0 edge.
std::vector<std::size_t> dependency_order(const UniformGraph& g) {
  const Digraph h = height_zero_graph(g);
  std::vector<std::size_t> order;
  // Tarjan emits sinks first; a sink of h (no height-0 edge out) has no same-round dependency.
  for (const auto& comp : strongly_connected_components(h)) order.push_back(comp.front());
  return order;
}

void validate_nodes(const UniformGraph& g) {
  if (g.tasks == 0) throw InputError("uniform graph has no tasks");
  for (const auto& e : g.edges)
    if (e.src >= g.tasks || e.dst >= g.tasks) throw InputError("uniform graph edge endpoint out of range");
}

}  // namespace

void require_binary_heights(const UniformGraph& g) {
  validate_nodes(g);
  for (const auto& e : g.edges) {
    if (e.height != 0 && e.height != 1) {
      throw InputError("height " + std::to_string(e.height) + " on edge " + std::to_string(e.src + 1) + "->" +
                       std::to_string(e.dst + 1) + " is not binary");
    }
    if (e.weight <= 0) throw InputError("edge weights must be positive integers");
  }
}

bool is_well_formed(const UniformGraph& g) {
  validate_nodes(g);
  Digraph all(g.tasks);
  for (const auto& e : g.edges) all.add_edge(e.src, e.dst);
  return is_strongly_connected(all) && !has_cycle(height_zero_graph(g));
}

UniformGraph add_redundant_restrictions(const UniformGraph& g) {
  require_binary_heights(g);
  UniformGraph out = g;
  for (const auto& e : g.edges) {
    if (e.height != 0) continue;
    const UniformEdge copy{e.src, e.dst, e.weight, 1};
    if (std::find(out.edges.begin(), out.edges.end(), copy) == out.edges.end()) out.edges.push_back(copy);
  }
  return out;
}

ScheduleSystem schedule_system(const UniformGraph& g) {
  require_binary_heights(g);
  if (has_cycle(height_zero_graph(g))) throw PreconditionError("height-0 subgraph contains a cycle (not well-formed)");
  const std::size_t n = g.tasks;
  MaxPlusMatrix z(n), o(n);
  for (const auto& e : g.edges) {
    MaxPlusMatrix& target = e.height == 0 ? z : o;
    target(e.src, e.dst) = max(target(e.src, e.dst), ExtendedRational(static_cast<long>(e.weight)));
  }
  // Kleene star of an acyclic matrix: I + Z + ... + Z^{N-1}.
  MaxPlusMatrix star = MaxPlusMatrix::identity(n);
  MaxPlusMatrix power = MaxPlusMatrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = mat_mul(power, z);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) star(i, j) = max(star(i, j), power(i, j));
  }
  ScheduleSystem s{mat_mul(star, o), MaxPlusVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    ExtendedRational best;
    for (std::size_t j = 0; j < n; ++j) best = max(best, star(i, j));
    s.v[i] = best;
  }
  return s;
}

ScheduleTable earliest_schedule(const UniformGraph& g, std::int64_t n_max) {
  if (n_max < 0) throw InputError("schedule length must be nonnegative");
  const ScheduleSystem s = schedule_system(g);
  ScheduleTable table;
  MaxPlusVector x = s.v;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    std::vector<Rational> row;
    for (const auto& entry : x.entries()) row.push_back(entry.value());
    table.push_back(std::move(row));
    x = mat_vec(s.a, x);
  }
  return table;
}

ScheduleTable earliest_schedule_direct(const UniformGraph& g, std::int64_t n_max) {
  require_binary_heights(g);
  if (!is_well_formed(g)) throw PreconditionError("uniform graph is not well-formed");
  const auto order = dependency_order(g);
  ScheduleTable table;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    std::vector<std::optional<Rational>> row(g.tasks);
    for (std::size_t i : order) {
      Rational t(0);
      for (const auto& e : g.edges) {
        if (e.src != i || n < e.height) continue;
        const Rational& dep = e.height == 0 ? *row[e.dst] : table[static_cast<std::size_t>(n - 1)][e.dst];
        t = std::max(t, Rational(dep + e.weight));
      }
      row[i] = t;
    }
    std::vector<Rational> done;
    for (auto& x : row) done.push_back(*x);
    table.push_back(std::move(done));
  }
  return table;
}

bool satisfies_restrictions(const UniformGraph& g, const ScheduleTable& t) {
  for (std::size_t n = 0; n < t.size(); ++n)
    for (const auto& e : g.edges) {
      if (static_cast<std::int64_t>(n) < e.height) continue;
      if (t[n][e.src] < t[n - static_cast<std::size_t>(e.height)][e.dst] + e.weight) return false;
    }
  return true;
}

ScheduleReport analyze_schedule(const UniformGraph& g, std::int64_t n_max, const OracleOptions& options) {
  require_binary_heights(g);
  if (!is_well_formed(g)) throw PreconditionError("uniform graph is not well-formed");
  ScheduleReport r;
  r.transformed = add_redundant_restrictions(g);
  r.system = schedule_system(r.transformed);
  const CriticalAnalysis params = analyze_critical(r.system.a);
  r.bounds = system_bounds(params, r.system.v);
  r.measurement = system_transient(r.system.a, params, r.system.v, options);
  r.table = earliest_schedule(r.transformed, n_max);
  return r;
}

}  // namespace mpt
