#include "mpt/reversal.hpp"

#include <algorithm>
#include <numeric>

#include "mpt/critical.hpp"
#include "mpt/errors.hpp"

namespace mpt {

namespace {

std::vector<std::vector<std::size_t>> undirected_adjacency(const Digraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.node_count());
  for (const auto& [u, v] : g.edges()) {
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

bool weakly_connected(const Digraph& g) {
  const auto adj = undirected_adjacency(g);
  std::vector<char> seen(g.node_count(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.node_count();
}

std::size_t non_loop_edge_count(const Digraph& g) {
  std::size_t m = 0;
  for (const auto& [u, v] : g.edges()) m += u != v;
  return m;
}

}  // namespace

void validate_reversal_graph(const Digraph& g) {
  if (g.node_count() == 0 || g.edge_count() == 0) throw InputError("reversal graph needs at least one edge");
  for (const auto& [u, v] : g.edges())
    if (u != v && g.has_edge(v, u))
      throw InputError("antiparallel edges between " + std::to_string(u + 1) + " and " + std::to_string(v + 1));
  if (!weakly_connected(g)) throw InputError("reversal graph is not weakly connected");
}

std::vector<std::size_t> destinations(const Digraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < g.node_count(); ++u)
    if (g.has_edge(u, u)) out.push_back(u);
  return out;
}

std::vector<std::size_t> sinks(const Digraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < g.node_count(); ++u)
    if (g.successors(u).empty()) out.push_back(u);
  return out;
}

bool is_tree(const Digraph& g) { return weakly_connected(g) && non_loop_edge_count(g) + 1 == g.node_count(); }

bool is_acyclic_ignoring_loops(const Digraph& g) {
  Digraph h(g.node_count());
  for (const auto& [u, v] : g.edges())
    if (u != v) h.add_edge(u, v);
  for (const auto& comp : strongly_connected_components(h))
    if (comp.size() > 1) return false;
  return true;
}

ReversalState initial_state(const Digraph& g0) {
  validate_reversal_graph(g0);
  return {g0, std::vector<std::int64_t>(g0.node_count(), 0), 0};
}

ReversalState full_reversal_step(const ReversalState& s) {
  const std::size_t n = s.graph.node_count();
  const auto sink_list = sinks(s.graph);
  std::vector<char> is_sink(n, 0);
  for (std::size_t u : sink_list) is_sink[u] = 1;
  ReversalState next{Digraph(n), s.work, s.step + 1};
  for (const auto& [u, v] : s.graph.edges()) {
    if (is_sink[u] && is_sink[v]) throw InternalError("two adjacent sinks");
    if (is_sink[v])
      next.graph.add_edge(v, u);
    else
      next.graph.add_edge(u, v);
  }
  for (std::size_t u : sink_list) ++next.work[u];
  return next;
}

MinPlusMatrix reversal_matrix(const Digraph& g0) {
  validate_reversal_graph(g0);
  MinPlusMatrix a(g0.node_count());
  for (const auto& [u, v] : g0.edges()) {
    if (u == v) {
      a(u, u) = Rational(0);
      continue;
    }
    a(v, u) = Rational(1);
    a(u, v) = Rational(0);
  }
  return a;
}

std::vector<std::vector<std::int64_t>> simulate_work(const Digraph& g0, std::int64_t steps) {
  ReversalState s = initial_state(g0);
  std::vector<std::vector<std::int64_t>> out{s.work};
  for (std::int64_t t = 0; t < steps; ++t) {
    s = full_reversal_step(s);
    out.push_back(s.work);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> min_plus_work(const Digraph& g0, std::int64_t steps) {
  const MinPlusMatrix a = reversal_matrix(g0);
  const std::size_t n = g0.node_count();
  MinPlusVector w(n, Rational(0));
  std::vector<std::vector<std::int64_t>> out;
  auto record = [&] {
    std::vector<std::int64_t> row;
    for (const auto& x : w) {
      if (!x) throw InternalError("min-plus work vector became +inf");
      row.push_back(floor_to_int(*x));
    }
    out.push_back(std::move(row));
  };
  record();
  for (std::int64_t t = 0; t < steps; ++t) {
    w = min_plus_mat_vec(a, w);
    record();
  }
  return out;
}

ReversalReport reversal_analysis(const Digraph& g0, ReversalMode mode, const OracleOptions& options) {
  validate_reversal_graph(g0);
  const auto n = static_cast<std::int64_t>(g0.node_count());
  ReversalReport r;
  r.mode = mode;
  r.node_count = n;
  r.tree = is_tree(g0);
  const bool has_dest = !destinations(g0).empty();
  if (mode == ReversalMode::routing) {
    if (!has_dest) throw PreconditionError("routing requires a destination (a self-loop line 'd d')");
    if (!is_acyclic_ignoring_loops(g0)) throw PreconditionError("routing requires an acyclic initial graph");
  } else {
    if (has_dest) throw PreconditionError("scheduling mode takes no destinations");
    if (!is_acyclic_ignoring_loops(g0)) throw PreconditionError("scheduling requires an acyclic initial graph");
  }

  r.system_matrix = reversal_matrix(g0).negated();
  const MaxPlusVector zero(g0.node_count(), ExtendedRational(0L));
  const CriticalAnalysis params = analyze_critical(r.system_matrix);
  r.bounds = system_bounds(params, zero);
  r.measurement = system_transient(r.system_matrix, params, zero, options);

  if (mode == ReversalMode::routing) {
    ReversalState s = initial_state(g0);
    const std::int64_t limit = std::max<std::int64_t>(r.measurement.scan_horizon, n * n) + 1;
    while (!sinks(s.graph).empty()) {
      if (s.step > limit) throw InternalError("Full Reversal did not terminate within its proven bound");
      s = full_reversal_step(s);
    }
    r.termination_time = s.step;
    r.final_work = s.work;
    r.applicable_bound = r.tree ? Rational(2 * (n - 1)) : Rational((n - 1) * (n - 1));
    r.applicable_bound_name = r.tree ? "2(N-1)" : "(N-1)^2";
    r.within_bound = Rational(*r.termination_time) <= r.applicable_bound;
  } else {
    r.applicable_bound = r.tree ? Rational(4 * n - 3) : Rational(n * n * (n - 1), 4);
    r.applicable_bound.canonicalize();
    r.applicable_bound_name = r.tree ? "4N-3" : "N^2(N-1)/4";
    r.within_bound = Rational(r.measurement.transient) <= r.applicable_bound;
    if (r.tree) r.lambda_check = params.lambda == ExtendedRational(Rational(-1, 2));
    r.final_work = simulate_work(g0, r.measurement.transient).back();
  }

  r.checked_steps = std::max<std::int64_t>(40, r.measurement.transient + 2 * r.measurement.period);
  r.simulation_matches = simulate_work(g0, r.checked_steps) == min_plus_work(g0, r.checked_steps);
  return r;
}

}  // namespace mpt
