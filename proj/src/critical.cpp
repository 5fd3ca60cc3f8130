#include "mpt/critical.hpp"

#include <algorithm>

#include "mpt/errors.hpp"
#include "mpt/exploration.hpp"

namespace mpt {

namespace {

// Karp's theorem, max variant, for a strongly connected matrix with a cycle.
Rational karp_max_mean(const MaxPlusMatrix& a) {
  const std::size_t n = a.size();
  std::vector<MaxPlusVector> d;
  d.reserve(n + 1);
  d.emplace_back(n);
  d[0][0] = 0L;
  for (std::size_t k = 1; k <= n; ++k) {
    MaxPlusVector next(n);
    for (std::size_t u = 0; u < n; ++u) {
      if (d[k - 1][u].is_neg_inf()) continue;
      for (std::size_t v = 0; v < n; ++v) next[v] = max(next[v], d[k - 1][u] + a(u, v));
    }
    d.push_back(std::move(next));
  }

  std::optional<Rational> best;
  for (std::size_t v = 0; v < n; ++v) {
    if (d[n][v].is_neg_inf()) continue;
    std::optional<Rational> worst;
    for (std::size_t k = 0; k < n; ++k) {
      if (d[k][v].is_neg_inf()) continue;
      Rational mean = (d[n][v].value() - d[k][v].value()) / Rational(static_cast<long>(n - k));
      if (!worst || mean < *worst) worst = mean;
    }
    if (worst && (!best || *worst > *best)) best = worst;
  }
  if (!best) throw InternalError("karp_max_mean: no walk of length N from the source");
  best->canonicalize();
  return *best;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& sorted) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (k < sorted.size() && sorted[k] == i) {
      ++k;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

}  // namespace

ExtendedRational max_cycle_mean(const MaxPlusMatrix& a) {
  const Digraph g = graph_of_matrix(a);
  ExtendedRational lambda;
  for (const auto& comp : strongly_connected_components(g)) {
    if (!component_has_cycle(g, comp)) continue;
    lambda = max(lambda, ExtendedRational(karp_max_mean(a.submatrix(comp))));
  }
  return lambda;
}

MaxPlusMatrix max_walk_weights(const MaxPlusMatrix& a) {
  const std::size_t n = a.size();
  MaxPlusMatrix d = a;
  for (std::size_t i = 0; i < n; ++i) d(i, i) = max(d(i, i), ExtendedRational(0L));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (d(i, k).is_neg_inf()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        ExtendedRational via = d(i, k) + d(k, j);
        if (d(i, j) < via) d(i, j) = std::move(via);
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    if (d(i, i) != ExtendedRational(0L)) throw InputError("max_walk_weights: positive-weight cycle present");
  return d;
}

CriticalSubgraph critical_subgraph(const MaxPlusMatrix& a) {
  CriticalSubgraph out;
  out.lambda = max_cycle_mean(a);
  if (out.lambda.is_neg_inf()) throw InputError("critical_subgraph: lambda is -inf (no cycle)");
  const MaxPlusMatrix normalized = normalize(a, out.lambda);
  const MaxPlusMatrix d = max_walk_weights(normalized);
  const std::size_t n = a.size();
  out.graph = Digraph(n);
  std::vector<bool> critical(n, false);
  const ExtendedRational zero(0L);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (normalized(i, j).is_neg_inf()) continue;
      if (normalized(i, j) + d(j, i) == zero) {
        out.edges.emplace_back(i, j);
        out.graph.add_edge(i, j);
        critical[i] = critical[j] = true;
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    if (critical[i]) out.nodes.push_back(i);
  for (auto& comp : strongly_connected_components(out.graph))
    if (component_has_cycle(out.graph, comp)) out.components.push_back(std::move(comp));
  std::sort(out.components.begin(), out.components.end());
  return out;
}

CriticalAnalysis analyze_critical(const MaxPlusMatrix& a) {
  CriticalAnalysis r;
  const std::size_t n = a.size();
  r.node_count = static_cast<std::int64_t>(n);
  const Digraph g = graph_of_matrix(a);
  r.irreducible = is_strongly_connected(g);

  if (max_cycle_mean(a).is_neg_inf()) throw PreconditionError("G(A) has no cycle, so lambda(A) = -inf");
  CriticalSubgraph cs = critical_subgraph(a);
  r.lambda = cs.lambda;
  r.critical_nodes = cs.nodes;
  r.critical_edges = cs.edges;

  r.gamma_A = 1;
  for (const auto& comp : cs.components) {
    const Digraph h = cs.graph.induced(comp);
    CriticalComponent c;
    c.nodes = comp;
    c.girth = *girth(h);
    c.cyclicity = cyclicity(h);
    c.exploration_penalty = exploration_penalty(h);
    r.g_hat = std::max(r.g_hat, c.girth);
    r.gamma_hat = std::max(r.gamma_hat, c.cyclicity);
    r.ep_hat = std::max(r.ep_hat, c.exploration_penalty);
    r.gamma_A = lcm64(r.gamma_A, c.cyclicity);
    r.components.push_back(std::move(c));
  }

  r.gamma_G = cyclicity(g);
  for (const auto& comp : strongly_connected_components(g)) {
    if (!component_has_cycle(g, comp)) continue;
    r.ep_per_component.emplace_back(comp, exploration_penalty(g.induced(comp)));
  }
  std::sort(r.ep_per_component.begin(), r.ep_per_component.end());
  if (r.irreducible) r.ep_G = r.ep_per_component.front().second;

  r.delta = a.min_finite();
  r.Delta = a.max_finite();
  r.norm_A = a.norm();

  const std::vector<std::size_t> non_critical = complement(n, r.critical_nodes);
  r.n_nc = static_cast<std::int64_t>(non_critical.size());
  if (!non_critical.empty()) {
    const MaxPlusMatrix sub = a.submatrix(non_critical);
    r.lambda_nc = max_cycle_mean(sub);
    r.Delta_nc = sub.max_finite();
  }
  return r;
}

}  // namespace mpt
