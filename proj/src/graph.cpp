#include "mpt/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "mpt/errors.hpp"

namespace mpt {

bool Digraph::add_edge(std::size_t from, std::size_t to) {
  if (from >= node_count() || to >= node_count()) throw InputError("edge endpoint out of range");
  auto& s = succ_[from];
  auto it = std::lower_bound(s.begin(), s.end(), to);
  if (it != s.end() && *it == to) return false;
  s.insert(it, to);
  ++edge_count_;
  return true;
}

bool Digraph::has_edge(std::size_t from, std::size_t to) const {
  const auto& s = succ_[from];
  return std::binary_search(s.begin(), s.end(), to);
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < succ_.size(); ++u)
    for (std::size_t v : succ_[u]) out.emplace_back(u, v);
  return out;
}

Digraph Digraph::induced(const std::vector<std::size_t>& nodes) const {
  constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(node_count(), kAbsent);
  for (std::size_t k = 0; k < nodes.size(); ++k) index[nodes[k]] = k;
  Digraph sub(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k)
    for (std::size_t v : succ_[nodes[k]])
      if (index[v] != kAbsent) sub.add_edge(k, index[v]);
  return sub;
}

Digraph graph_of_matrix(const MaxPlusMatrix& a) {
  Digraph g(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a(i, j).is_finite()) g.add_edge(i, j);
  return g;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const Digraph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.node_count();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  struct Frame {
    std::size_t node;
    std::size_t next_child;
  };
  std::vector<Frame> call;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& succ = g.successors(f.node);
      if (f.next_child < succ.size()) {
        const std::size_t w = succ[f.next_child++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      const std::size_t v = f.node;
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  return components;
}

bool is_strongly_connected(const Digraph& g) {
  return g.node_count() > 0 && strongly_connected_components(g).size() == 1;
}

bool is_irreducible(const MaxPlusMatrix& a) { return is_strongly_connected(graph_of_matrix(a)); }

bool component_has_cycle(const Digraph& g, const std::vector<std::size_t>& component) {
  if (component.size() > 1) return true;
  return !component.empty() && g.has_edge(component[0], component[0]);
}

std::optional<std::int64_t> girth(const Digraph& g) {
  // BFS from every node; the shortest return to the source closes a shortest cycle through it.
  const std::size_t n = g.node_count();
  std::optional<std::int64_t> best;
  std::vector<std::int64_t> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      if (best && dist[u] + 1 >= *best) break;
      for (std::size_t v : g.successors(u)) {
        if (v == s) {
          if (!best || dist[u] + 1 < *best) best = dist[u] + 1;
        } else if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return best;
}

std::int64_t component_cyclicity(const Digraph& g, const std::vector<std::size_t>& component) {
  if (!component_has_cycle(g, component)) return 1;
  constexpr std::int64_t kAbsent = -1;
  std::vector<std::int64_t> level(g.node_count(), kAbsent);
  std::vector<bool> inside(g.node_count(), false);
  for (std::size_t v : component) inside[v] = true;

  std::deque<std::size_t> queue{component.front()};
  level[component.front()] = 0;
  std::int64_t d = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : g.successors(u)) {
      if (!inside[v]) continue;
      if (level[v] == kAbsent) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      } else {
        d = std::gcd(d, level[u] + 1 - level[v]);
      }
    }
  }
  return d == 0 ? 1 : d;
}

std::int64_t cyclicity(const Digraph& g) {
  std::int64_t result = 1;
  for (const auto& comp : strongly_connected_components(g)) result = lcm64(result, component_cyclicity(g, comp));
  return result;
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix id(n);
  for (std::size_t i = 0; i < n; ++i) id.set(i, i);
  return id;
}

BoolMatrix BoolMatrix::adjacency(const Digraph& g) {
  BoolMatrix m(g.node_count());
  for (const auto& [u, v] : g.edges()) m.set(u, v);
  return m;
}

BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b) {
  const std::size_t n = a.size();
  BoolMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (!a(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b(k, j)) c.bits_[i * n + j] = 1;
    }
  return c;
}

std::vector<BoolMatrix> walk_existence_table(const Digraph& g, std::int64_t n_max) {
  if (n_max < 0) throw InputError("walk_existence_table: negative length");
  const BoolMatrix adj = BoolMatrix::adjacency(g);
  std::vector<BoolMatrix> table;
  table.reserve(static_cast<std::size_t>(n_max) + 1);
  table.push_back(BoolMatrix::identity(g.node_count()));
  for (std::int64_t n = 1; n <= n_max; ++n) table.push_back(table.back() * adj);
  return table;
}

}  // namespace mpt
