#include <doctest.h>

#include "mpt/errors.hpp"
#include "mpt/exploration.hpp"
#include "mpt/families.hpp"
#include "mpt/graph.hpp"
#include "oracles.hpp"

using namespace mpt;

TEST_CASE("digraph basics") {
  Digraph g(3);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(0, 1));
  CHECK(g.add_edge(2, 2));
  CHECK(g.edge_count() == 2);
  CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 2}});
}

TEST_CASE("SCCs match mutual reachability and come sinks first") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 8));
    Digraph g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (bernoulli(rng, 0.2)) g.add_edge(i, j);
    const auto comps = strongly_connected_components(g);
    const auto r = oracle::reachability(g);
    std::vector<std::size_t> id(n);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (std::size_t u : comps[c]) id[u] = c;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CHECK((id[i] == id[j]) == (r[i][j] && r[j][i]));
        // An edge never points to a later component.
        if (g.has_edge(i, j)) CHECK(id[j] <= id[i]);
      }
  }
}

TEST_CASE("girth and cyclicity agree with simple-cycle enumeration") {
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 7));
    const Digraph g = random_strongly_connected(rng, n, 0.15);
    CHECK(girth(g) == oracle::girth_by_cycles(g));
    CHECK(cyclicity(g) == oracle::cyclicity_by_cycles(g));
  }
}

TEST_CASE("cyclicity of a reducible graph is the lcm over components") {
  Digraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 0);  // cyclicity 2
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 2);  // cyclicity 3
  g.add_edge(1, 2);
  CHECK(cyclicity(g) == 6);
  Digraph acyclic(2);
  acyclic.add_edge(0, 1);
  CHECK_FALSE(girth(acyclic).has_value());
  CHECK(cyclicity(acyclic) == 1);
}

TEST_CASE("E_k structure") {
  const auto g = graph_of_matrix(generate_ek(3));
  CHECK(g.node_count() == 6);
  CHECK(girth(g) == 3);
  CHECK(cyclicity(g) == 1);
  CHECK(is_strongly_connected(g));
}

TEST_CASE("residue property: walk lengths i->j share one class mod gamma") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 8));
    const Digraph g = random_strongly_connected(rng, n, 0.1);
    const std::int64_t gamma = cyclicity(g);
    const auto table = walk_existence_table(g, 40);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::optional<std::int64_t> residue;
        for (std::int64_t len = 0; len <= 40; ++len) {
          if (!table[static_cast<std::size_t>(len)](i, j)) continue;
          if (!residue) residue = len % gamma;
          CHECK(len % gamma == *residue);
        }
      }
  }
}
