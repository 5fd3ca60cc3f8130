#include <doctest.h>

#include "mpt/critical.hpp"
#include "mpt/errors.hpp"
#include "mpt/families.hpp"
#include "mpt/graph.hpp"
#include "mpt/io.hpp"
#include "mpt/reversal.hpp"
#include "mpt/scheduling.hpp"
#include "mpt/synchronizer.hpp"

using namespace mpt;

namespace {

UniformGraph example() {
  return parse_uniform_graph(
      "7 8\n"
      "2 1 1 0\n1 3 2 1\n3 2 3 0\n3 7 2 1\n7 6 3 0\n6 5 1 1\n5 4 5 0\n4 3 2 0\n");
}

// Random well-formed instance: height 0 only along a random order, so the
// height-0 subgraph is acyclic; a Hamiltonian cycle keeps it strongly connected.
UniformGraph random_uniform(Rng& rng, std::size_t tasks) {
  UniformGraph g;
  g.tasks = tasks;
  std::vector<std::size_t> rank(tasks);
  for (std::size_t i = 0; i < tasks; ++i) rank[i] = i;
  for (std::size_t i = tasks; i > 1; --i) std::swap(rank[i - 1], rank[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i) - 1))]);
  auto add = [&](std::size_t s, std::size_t d) {
    const std::int64_t h = rank[s] < rank[d] && bernoulli(rng, 0.6) ? 0 : 1;
    g.edges.push_back({s, d, uniform_int(rng, 1, 5), h});
  };
  for (std::size_t i = 0; i < tasks; ++i) add(i, (i + 1) % tasks);
  for (std::size_t i = 0; i < tasks; ++i)
    for (std::size_t j = 0; j < tasks; ++j)
      if (bernoulli(rng, 0.15)) add(i, j);
  return g;
}

// Least fixpoint of all restrictions by plain relaxation; independent of the
// dependency order used by earliest_schedule_direct.
ScheduleTable relaxation_schedule(const UniformGraph& g, std::int64_t n_max) {
  ScheduleTable t(static_cast<std::size_t>(n_max) + 1, std::vector<Rational>(g.tasks, Rational(0)));
  for (bool changed = true; changed;) {
    changed = false;
    for (std::int64_t n = 0; n <= n_max; ++n)
      for (const auto& e : g.edges) {
        if (n < e.height) continue;
        const Rational need = t[static_cast<std::size_t>(n - e.height)][e.dst] + e.weight;
        auto& cur = t[static_cast<std::size_t>(n)][e.src];
        if (cur < need) {
          cur = need;
          changed = true;
        }
      }
  }
  return t;
}

}  // namespace

TEST_CASE("scheduling example: A entries and v") {
  const auto s = schedule_system(example());
  const std::vector<long> v{0, 1, 4, 6, 11, 0, 3};
  for (std::size_t i = 0; i < 7; ++i) CHECK(s.v[i] == ExtendedRational(v[i]));
  CHECK(s.a(4, 2) == ExtendedRational(13L));
  CHECK(s.a(0, 2) == ExtendedRational(2L));
  CHECK(s.a(4, 6) == ExtendedRational(9L));
  CHECK(s.a(2, 2) == ExtendedRational(6L));
}

TEST_CASE("scheduling example: lambda 13/2, B_c 106, transient 1") {
  const auto r = analyze_schedule(example(), 10);
  CHECK(is_irreducible(r.system.a));
  CHECK(r.bounds.params.lambda == ExtendedRational(13, 2));
  CHECK(r.bounds.critical_bound == 106);
  CHECK(r.measurement.transient == 1);
  CHECK(r.measurement.period == 2);
  CHECK(satisfies_restrictions(example(), r.table));
  CHECK(r.table == relaxation_schedule(example(), 10));
}

TEST_CASE("redundant restrictions") {
  const auto g = example();
  const auto t = add_redundant_restrictions(g);
  CHECK(t.edges.size() == g.edges.size() + 5);
  CHECK(add_redundant_restrictions(t) == t);
  UniformGraph two{2, {{0, 1, 1, 1}, {1, 0, 2, 1}}};
  CHECK(add_redundant_restrictions(two) == two);
}

TEST_CASE("random well-formed instances") {
  Rng rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_uniform(rng, static_cast<std::size_t>(uniform_int(rng, 1, 7)));
    REQUIRE(is_well_formed(g));
    const auto t = add_redundant_restrictions(g);
    CHECK(is_irreducible(schedule_system(t).a));
    const auto reference = relaxation_schedule(g, 12);
    CHECK(earliest_schedule_direct(g, 12) == reference);
    CHECK(earliest_schedule_direct(t, 12) == reference);
    CHECK(earliest_schedule(t, 12) == reference);
    CHECK(earliest_schedule(g, 12) == reference);
  }
}

TEST_CASE("scheduling preconditions") {
  UniformGraph high{2, {{0, 1, 1, 2}, {1, 0, 1, 1}}};
  CHECK_THROWS_AS(schedule_system(high), InputError);
  UniformGraph zero_cycle{2, {{0, 1, 1, 0}, {1, 0, 1, 0}}};
  CHECK_THROWS_AS(schedule_system(zero_cycle), PreconditionError);
  UniformGraph loop{1, {{0, 0, 4, 1}}};
  const auto s = schedule_system(loop);
  CHECK(s.a(0, 0) == ExtendedRational(4L));
  CHECK(s.v[0] == ExtendedRational(0L));
}

TEST_CASE("synchronizer on the cherry: 792 and 5711") {
  const auto r = analyze_synchronizer(generate_cherry(3, 2), std::nullopt, true);
  CHECK(r.bounds.repetitive == 792);
  REQUIRE(r.er_bound.has_value());
  CHECK(*r.er_bound == 5711);
  CHECK(r.bounds.repetitive < *r.er_bound);
  REQUIRE(r.measurement.has_value());
  CHECK(r.measurement->transient <= 792);
}

TEST_CASE("synchronizer preconditions") {
  CHECK_THROWS_AS(synchronizer_system(parse_matrix("2\n1 1\n-inf 1\n")), InputError);
  CHECK_THROWS_AS(synchronizer_system(parse_matrix("1\n1/2\n")), InputError);
  CHECK_THROWS_AS(synchronizer_system(parse_matrix("1\n0\n")), InputError);
  const auto s = synchronizer_system(parse_matrix("1\n3\n"));
  CHECK(s.v[0] == ExtendedRational(0L));
}

TEST_CASE("Even-Rajsbaum closed form") {
  CHECK(er_bound(3, 2) == 5711);
  CHECK(er_bound(2, 1) == 863);
  for (std::int64_t l = 2; l <= 5; ++l) CHECK(er_bound(l, 2) > er_bound(l, 1));
  CHECK_THROWS_AS(er_bound(1, 1), InputError);
}

TEST_CASE("cherry recognition") {
  CHECK(recognize_cherry(generate_cherry(3, 2)) == std::make_pair<std::int64_t, std::int64_t>(3, 2));
  auto a = generate_cherry(3, 2);
  a(0, 1) = 8L;
  CHECK_FALSE(recognize_cherry(a).has_value());
  CHECK_FALSE(recognize_cherry(generate_ek(4)).has_value());
}

TEST_CASE("Full Reversal: two nodes without destination") {
  const auto g = parse_digraph("2 1\n1 2\n");
  const auto w = simulate_work(g, 5);
  CHECK(w[0] == std::vector<std::int64_t>{0, 0});
  CHECK(w[1] == std::vector<std::int64_t>{0, 1});
  CHECK(w[2] == std::vector<std::int64_t>{1, 1});
  CHECK(w[3] == std::vector<std::int64_t>{1, 2});
  CHECK(min_plus_work(g, 5) == w);
  const auto r = reversal_analysis(g, ReversalMode::scheduling);
  CHECK(r.measurement.transient == 0);
  CHECK(r.applicable_bound == Rational(5));
  CHECK(r.lambda_check == true);
}

TEST_CASE("Full Reversal: destination with one neighbour") {
  const auto g = parse_digraph("2 2\n1 1\n1 2\n");
  const auto r = reversal_analysis(g, ReversalMode::routing);
  CHECK(r.termination_time == 1);
  CHECK(r.final_work == std::vector<std::int64_t>{0, 1});
  CHECK(reversal_matrix(g)(0, 0) == Rational(0));
}

TEST_CASE("Full Reversal steps") {
  const auto settled = initial_state(parse_digraph("2 2\n1 1\n2 1\n"));
  const auto next = full_reversal_step(settled);
  CHECK(next.step == 1);
  CHECK(next.work == settled.work);
  CHECK(next.graph.edges() == settled.graph.edges());
  const auto chain = full_reversal_step(initial_state(parse_digraph("2 1\n1 2\n")));
  CHECK(chain.graph.has_edge(1, 0));
  CHECK(chain.work == std::vector<std::int64_t>{0, 1});
  const auto star = full_reversal_step(initial_state(parse_digraph("3 2\n1 2\n3 2\n")));
  CHECK(star.work == std::vector<std::int64_t>{0, 1, 0});
  CHECK(star.graph.has_edge(1, 0));
  CHECK(star.graph.has_edge(1, 2));
  CHECK_THROWS_AS(validate_reversal_graph(parse_digraph("2 2\n1 2\n2 1\n")), InputError);
  CHECK_THROWS_AS(validate_reversal_graph(parse_digraph("3 1\n1 2\n")), InputError);
}

TEST_CASE("Full Reversal: simulation equals min-plus iteration") {
  Rng rng(79);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 8));
    Digraph g = random_acyclic(rng, n, 0.2);
    if (bernoulli(rng, 0.5)) g.add_edge(static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1)),
                                        static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1)));
    bool antiparallel = false;
    for (const auto& [u, v] : g.edges()) antiparallel = antiparallel || (u != v && g.has_edge(v, u));
    if (antiparallel) continue;
    CHECK(simulate_work(g, 40) == min_plus_work(g, 40));
  }
}

TEST_CASE("Full Reversal bounds on random instances") {
  Rng rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 10));
    Digraph tree = random_oriented_tree(rng, n);
    Digraph with_dest = tree;
    const auto d = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1));
    with_dest.add_edge(d, d);
    const auto r = reversal_analysis(with_dest, ReversalMode::routing);
    CHECK(r.tree);
    REQUIRE(r.termination_time.has_value());
    CHECK(*r.termination_time <= 2 * (static_cast<std::int64_t>(n) - 1));
    CHECK(r.simulation_matches);
    const auto s = reversal_analysis(tree, ReversalMode::scheduling);
    CHECK(s.measurement.transient <= 4 * static_cast<std::int64_t>(n) - 3);
    CHECK(s.lambda_check == true);
  }
}

TEST_CASE("reversal preconditions") {
  CHECK_THROWS_AS(reversal_analysis(parse_digraph("2 1\n1 2\n"), ReversalMode::routing), PreconditionError);
  CHECK_THROWS_AS(reversal_analysis(parse_digraph("2 2\n1 1\n1 2\n"), ReversalMode::scheduling), PreconditionError);
  CHECK_THROWS_AS(reversal_analysis(parse_digraph("3 3\n1 2\n2 3\n3 1\n"), ReversalMode::scheduling),
                  PreconditionError);
}

TEST_CASE("Full Reversal scheduling on random acyclic graphs stays within N^2(N-1)/4") {
  Rng rng(89);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 8));
    const Digraph g = random_acyclic(rng, n, 0.3);
    const auto r = reversal_analysis(g, ReversalMode::scheduling);
    const auto nn = static_cast<std::int64_t>(n);
    CHECK(Rational(r.measurement.transient) <= Rational(nn * nn * (nn - 1), 4));
    CHECK(r.within_bound);
    CHECK(r.simulation_matches);
  }
}

TEST_CASE("cherry transients grow with l and c and stay below the repetitive bound") {
  std::int64_t previous_l = -1;
  for (std::int64_t l = 2; l <= 4; ++l) {
    std::int64_t previous_c = -1;
    for (std::int64_t c = 1; c <= 3; ++c) {
      const auto r = analyze_synchronizer(generate_cherry(l, c), std::nullopt, true);
      const auto t = r.measurement->transient;
      CHECK(Rational(t) <= r.bounds.repetitive);
      CHECK(t > previous_c);
      previous_c = t;
      if (c == 2) {
        CHECK(t > previous_l);
        previous_l = t;
      }
    }
  }
}
