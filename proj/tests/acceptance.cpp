// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "mpt/bounds.hpp"
#include "mpt/critical.hpp"
#include "mpt/exploration.hpp"
#include "mpt/families.hpp"
#include "mpt/graph.hpp"
#include "mpt/io.hpp"
#include "mpt/oracle.hpp"
#include "mpt/reversal.hpp"
#include "mpt/scheduling.hpp"
#include "mpt/synchronizer.hpp"
#include "mpt/walk.hpp"
#include "oracles.hpp"

using namespace mpt;

namespace {

// Collects failures of one criterion; an empty log means PASS.
class Log {
 public:
  void fail(const std::string& msg) {
    if (++failures_ <= 5) msg_ << (msg_.tellp() > 0 ? "; " : "") << msg;
  }
  void check(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
  }
  void note(const std::string& s) { notes_ << (notes_.tellp() > 0 ? "; " : "") << s; }
  int failures() const { return failures_; }
  std::string message() const { return msg_.str(); }
  std::string notes() const { return notes_.str(); }

 private:
  int failures_ = 0;
  std::ostringstream msg_;
  std::ostringstream notes_;
};

std::string str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

MaxPlusVector zeros(std::size_t n) { return MaxPlusVector(n, ExtendedRational(0L)); }

std::int64_t floor_of(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

Digraph random_walk_graph(Rng& rng, std::size_t n) { return random_strongly_connected(rng, n, 0.25); }

Walk random_walk(Rng& rng, const Digraph& g, std::int64_t len) {
  std::vector<std::size_t> nodes{static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(g.node_count()) - 1))};
  for (std::int64_t t = 0; t < len; ++t) {
    const auto& succ = g.successors(nodes.back());
    nodes.push_back(succ[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(succ.size()) - 1))]);
  }
  return Walk::from_nodes(nodes);
}

void criterion1(Log& log) {
  const auto h = generate_cherry(3, 2);
  const auto r = analyze_synchronizer(h, std::nullopt, true);
  log.check(r.bounds.repetitive == 792, "repetitive " + str(r.bounds.repetitive));
  log.check(r.er_bound && *r.er_bound == 5711, "B_ER mismatch");
  log.check(er_bound(3, 2) == 5711, "er_bound(3,2)");
  log.check(r.measurement && r.measurement->verified && r.measurement->transient <= 792, "oracle transient above 792");
  // Reference run of the measured transient by naive iteration.
  if (r.measurement) {
    const auto params = analyze_critical(h);
    const auto xs = oracle::trajectory(h, zeros(h.size()), r.measurement->transient + 4 * params.gamma_A);
    log.check(oracle::transient_on_window(xs, params.gamma_A, params.lambda.value()) == r.measurement->transient,
              "naive transient differs");
    log.note("transient " + std::to_string(r.measurement->transient));
  }
  // Observational trend over the family: bound and measured transient.
  std::ostringstream trend;
  for (std::int64_t l = 2; l <= 4; ++l) {
    const auto s = analyze_synchronizer(generate_cherry(l, 2), std::nullopt, true);
    trend << (l > 2 ? ", " : "") << "l=" << l << ": B_rep " << s.bounds.repetitive << " T " << s.measurement->transient;
  }
  log.note("trend c=2 " + trend.str());
}

void criterion2(Log& log) {
  for (std::int64_t l = 2; l <= 4; ++l)
    for (std::int64_t c = 1; c <= 2; ++c) {
      const auto a = generate_cherry(l, c);
      const auto b = system_bounds(a, zeros(a.size()));
      const std::string tag = "H_{" + std::to_string(l) + "," + std::to_string(c) + "}";
      const Rational expected(12 * c * l * l * l + 9 * c * l * l - 3 * c * l);
      log.check(b.critical_bound == expected, tag + " B_c " + str(b.critical_bound));
      log.check(b.critical_bound_unclamped == expected, tag + " literal B_c");
      Rational lam = Rational(3 * c) + Rational(1, l);
      Rational lam_nc = Rational(3 * c) + Rational(1, l + 1);
      lam.canonicalize();
      lam_nc.canonicalize();
      log.check(b.params.lambda == ExtendedRational(lam), tag + " lambda");
      log.check(b.params.lambda_nc == ExtendedRational(lam_nc), tag + " lambda_nc");
      log.check(oracle::max_cycle_mean(a) == ExtendedRational(lam), tag + " lambda by cycle enumeration");
    }
}

void criterion3(Log& log) {
  const auto g = parse_uniform_graph(
      "7 8\n2 1 1 0\n1 3 2 1\n3 2 3 0\n3 7 2 1\n7 6 3 0\n6 5 1 1\n5 4 5 0\n4 3 2 0\n");
  const auto r = analyze_schedule(g, 12);
  const long v[] = {0, 1, 4, 6, 11, 0, 3};
  for (std::size_t i = 0; i < 7; ++i) log.check(r.system.v[i] == ExtendedRational(v[i]), "v[" + std::to_string(i) + "]");
  log.check(r.bounds.params.lambda == ExtendedRational(13, 2), "lambda");
  log.check(r.bounds.critical_bound == 106, "B_c " + str(r.bounds.critical_bound));
  log.check(r.measurement.transient == 1, "transient " + std::to_string(r.measurement.transient));
  const auto xs = oracle::trajectory(r.system.a, r.system.v, 20);
  log.check(oracle::transient_on_window(xs, r.measurement.period, Rational(13, 2)) == 1, "naive transient");
  log.check(satisfies_restrictions(g, r.table), "schedule violates a restriction");
  log.check(earliest_schedule_direct(g, 12) == r.table, "direct schedule differs");
}

void criterion4(Log& log) {
  for (std::int64_t k = 2; k <= 6; ++k) {
    const auto a = generate_ek(k);
    const auto b = system_bounds(a, zeros(a.size()));
    const std::string tag = "E_" + std::to_string(k);
    log.check(b.critical_bound == 2 * k, tag + " B_c");
    log.check(b.repetitive == 4 * k * k - k - 1, tag + " repetitive " + str(b.repetitive));
    log.check(b.explorative <= 2 * k * k + 4 * k - 2, tag + " explorative " + str(b.explorative));
    if (k >= 3) log.check(b.explorative < b.repetitive, tag + " explorative not below repetitive");
    const auto s = generate_ek_with_shared_loop(k);
    const auto bs = system_bounds(s, zeros(s.size()));
    log.check(bs.repetitive < bs.explorative, tag + "+loop repetitive not below explorative");
  }
}

void criterion5(Log& log) {
  Rng rng(2024);
  const int instances = 500;
  int floor_sys = 0, floor_mat = 0, int_sys = 0, int_mat = 0;
  for (int t = 0; t < instances; ++t) {
    RandomMatrixSpec spec;
    spec.n = static_cast<std::size_t>(uniform_int(rng, 1, 7));
    spec.density = 0.6;
    spec.min_density = 0.4;
    spec.max_den = 4;
    const auto a = random_irreducible_matrix(rng, spec);
    const auto v = random_vector(rng, a.size(), -5, 5);
    const auto params = analyze_critical(a);
    const auto sb = system_bounds(params, v);
    const auto mb = matrix_bounds(params);
    const auto sm = system_transient(a, params, v);
    const auto mm = matrix_transient(a, params);
    const std::string tag = "instance " + std::to_string(t);
    log.check(sm.verified && mm.verified, tag + " unverified");
    if (sm.transient > floor_of(sb.best)) {
      ++floor_sys;
      log.fail(tag + ": system transient " + std::to_string(sm.transient) + " > floor(" + str(sb.best) + ")");
    }
    if (mm.transient > floor_of(mb.best)) {
      ++floor_mat;
      log.fail(tag + ": matrix transient " + std::to_string(mm.transient) + " > floor(" + str(mb.best) + ")");
    }
    int_sys += sm.transient > sb.integer_bound;
    int_mat += mm.transient > mb.integer_bound;
    // Cyclicity equation for 3 gamma steps past the transient, by naive iteration.
    const std::int64_t g = params.gamma_A;
    const Rational lam = params.lambda.value();
    const auto xs = oracle::trajectory(a, v, sm.transient + 4 * g);
    for (std::int64_t n = sm.transient; n <= sm.transient + 3 * g; ++n)
      if (!oracle::shifted_equal(xs[static_cast<std::size_t>(n + g)], xs[static_cast<std::size_t>(n)], lam * g)) {
        log.fail(tag + ": cyclicity equation fails at n=" + std::to_string(n));
        break;
      }
    if (sm.transient > 0 &&
        oracle::shifted_equal(xs[static_cast<std::size_t>(sm.transient - 1 + g)], xs[static_cast<std::size_t>(sm.transient - 1)],
                              lam * g))
      log.fail(tag + ": transient not minimal");
  }
  log.note(std::to_string(instances) + " instances; floor violations: system " + std::to_string(floor_sys) + ", matrix " +
           std::to_string(floor_mat) + "; integer_bound violations: system " + std::to_string(int_sys) + ", matrix " +
           std::to_string(int_mat));
  log.check(int_sys == 0 && int_mat == 0, "integer_bound violated");
}

void criterion6(Log& log) {
  Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    RandomMatrixSpec spec;
    spec.n = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    spec.max_den = 3;
    const auto a = random_irreducible_matrix(rng, spec);
    const auto powers = power_sequence(a, 6);
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
      // best[len][j]: heaviest walk i -> j of length len, by full enumeration.
      std::vector<MaxPlusVector> best(7, MaxPlusVector(n));
      std::function<void(std::size_t, std::size_t, const Rational&)> go = [&](std::size_t u, std::size_t len,
                                                                             const Rational& w) {
        best[len][u] = mpt::max(best[len][u], ExtendedRational(w));
        if (len == 6) return;
        for (std::size_t x = 0; x < n; ++x)
          if (a(u, x).is_finite()) go(x, len + 1, w + a(u, x).value());
      };
      go(i, 0, Rational(0));
      for (std::size_t len = 0; len <= 6; ++len)
        for (std::size_t j = 0; j < n; ++j)
          log.check(powers[len](i, j) == best[len][j],
                    "matrix " + std::to_string(t) + " n=" + std::to_string(len) + " entry mismatch");
    }
  }
}

void criterion7(Log& log) {
  const auto e3 = graph_of_matrix(generate_ek(3));
  log.check(exploration_penalty(e3) == 10, "ep(E_3) = " + std::to_string(exploration_penalty(e3)));
  log.check(oracle::exploration_penalty(e3, 1, 60) == 10, "definitional ep(E_3)");
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 8));
    const Digraph g = random_strongly_connected(rng, n, 0.12);
    const std::int64_t gamma = cyclicity(g);
    const std::int64_t gi = *girth(g);
    const std::int64_t ep = exploration_penalty(g);
    const auto b = ep_upper_bounds(static_cast<std::int64_t>(n), gi, gamma);
    const std::string tag = "graph " + std::to_string(t);
    log.check(gamma == oracle::cyclicity_by_cycles(g), tag + " cyclicity");
    log.check(ep == oracle::exploration_penalty(g, gamma, b.schwarz + 4 * gamma), tag + " ep differs from scan");
    const Rational nn(static_cast<long>(n)), gg(gi), cc(gamma);
    Rational second = 2 * gg / cc * nn - gg / cc - 2 * gg + cc;
    Rational first = nn + (nn - 2) * gg;
    log.check(Rational(ep) <= first && Rational(ep) <= second, tag + " girth bound");
    log.check(ep <= b.schwarz, tag + " Schwarz bound");
    // Residue property: all walk lengths i -> j up to 40 agree mod gamma.
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<char> cur(n, 0);
      cur[i] = 1;
      std::vector<std::int64_t> residue(n, -1);
      for (std::int64_t len = 0; len <= 40; ++len) {
        for (std::size_t j = 0; j < n; ++j)
          if (cur[j]) {
            if (residue[j] < 0) residue[j] = len % gamma;
            log.check(residue[j] == len % gamma, tag + " residue property");
          }
        std::vector<char> nxt(n, 0);
        for (std::size_t u = 0; u < n; ++u)
          if (cur[u])
            for (std::size_t w : g.successors(u)) nxt[w] = 1;
        cur = std::move(nxt);
      }
    }
  }
}

void criterion8(Log& log) {
  Rng rng(8);
  for (int t = 0; t < 300; ++t) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
    const Digraph g = random_walk_graph(rng, n);
    const Walk w = random_walk(rng, g, uniform_int(rng, 0, 60));
    const std::int64_t d = uniform_int(rng, 1, 6);
    const std::size_t k = w.nodes()[static_cast<std::size_t>(uniform_int(rng, 0, w.length()))];
    const Walk r = reduce(w, d, k);
    const std::string tag = "instance " + std::to_string(t);
    log.check(r.length() <= (d - 1) + 2 * d * (static_cast<std::int64_t>(n) - 1), tag + " length bound");
    log.check((w.length() - r.length()) % d == 0, tag + " residue mod d");
    log.check(r.visits(k), tag + " lost k");
    log.check(r.start() == w.start() && r.end() == w.end(), tag + " endpoints");
    log.check(r.lies_in(g), tag + " not a walk of G");
    log.check(!removable_pattern_exists_exhaustive(r, d, k), tag + " not a fixpoint");
  }
}

void criterion9(Log& log) {
  Rng rng(9);
  int simulated = 0;
  while (simulated < 100) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 8));
    Digraph g = random_acyclic(rng, n, 0.25);
    if (bernoulli(rng, 0.5)) {
      const auto d = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1));
      g.add_edge(d, d);
    }
    ++simulated;
    log.check(simulate_work(g, 40) == min_plus_work(g, 40), "simulation differs from min-plus iterates");
    if (!destinations(g).empty()) {
      const auto r = reversal_analysis(g, ReversalMode::routing);
      const auto bound = static_cast<std::int64_t>((n - 1) * (n - 1));
      log.check(r.termination_time && *r.termination_time <= bound, "general routing above (N-1)^2");
    }
  }
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 10));
    const Digraph tree = random_oriented_tree(rng, n);
    Digraph routed = tree;
    const auto d = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1));
    routed.add_edge(d, d);
    const auto r = reversal_analysis(routed, ReversalMode::routing);
    log.check(r.termination_time && *r.termination_time <= 2 * (static_cast<std::int64_t>(n) - 1),
              "tree routing above 2(N-1)");
    const auto s = reversal_analysis(tree, ReversalMode::scheduling);
    log.check(s.measurement.transient <= 4 * static_cast<std::int64_t>(n) - 3, "tree scheduling above 4N-3");
    log.check(s.bounds.params.lambda == ExtendedRational(-1, 2), "tree scheduling lambda");
    log.check(oracle::max_cycle_mean(s.system_matrix) == ExtendedRational(-1, 2), "lambda by cycle enumeration");
  }
}

void criterion10(Log& log) {
  Rng rng(10);
  for (int t = 0; t < 150; ++t) {
    RandomMatrixSpec spec;
    spec.n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
    spec.max_den = 3;
    const auto a = random_irreducible_matrix(rng, spec);
    const auto params = analyze_critical(a);
    const auto mb = matrix_bounds(params);
    const Rational mu = mu_supremum(a);
    const std::string tag = "matrix " + std::to_string(t);
    log.check(mu <= mb.mu_upper, tag + ": mu above ||A|| B1");
    // First n >= B1 past which every mu-truncated unit vector system is stable.
    std::int64_t n0 = mb.b_one;
    for (std::size_t j = 0; j < a.size(); ++j)
      n0 = std::max(n0, system_transient(a, params, MaxPlusVector::truncated_unit(a.size(), j, mu)).transient);
    const std::int64_t g = params.gamma_A;
    const Rational shift = params.lambda.value() * g;
    for (std::size_t j = 0; j < a.size(); ++j) {
      MaxPlusVector e(a.size());
      e[j] = 0L;
      const auto col = oracle::trajectory(a, e, n0 + 4 * g);
      for (std::int64_t n = n0; n <= n0 + 3 * g; ++n)
        log.check(oracle::shifted_equal(col[static_cast<std::size_t>(n + g)], col[static_cast<std::size_t>(n)], shift),
                  tag + ": A^(n+gamma) != A^n + gamma lambda past the truncated-vector transient");
    }
    log.check(matrix_transient(a, params).transient <= n0, tag + ": matrix transient above truncated-vector threshold");
  }
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Log&)>> criteria[] = {
      {"1 cherry H_{3,2}: 792, 5711, oracle <= 792", criterion1},
      {"2 cherry family B_c, lambda, lambda_nc", criterion2},
      {"3 scheduling example", criterion3},
      {"4 E_k bounds and incomparability", criterion4},
      {"5 random soundness suite", criterion5},
      {"6 powers equal brute-force walk maxima", criterion6},
      {"7 exploration penalty", criterion7},
      {"8 walk reduction", criterion8},
      {"9 Full Reversal", criterion9},
      {"10 matrix vs system via truncated unit vectors", criterion10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Log log;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(log);
    } catch (const std::exception& e) {
      log.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = log.failures() == 0;
    failed += !ok;
    std::printf("%s  %s  [%.2fs]", ok ? "PASS" : "FAIL", name, secs);
    if (!ok) std::printf("  (%d failures: %s)", log.failures(), log.message().c_str());
    if (!log.notes().empty()) std::printf("  {%s}", log.notes().c_str());
    std::printf("\n");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
