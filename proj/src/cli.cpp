#include "mpt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "mpt/bounds.hpp"
#include "mpt/critical.hpp"
#include "mpt/errors.hpp"
#include "mpt/exploration.hpp"
#include "mpt/families.hpp"
#include "mpt/io.hpp"
#include "mpt/oracle.hpp"
#include "mpt/report.hpp"
#include "mpt/reversal.hpp"
#include "mpt/scheduling.hpp"
#include "mpt/synchronizer.hpp"

namespace mpt {

namespace {

struct RunConfig {
  std::string matrix_path;
  std::string vector_path;
  std::string uniform_path;
  std::string graph_path;
  std::string out_path;
  std::string mode = "routing";
  std::string family;
  bool oracle = false;
  bool json = false;
  std::optional<std::int64_t> horizon;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::int64_t steps = 10;
  std::int64_t k = 3;
  std::int64_t l = 3;
  std::int64_t c = 2;
  std::size_t n = 5;
  double density = 0.5;
  std::int64_t lo = -5;
  std::int64_t hi = 5;
  std::int64_t den = 1;
  std::int64_t random_instances = 0;
};

OracleOptions oracle_options(const RunConfig& cfg) {
  OracleOptions o;
  o.horizon = cfg.horizon;
  return o;
}

std::string join(const MaxPlusVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return "(" + s + ")";
}

void print_measurement(std::ostream& out, const std::string& label, const TransientMeasurement& m) {
  out << label << ": transient " << m.transient << ", period " << m.period << ", ratio " << m.ratio;
  if (!m.verified) out << " [unverified: horizon " << m.scan_horizon << " below proven " << m.proven_bound << "]";
  out << '\n';
}

void print_params(std::ostream& out, const CriticalAnalysis& p) {
  out << "N = " << p.node_count << ", lambda = " << p.lambda << ", lambda_nc = " << p.lambda_nc << '\n';
  out << "critical nodes:";
  for (std::size_t u : p.critical_nodes) out << ' ' << u + 1;
  out << '\n';
  out << "g_hat = " << p.g_hat << ", gamma_hat = " << p.gamma_hat << ", ep_hat = " << p.ep_hat
      << ", ep(G) = " << (p.ep_G ? std::to_string(*p.ep_G) : "undefined") << '\n';
  out << "delta = " << p.delta << ", Delta = " << p.Delta << ", Delta_nc = " << p.Delta_nc << ", ||A|| = " << p.norm_A
      << '\n';
}

void print_system_bounds(std::ostream& out, const SystemBoundReport& b) {
  out << "system bounds (||v|| = " << rational_to_string(b.vector_norm) << "): critical " << rational_to_string(b.critical_bound)
      << ", repetitive " << rational_to_string(b.repetitive) << ", explorative " << rational_to_string(b.explorative)
      << '\n';
}

MaxPlusVector load_vector_or_zero(const RunConfig& cfg, std::size_t n) {
  if (cfg.vector_path.empty()) return MaxPlusVector(n, ExtendedRational(0L));
  MaxPlusVector v = parse_vector(read_file(cfg.vector_path));
  if (v.size() != n)
    throw InputError("vector has dimension " + std::to_string(v.size()) + " but the matrix has " + std::to_string(n));
  return v;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const MaxPlusMatrix a = parse_matrix(read_file(cfg.matrix_path));
  if (!is_irreducible(a))
    throw PreconditionError("matrix is reducible: transience bounds require an irreducible matrix (strongly connected G(A))");
  const MaxPlusVector v = load_vector_or_zero(cfg, a.size());
  const CriticalAnalysis params = analyze_critical(a);
  const SystemBoundReport sys = system_bounds(params, v);
  const MatrixBoundReport mat = matrix_bounds(params);
  std::optional<TransientMeasurement> sys_m, mat_m;
  if (cfg.oracle) {
    sys_m = system_transient(a, params, v, oracle_options(cfg));
    mat_m = matrix_transient(a, params, oracle_options(cfg));
  }
  if (cfg.json) {
    Json j;
    j["command"] = "analyze";
    j["v"] = to_json(v);
    j["critical_analysis"] = to_json(params);
    j["system_bounds"] = to_json(sys);
    j["matrix_bounds"] = to_json(mat);
    j["system_transient"] = sys_m ? to_json(*sys_m) : Json(nullptr);
    j["matrix_transient"] = mat_m ? to_json(*mat_m) : Json(nullptr);
    j["provenance"] = bounds_provenance();
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  print_params(out, params);
  print_system_bounds(out, sys);
  out << "matrix bounds: B1 " << mat.b_one << ", repetitive " << rational_to_string(mat.repetitive_matrix)
      << ", explorative " << rational_to_string(mat.explorative_matrix) << '\n';
  if (sys_m) print_measurement(out, "system oracle", *sys_m);
  if (mat_m) print_measurement(out, "matrix oracle", *mat_m);
  return kExitOk;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  MaxPlusMatrix a;
  if (cfg.family == "ek") {
    a = generate_ek(cfg.k);
  } else if (cfg.family == "cherry") {
    a = generate_cherry(cfg.l, cfg.c);
  } else if (cfg.family == "random") {
    if (cfg.n < 1 || cfg.n > 64) throw InputError("--n must be in 1..64");
    if (cfg.density <= 0 || cfg.density > 1) throw InputError("--density must be in (0, 1]");
    if (cfg.lo > cfg.hi) throw InputError("--lo must not exceed --hi");
    if (cfg.den < 1) throw InputError("--den must be positive");
    Rng rng(cfg.seed);
    RandomMatrixSpec spec;
    spec.n = cfg.n;
    spec.density = cfg.density;
    spec.min_density = std::min(0.4, cfg.density);
    spec.lo = cfg.lo;
    spec.hi = cfg.hi;
    spec.max_den = cfg.den;
    a = random_irreducible_matrix(rng, spec);
  } else {
    throw InputError("unknown family '" + cfg.family + "' (expected ek, cherry or random)");
  }
  const std::string text = format_matrix(a);
  if (cfg.out_path.empty())
    out << text;
  else
    write_file(cfg.out_path, text);
  return kExitOk;
}

int cmd_schedule(const RunConfig& cfg, std::ostream& out) {
  if (cfg.steps < 0) throw InputError("--steps must be nonnegative");
  const UniformGraph g = parse_uniform_graph(read_file(cfg.uniform_path));
  const ScheduleReport r = analyze_schedule(g, cfg.steps, oracle_options(cfg));
  if (cfg.json) {
    Json j = to_json(r);
    j["command"] = "schedule";
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "v = " << join(r.system.v) << '\n';
  print_params(out, r.bounds.params);
  print_system_bounds(out, r.bounds);
  print_measurement(out, "schedule", r.measurement);
  for (std::size_t n = 0; n < r.table.size(); ++n) {
    out << "t(., " << n << ") =";
    for (const auto& q : r.table[n]) out << ' ' << rational_to_string(q);
    out << '\n';
  }
  return kExitOk;
}

int cmd_sync(const RunConfig& cfg, std::ostream& out) {
  const MaxPlusMatrix a = parse_matrix(read_file(cfg.matrix_path));
  std::optional<MaxPlusVector> t0;
  if (!cfg.vector_path.empty()) t0 = load_vector_or_zero(cfg, a.size());
  const SynchronizerReport r = analyze_synchronizer(a, t0, cfg.oracle, oracle_options(cfg));
  if (cfg.json) {
    Json j = to_json(r);
    j["command"] = "sync";
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  print_params(out, r.bounds.params);
  print_system_bounds(out, r.bounds);
  if (r.cherry)
    out << "cherry H_{" << r.cherry->first << "," << r.cherry->second << "}: B_ER = " << *r.er_bound << '\n';
  if (r.measurement) print_measurement(out, "synchronizer", *r.measurement);
  return kExitOk;
}

int cmd_reversal(const RunConfig& cfg, std::ostream& out) {
  ReversalMode mode;
  if (cfg.mode == "routing")
    mode = ReversalMode::routing;
  else if (cfg.mode == "scheduling")
    mode = ReversalMode::scheduling;
  else
    throw InputError("--mode must be routing or scheduling");
  const Digraph g = parse_digraph(read_file(cfg.graph_path));
  const ReversalReport r = reversal_analysis(g, mode, oracle_options(cfg));
  if (!r.simulation_matches) throw InternalError("greedy simulation and min-plus iteration disagree");
  if (cfg.json) {
    Json j = to_json(r);
    j["command"] = "reversal";
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "mode " << cfg.mode << ", N = " << r.node_count << (r.tree ? " (tree)" : "") << '\n';
  print_measurement(out, "min-plus system", r.measurement);
  if (r.termination_time) out << "termination time " << *r.termination_time << '\n';
  out << "bound " << r.applicable_bound_name << " = " << rational_to_string(r.applicable_bound) << ": "
      << (r.within_bound ? "holds" : "VIOLATED") << '\n';
  if (r.lambda_check) out << "lambda = -1/2: " << (*r.lambda_check ? "yes" : "NO") << '\n';
  out << "simulation equals min-plus iteration for t <= " << r.checked_steps << '\n';
  return kExitOk;
}

// ---- selftest -------------------------------------------------------------

struct Check {
  std::string name;
  std::function<std::string()> run;  // empty string on success, else the reason
};

UniformGraph example_uniform_graph() {
  UniformGraph g;
  g.tasks = 7;
  auto e = [&](std::size_t s, std::size_t d, std::int64_t p, std::int64_t h) { g.edges.push_back({s - 1, d - 1, p, h}); };
  e(2, 1, 1, 0);
  e(1, 3, 2, 1);
  e(3, 2, 3, 0);
  e(3, 7, 2, 1);
  e(7, 6, 3, 0);
  e(6, 5, 1, 1);
  e(5, 4, 5, 0);
  e(4, 3, 2, 0);
  return g;
}

std::string expect_eq(const std::string& what, const Rational& got, const Rational& want) {
  if (got == want) return {};
  return what + " = " + rational_to_string(got) + ", expected " + rational_to_string(want);
}

std::vector<Check> fixture_checks() {
  std::vector<Check> checks;
  checks.push_back({"cherry H_{3,2} repetitive bound 792", [] {
                      const auto b = system_bounds(generate_cherry(3, 2), MaxPlusVector(12, ExtendedRational(0L)));
                      return expect_eq("repetitive", b.repetitive, 792);
                    }});
  checks.push_back({"cherry H_{3,2} B_ER 5711", [] { return expect_eq("B_ER", er_bound(3, 2), 5711); }});
  checks.push_back({"cherry H_{3,2} oracle transient <= 792", [] {
                      const auto m = system_transient(generate_cherry(3, 2), MaxPlusVector(12, ExtendedRational(0L)));
                      return m.transient <= 792 ? std::string() : "transient " + std::to_string(m.transient);
                    }});
  checks.push_back({"cherry family B_c = 12cl^3 + 9cl^2 - 3cl", [] {
                      for (std::int64_t l = 2; l <= 4; ++l)
                        for (std::int64_t c = 1; c <= 2; ++c) {
                          const auto b = system_bounds(generate_cherry(l, c),
                                                       MaxPlusVector(static_cast<std::size_t>(4 * l), ExtendedRational(0L)));
                          auto msg = expect_eq("B_c(" + std::to_string(l) + "," + std::to_string(c) + ")", b.critical_bound,
                                               12 * c * l * l * l + 9 * c * l * l - 3 * c * l);
                          if (!msg.empty()) return msg;
                        }
                      return std::string();
                    }});
  checks.push_back({"schedule example v, lambda, B_c 106, transient 1", [] {
                      const ScheduleReport r = analyze_schedule(example_uniform_graph(), 4);
                      const std::vector<long> want{0, 1, 4, 6, 11, 0, 3};
                      for (std::size_t i = 0; i < want.size(); ++i)
                        if (r.system.v[i] != ExtendedRational(want[i])) return "v = " + join(r.system.v);
                      if (r.bounds.params.lambda != ExtendedRational(Rational(13, 2)))
                        return "lambda = " + r.bounds.params.lambda.to_string();
                      auto msg = expect_eq("B_c", r.bounds.critical_bound, 106);
                      if (!msg.empty()) return msg;
                      return r.measurement.transient == 1 ? std::string()
                                                          : "transient " + std::to_string(r.measurement.transient);
                    }});
  for (std::int64_t k = 2; k <= 6; ++k) {
    checks.push_back({"E_" + std::to_string(k) + " bounds", [k] {
                        const auto b = system_bounds(generate_ek(k), MaxPlusVector(static_cast<std::size_t>(2 * k), ExtendedRational(0L)));
                        auto msg = expect_eq("B_c", b.critical_bound, 2 * k);
                        if (msg.empty()) msg = expect_eq("repetitive", b.repetitive, 4 * k * k - k - 1);
                        if (msg.empty() && b.explorative > 2 * k * k + 4 * k - 2)
                          msg = "explorative " + rational_to_string(b.explorative);
                        return msg;
                      }});
  }
  checks.push_back({"ep(E_3) = 10", [] {
                      const auto ep = exploration_penalty(graph_of_matrix(generate_ek(3)));
                      return ep == 10 ? std::string() : "ep = " + std::to_string(ep);
                    }});
  return checks;
}

std::vector<Check> random_checks(std::uint64_t seed, std::int64_t count) {
  std::vector<Check> checks;
  for (std::int64_t t = 0; t < count; ++t) {
    checks.push_back({"random instance " + std::to_string(t), [seed, t] {
                        Rng rng(seed * 1000003u + static_cast<std::uint64_t>(t));
                        RandomMatrixSpec spec;
                        spec.n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
                        spec.max_den = 3;
                        const MaxPlusMatrix a = random_irreducible_matrix(rng, spec);
                        const MaxPlusVector v = random_vector(rng, a.size(), -5, 5);
                        const auto params = analyze_critical(a);
                        const auto sb = system_bounds(params, v);
                        const auto mb = matrix_bounds(params);
                        const auto sm = system_transient(a, params, v);
                        const auto mm = matrix_transient(a, params);
                        if (sm.transient > sb.integer_bound) return "system transient " + std::to_string(sm.transient);
                        if (mm.transient > mb.integer_bound) return "matrix transient " + std::to_string(mm.transient);
                        return std::string();
                      }});
  }
  return checks;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  std::vector<Check> checks = fixture_checks();
  for (auto& c : random_checks(cfg.seed, cfg.random_instances)) checks.push_back(std::move(c));

  std::vector<std::string> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < checks.size();) {
      try {
        results[i] = checks[i].run();
      } catch (const std::exception& e) {
        results[i] = std::string("exception: ") + e.what();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(checks.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::size_t failed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const bool ok = results[i].empty();
    failed += !ok;
    out << (ok ? "PASS  " : "FAIL  ") << checks[i].name;
    if (!ok) out << "  (" << results[i] << ")";
    out << '\n';
  }
  out << checks.size() - failed << "/" << checks.size() << " passed\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Transience bounds and oracles for max-plus linear systems", "mpt"};
  app.require_subcommand(1, 1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "Emit a JSON report");
    sub->add_option("--horizon", cfg.horizon, "Oracle scan horizon override");
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    sub->add_option("--jobs", cfg.jobs, "Worker threads for suite runs")->check(CLI::PositiveNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "Critical analysis, bounds and (optionally) measured transients");
  analyze->add_option("--matrix", cfg.matrix_path, "Matrix file (tmx)")->required();
  analyze->add_option("--vector", cfg.vector_path, "Initial vector file (default: all zero)");
  analyze->add_flag("--oracle", cfg.oracle, "Measure transients");
  add_common(analyze);

  auto* generate = app.add_subcommand("generate", "Write a matrix of a named family");
  generate->add_option("family", cfg.family, "ek, cherry or random")->required();
  generate->add_option("--k", cfg.k, "E_k parameter");
  generate->add_option("--l", cfg.l, "Cherry size");
  generate->add_option("--c", cfg.c, "Cherry weight scale");
  generate->add_option("--n", cfg.n, "Random matrix dimension");
  generate->add_option("--density", cfg.density, "Probability of a finite entry");
  generate->add_option("--lo", cfg.lo, "Smallest weight");
  generate->add_option("--hi", cfg.hi, "Largest weight");
  generate->add_option("--den", cfg.den, "Largest denominator");
  generate->add_option("--out", cfg.out_path, "Output file (default: stdout)");
  add_common(generate);

  auto* schedule = app.add_subcommand("schedule", "Earliest schedule of a uniform graph");
  schedule->add_option("--uniform", cfg.uniform_path, "Uniform graph file")->required();
  schedule->add_option("--steps", cfg.steps, "Last iteration index of the schedule table");
  add_common(schedule);

  auto* sync = app.add_subcommand("sync", "Synchronizer round-start times");
  sync->add_option("--matrix", cfg.matrix_path, "Delay matrix (tmx)")->required();
  sync->add_option("--vector", cfg.vector_path, "Initial round-start times (default: all zero)");
  sync->add_flag("--oracle", cfg.oracle, "Measure the transient");
  add_common(sync);

  auto* reversal = app.add_subcommand("reversal", "Full Reversal routing or scheduling");
  reversal->add_option("--graph", cfg.graph_path, "Initial graph (digraph format, 'd d' marks a destination)")->required();
  reversal->add_option("--mode", cfg.mode, "routing or scheduling")->capture_default_str();
  add_common(reversal);

  auto* selftest = app.add_subcommand("selftest", "Run the fixture suite and print a pass/fail table");
  selftest->add_option("--random", cfg.random_instances, "Additional random soundness instances");
  add_common(selftest);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, out);
    if (*generate) return cmd_generate(cfg, out);
    if (*schedule) return cmd_schedule(cfg, out);
    if (*sync) return cmd_sync(cfg, out);
    if (*reversal) return cmd_reversal(cfg, out);
    if (*selftest) return cmd_selftest(cfg, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ResourceError& e) {
    err << "resource budget exceeded: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace mpt
