#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mpt/bounds.hpp"
#include "mpt/critical.hpp"
#include "mpt/errors.hpp"
#include "mpt/exploration.hpp"
#include "mpt/families.hpp"
#include "mpt/graph.hpp"
#include "mpt/io.hpp"
#include "mpt/oracle.hpp"
#include "mpt/report.hpp"
#include "mpt/reversal.hpp"
#include "mpt/scheduling.hpp"
#include "mpt/synchronizer.hpp"
#include "mpt/walk.hpp"

namespace py = pybind11;
using namespace mpt;

namespace {

// Entries arrive as strings ("3", "-5/2", "-inf"); the Python layer normalizes them.
using Rows = std::vector<std::vector<std::string>>;

ExtendedRational entry(const std::string& s) {
  auto x = ExtendedRational::try_parse(s);
  if (!x) throw InputError("malformed entry '" + s + "'");
  return *x;
}

MaxPlusMatrix to_matrix(const Rows& rows) {
  if (rows.empty()) throw InputError("matrix must have at least one row");
  MaxPlusMatrix a(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw InputError("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) a(i, j) = entry(rows[i][j]);
  }
  return a;
}

MaxPlusVector to_vector(const std::optional<std::vector<std::string>>& v, std::size_t n) {
  if (!v) return MaxPlusVector(n, ExtendedRational(0L));
  if (v->size() != n) throw InputError("vector length does not match the matrix");
  MaxPlusVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = entry((*v)[i]);
  return out;
}

Rows from_matrix(const MaxPlusMatrix& a) {
  Rows rows(a.size(), std::vector<std::string>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) rows[i][j] = a(i, j).to_string();
  return rows;
}

Digraph to_digraph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Digraph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw InputError("edge endpoint out of range");
    g.add_edge(u, v);
  }
  return g;
}

void require_irreducible(const MaxPlusMatrix& a) {
  if (!is_irreducible(a)) throw PreconditionError("matrix is reducible: transience bounds require an irreducible matrix");
}

std::string analyze(const Rows& rows, const std::optional<std::vector<std::string>>& v, bool oracle) {
  const auto a = to_matrix(rows);
  require_irreducible(a);
  const auto x = to_vector(v, a.size());
  const auto params = analyze_critical(a);
  Json j;
  j["critical_analysis"] = to_json(params);
  j["system_bounds"] = to_json(system_bounds(params, x));
  j["matrix_bounds"] = to_json(matrix_bounds(params));
  j["system_transient"] = oracle ? to_json(system_transient(a, params, x)) : Json(nullptr);
  j["matrix_transient"] = oracle ? to_json(matrix_transient(a, params)) : Json(nullptr);
  return j.dump();
}

UniformGraph to_uniform(std::size_t tasks, const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t, std::int64_t>>& edges) {
  UniformGraph g;
  g.tasks = tasks;
  for (const auto& [s, d, w, h] : edges) {
    if (s >= tasks || d >= tasks) throw InputError("edge endpoint out of range");
    g.edges.push_back({s, d, w, h});
  }
  return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact max-plus transience bounds and oracles";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.def("max_cycle_mean", [](const Rows& a) { return max_cycle_mean(to_matrix(a)).to_string(); });
  m.def("is_irreducible", [](const Rows& a) { return is_irreducible(to_matrix(a)); });
  m.def("analyze", &analyze, py::arg("matrix"), py::arg("vector") = py::none(), py::arg("oracle") = false);
  m.def(
      "power",
      [](const Rows& a, std::int64_t n) {
        if (n < 0) throw InputError("power must be nonnegative");
        return from_matrix(mat_power(to_matrix(a), n));
      },
      py::arg("matrix"), py::arg("n"));

  m.def("exploration_penalty", [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    return exploration_penalty(to_digraph(n, edges));
  });
  m.def(
      "reduce_walk",
      [](std::vector<std::size_t> nodes, std::int64_t d, std::size_t k) {
        if (nodes.empty()) throw InputError("walk needs a start node");
        if (d < 1) throw InputError("d must be positive");
        return reduce(Walk::from_nodes(std::move(nodes)), d, k).nodes();
      },
      py::arg("nodes"), py::arg("d"), py::arg("k"));

  m.def("generate_ek", [](std::int64_t k) { return from_matrix(generate_ek(k)); });
  m.def("generate_cherry", [](std::int64_t l, std::int64_t c) { return from_matrix(generate_cherry(l, c)); });
  m.def("er_bound", &er_bound);

  m.def(
      "schedule",
      [](std::size_t tasks, const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t, std::int64_t>>& edges,
         std::int64_t steps) {
        if (steps < 0) throw InputError("steps must be nonnegative");
        return to_json(analyze_schedule(to_uniform(tasks, edges), steps)).dump();
      },
      py::arg("tasks"), py::arg("edges"), py::arg("steps"));
  m.def(
      "sync",
      [](const Rows& delays, const std::optional<std::vector<std::string>>& t0, bool oracle) {
        const auto a = to_matrix(delays);
        std::optional<MaxPlusVector> v;
        if (t0) v = to_vector(t0, a.size());
        return to_json(analyze_synchronizer(a, v, oracle)).dump();
      },
      py::arg("delays"), py::arg("t0") = py::none(), py::arg("oracle") = false);
  m.def(
      "reversal",
      [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges, const std::string& mode) {
        if (mode != "routing" && mode != "scheduling") throw InputError("mode must be 'routing' or 'scheduling'");
        const auto g = to_digraph(n, edges);
        validate_reversal_graph(g);
        return to_json(reversal_analysis(g, mode == "routing" ? ReversalMode::routing : ReversalMode::scheduling)).dump();
      },
      py::arg("n"), py::arg("edges"), py::arg("mode") = "routing");
  m.def("simulate_work", [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                            std::int64_t steps) {
    if (steps < 0) throw InputError("steps must be nonnegative");
    const auto g = to_digraph(n, edges);
    validate_reversal_graph(g);
    return simulate_work(g, steps);
  });
}
