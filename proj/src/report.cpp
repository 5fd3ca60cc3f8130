#include "mpt/report.hpp"

namespace mpt {

namespace {

Json nodes_json(const std::vector<std::size_t>& nodes) {
  Json out = Json::array();
  for (std::size_t u : nodes) out.push_back(u + 1);
  return out;
}

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& [u, v] : edges) out.push_back(Json::array({u + 1, v + 1}));
  return out;
}

}  // namespace

Json to_json(const ExtendedRational& x) { return x.to_string(); }

Json to_json(const Rational& q) { return rational_to_string(q); }

Json to_json(const MaxPlusMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(a(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const MaxPlusVector& v) {
  Json out = Json::array();
  for (const auto& x : v.entries()) out.push_back(x.to_string());
  return out;
}

Json to_json(const CriticalAnalysis& p) {
  Json comps = Json::array();
  for (const auto& c : p.components)
    comps.push_back({{"nodes", nodes_json(c.nodes)},
                     {"girth", c.girth},
                     {"cyclicity", c.cyclicity},
                     {"exploration_penalty", c.exploration_penalty}});
  Json ep_comps = Json::array();
  for (const auto& [nodes, ep] : p.ep_per_component)
    ep_comps.push_back({{"nodes", nodes_json(nodes)}, {"exploration_penalty", ep}});
  Json j;
  j["N"] = p.node_count;
  j["irreducible"] = p.irreducible;
  j["lambda"] = to_json(p.lambda);
  j["critical_nodes"] = nodes_json(p.critical_nodes);
  j["critical_edges"] = edges_json(p.critical_edges);
  j["critical_components"] = std::move(comps);
  j["g_hat"] = p.g_hat;
  j["gamma_hat"] = p.gamma_hat;
  j["ep_hat"] = p.ep_hat;
  j["gamma_A"] = p.gamma_A;
  j["gamma_G"] = p.gamma_G;
  j["ep_G"] = p.ep_G ? Json(*p.ep_G) : Json(nullptr);
  j["ep_per_component"] = std::move(ep_comps);
  j["lambda_nc"] = to_json(p.lambda_nc);
  j["delta"] = to_json(p.delta);
  j["Delta"] = to_json(p.Delta);
  j["Delta_nc"] = to_json(p.Delta_nc);
  j["norm_A"] = to_json(p.norm_A);
  j["N_nc"] = p.n_nc;
  return j;
}

Json to_json(const SystemBoundReport& r) {
  Json j;
  j["vector_norm"] = to_json(r.vector_norm);
  j["critical"] = to_json(r.critical_bound);
  j["critical_unclamped"] = to_json(r.critical_bound_unclamped);
  j["repetitive_term"] = to_json(r.repetitive_term);
  j["explorative_term"] = to_json(r.explorative_term);
  j["repetitive"] = to_json(r.repetitive);
  j["explorative"] = to_json(r.explorative);
  j["best"] = to_json(r.best);
  j["integer_bound"] = r.integer_bound;
  return j;
}

Json to_json(const MatrixBoundReport& r) {
  Json j;
  j["B1"] = r.b_one;
  j["mu_upper"] = to_json(r.mu_upper);
  j["critical_term"] = to_json(r.critical_term);
  j["repetitive"] = to_json(r.repetitive_matrix);
  j["explorative"] = to_json(r.explorative_matrix);
  j["best"] = to_json(r.best);
  j["integer_bound"] = r.integer_bound;
  return j;
}

Json to_json(const TransientMeasurement& m) {
  Json j;
  j["transient"] = m.transient;
  j["period"] = m.period;
  j["ratio"] = to_json(m.ratio);
  j["proven_bound"] = m.proven_bound;
  j["scan_horizon"] = m.scan_horizon;
  j["witness"] = m.witness ? Json(*m.witness) : Json(nullptr);
  j["confirmed_steps"] = m.confirmed_steps;
  j["verified"] = m.verified;
  return j;
}

Json bounds_provenance() {
  Json j;
  j["critical"] = "B_c = max{N, (||v|| + (max{Delta_nc, lambda} - delta)(N-1)) / (lambda - lambda_nc)}; fraction is 0 when lambda_nc = -inf; critical_unclamped uses Delta_nc as is";
  j["repetitive"] = "max{B_c, (g_hat - 1) + 2 g_hat (N-1)}";
  j["explorative"] = "max{B_c, (gamma_hat - 1) + 2 gamma_hat (N-1) + ep_hat}";
  j["matrix"] =
      "B1 = 2(N-1) + ep_hat + (ep(G) + gamma_hat - 1); matrix bound = max{B1, (||A|| B1 + (max{Delta_nc, lambda} - delta)(N-1)) / "
      "(lambda - lambda_nc), repetitive or explorative term}";
  j["B1_note"] = "the additive B1 term is kept as a guard for the transient of the truncated unit vectors";
  j["literature"] =
      "Hartmann and Arguelles give exponential-type bounds; the bounds here are polynomial in N for fixed ||A|| / "
      "(lambda - lambda_nc)";
  j["integer_bound"] = "least integer B >= the critical threshold and the pumping term; the threshold is ceil of the fraction when Delta_nc > lambda and floor + 1 otherwise";
  j["transient"] = "least n with x(n + p) = x(n) + p lambda, p = gamma(A); proven stable thereafter";
  return j;
}

Json to_json(const ScheduleReport& r) {
  Json table = Json::array();
  for (const auto& row : r.table) {
    Json jr = Json::array();
    for (const auto& q : row) jr.push_back(rational_to_string(q));
    table.push_back(std::move(jr));
  }
  Json j;
  j["tasks"] = r.transformed.tasks;
  j["restrictions_after_transform"] = r.transformed.edges.size();
  j["A"] = to_json(r.system.a);
  j["v"] = to_json(r.system.v);
  j["critical_analysis"] = to_json(r.bounds.params);
  j["system_bounds"] = to_json(r.bounds);
  j["measurement"] = to_json(r.measurement);
  j["schedule"] = std::move(table);
  j["provenance"] = bounds_provenance();
  return j;
}

Json to_json(const SynchronizerReport& r) {
  Json j;
  j["N"] = r.system.a.size();
  j["t0"] = to_json(r.system.v);
  j["critical_analysis"] = to_json(r.bounds.params);
  j["system_bounds"] = to_json(r.bounds);
  j["measurement"] = r.measurement ? to_json(*r.measurement) : Json(nullptr);
  if (r.cherry) {
    j["cherry"] = {{"l", r.cherry->first}, {"c", r.cherry->second}};
    j["B_ER"] = *r.er_bound;
  } else {
    j["cherry"] = nullptr;
    j["B_ER"] = nullptr;
  }
  j["provenance"] = bounds_provenance();
  if (r.cherry) j["provenance"]["B_ER"] = "l0 + 2N^2 + N with l0 = 112 c l^3 - 16 l^3 - 12 c l^2 + 4 l - 1";
  return j;
}

Json to_json(const ReversalReport& r) {
  Json j;
  j["mode"] = r.mode == ReversalMode::routing ? "routing" : "scheduling";
  j["N"] = r.node_count;
  j["tree"] = r.tree;
  j["orientation"] = "initial edge u->v gives A(v,u) = 1 and A(u,v) = 0; destination d gives A(d,d) = 0";
  j["critical_analysis"] = to_json(r.bounds.params);
  j["system_bounds"] = to_json(r.bounds);
  j["measurement"] = to_json(r.measurement);
  j["termination_time"] = r.termination_time ? Json(*r.termination_time) : Json(nullptr);
  j["final_work"] = r.final_work;
  j["applicable_bound"] = {{"formula", r.applicable_bound_name}, {"value", to_json(r.applicable_bound)}};
  j["within_bound"] = r.within_bound;
  j["lambda_check"] = r.lambda_check ? Json(*r.lambda_check) : Json(nullptr);
  j["simulation_matches_min_plus"] = {{"steps", r.checked_steps}, {"equal", r.simulation_matches}};
  j["provenance"] = bounds_provenance();
  return j;
}

}  // namespace mpt
