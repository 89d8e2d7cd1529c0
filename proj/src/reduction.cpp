#include "oitdr/reduction.hpp"

#include <json.hpp>

#include "oitdr/checks.hpp"

namespace oitdr {

GadgetMap build_gadget(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw PreconditionError("gadget needs at least one vertex");
  GadgetMap gm;
  gm.original_order = n;
  auto edges = g.edges();
  for (Vertex x = 0; x < n; ++x) {
    const Vertex base = n + 5 * x;
    GadgetStar s{x, base, base + 1, base + 2, base + 3, base + 4};
    edges.emplace_back(s.u, s.a);
    edges.emplace_back(s.u, s.b);
    edges.emplace_back(s.u, s.c);
    edges.emplace_back(s.u, s.d);
    edges.emplace_back(s.a, s.x);
    gm.stars.push_back(s);
  }
  gm.host = Graph::from_edges(6 * n, edges);
  return gm;
}

std::string gadget_to_json(const GadgetMap& gm) {
  nlohmann::ordered_json doc;
  doc["original_order"] = gm.original_order;
  doc["host_order"] = gm.host.order();
  doc["host_size"] = gm.host.size();
  auto stars = nlohmann::ordered_json::array();
  for (const auto& s : gm.stars) {
    stars.push_back({{"x", s.x}, {"u", s.u}, {"a", s.a}, {"b", s.b}, {"c", s.c}, {"d", s.d}});
  }
  doc["stars"] = std::move(stars);
  return doc.dump();
}

Labeling lift_oidrdf(const Graph& g, const Labeling& f, const GadgetMap& gm) {
  if (gm.original_order != g.order()) throw PreconditionError("gadget map was built for another graph");
  if (!check_oidrdf(g, f)) throw PreconditionError("labeling is not an OIDRDF of the original graph");
  std::vector<Label> labels(gm.host.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) labels[v] = f[v];
  for (const auto& s : gm.stars) {
    labels[s.u] = 3;
    labels[s.a] = 1;
  }
  return Labeling(std::move(labels));
}

ReductionVerdict verify_reduction(const Graph& g, long long k, const ReductionOptions& opts) {
  if (g.order() > opts.max_order) {
    throw PreconditionError("reduction check limited to graphs of order <= " + std::to_string(opts.max_order));
  }
  ReductionVerdict v;
  v.k = k;
  v.offset = 4LL * g.order();
  const auto gm = build_gadget(g);
  const auto small = solve_oidrd(g, opts.solve);
  const auto host = solve_oitdrd(gm.host, opts.solve);
  if (small.optimal()) v.gamma_oidr = small.weight;
  if (host.optimal()) v.gamma_host = host.weight;

  const long long target = k + v.offset;
  // Upper bounds are decisive even without optimality.
  const bool small_le = small.has_witness() && small.weight <= k;
  const bool host_le = host.has_witness() && host.weight <= target;
  if (v.gamma_oidr && v.gamma_host) {
    v.forward_ok = !(*v.gamma_oidr <= k) || *v.gamma_host <= target;
    v.backward_ok = !(*v.gamma_host <= target) || *v.gamma_oidr <= k;
  } else {
    if (host_le || (v.gamma_oidr && *v.gamma_oidr > k)) v.forward_ok = true;
    if (small_le || (v.gamma_host && *v.gamma_host > target)) v.backward_ok = true;
  }
  return v;
}

std::string verdict_to_json(const ReductionVerdict& v) {
  nlohmann::ordered_json doc;
  doc["k"] = v.k;
  doc["offset"] = v.offset;
  doc["gamma_oidr"] = v.gamma_oidr ? nlohmann::ordered_json(*v.gamma_oidr) : nlohmann::ordered_json(nullptr);
  doc["gamma_host"] = v.gamma_host ? nlohmann::ordered_json(*v.gamma_host) : nlohmann::ordered_json(nullptr);
  doc["forward_ok"] = v.forward_ok ? nlohmann::ordered_json(*v.forward_ok) : nlohmann::ordered_json(nullptr);
  doc["backward_ok"] = v.backward_ok ? nlohmann::ordered_json(*v.backward_ok) : nlohmann::ordered_json(nullptr);
  doc["complete"] = v.complete();
  return doc.dump();
}

}  // namespace oitdr
