#include "oitdr/bounds.hpp"

#include <json.hpp>

#include <algorithm>

#include "oitdr/checks.hpp"
#include "oitdr/tree_dp.hpp"

namespace oitdr {

bool BoundReport::all_hold() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const BoundRow& r) { return !r.applicable || !r.known || r.holds; });
}

const BoundRow* BoundReport::find(std::string_view name) const {
  for (const auto& r : rows) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

namespace {

BoundRow evaluated(std::string name, Rational lhs, Rational rhs) {
  BoundRow row;
  row.name = std::move(name);
  row.lhs = lhs;
  row.rhs = rhs;
  row.holds = lhs <= rhs;
  row.tight = lhs == rhs;
  row.applicable = true;
  row.preconditions_met = true;
  return row;
}

BoundRow skipped(std::string name, bool preconditions_met) {
  BoundRow row;
  row.name = std::move(name);
  row.preconditions_met = preconditions_met;
  return row;
}

BoundRow unknown(std::string name) {
  BoundRow row;
  row.name = std::move(name);
  row.preconditions_met = true;
  row.applicable = true;
  row.known = false;
  return row;
}

}  // namespace

BoundReport bound_report(const Graph& g, const SolveOptions& opts, std::string graph_id) {
  if (g.order() < 2 || !is_connected(g)) {
    throw PreconditionError("bound report needs a connected graph of order >= 2");
  }
  BoundReport report;
  report.graph_id = std::move(graph_id);

  const long long p = g.order();
  const auto oitd = solve_oitdrd(g, opts);
  const auto oid = solve_oidrd(g, opts);
  const bool gamma_known = oitd.optimal();
  const bool oid_known = oid.optimal();
  const Rational gamma(gamma_known ? oitd.weight : 0);
  const long long matching = matching_number(g);
  const long long dom = domination_number(g);
  const long long tcoi = total_coindependent_number(g);
  const long long max_deg = g.max_degree();

  auto add = [&](std::string name, bool pre, bool needs_oid, auto lhs, auto rhs) {
    if (!pre) {
      report.rows.push_back(skipped(std::move(name), false));
    } else if (!gamma_known || (needs_oid && !oid_known)) {
      report.rows.push_back(unknown(std::move(name)));
    } else {
      report.rows.push_back(evaluated(std::move(name), lhs(), rhs()));
    }
  };

  auto gamma_fn = [&] { return gamma; };
  add("matching_upper", true, false, gamma_fn, [&] { return Rational(p + matching); });
  const bool tri_free = is_triangle_free(g) && g.min_degree() >= 2;
  add("triangle_free_upper", tri_free, false, gamma_fn, [&] { return Rational(3 * matching); });
  add("half_order_upper", true, false, gamma_fn, [&] { return Rational(3 * p, 2); });
  add("oidr_lower", true, true, [&] { return Rational(oid.weight); }, gamma_fn);
  add("oidr_upper", true, true, gamma_fn, [&] { return Rational(2 * oid.weight - dom); });

  if (tcoi < 0) {
    report.rows.push_back(skipped("tcoi_lower", true));
    report.rows.push_back(skipped("degree_lower", true));
  } else {
    add("tcoi_lower", true, false, [&] { return Rational(tcoi + dom); }, gamma_fn);
    add("degree_lower", true, false,
        [&] { return Rational(2 * p + (max_deg - 2) * tcoi + dom, max_deg); }, gamma_fn);
  }

  const long long m = regular_degree(g);
  const bool girth8 = m >= 2 && girth(g) >= 8;
  add("regular_girth8_upper", girth8, false, gamma_fn,
      [&] { return Rational(2 * (p - 2 * m * m + 3 * m - 1)); });
  return report;
}

bool is_corona(const Graph& g) {
  const int n = g.order();
  if (n == 2) return g.size() == 1;
  if (n < 2 || n % 2 != 0) return false;
  std::vector<Vertex> stems;
  int leaves = 0;
  for (Vertex v = 0; v < n; ++v) {
    int leaf_nbrs = 0;
    for (Vertex w : g.neighbors(v)) leaf_nbrs += g.degree(w) == 1;
    const bool leaf = g.degree(v) == 1;
    if (leaf) {
      ++leaves;
      if (leaf_nbrs != 0) return false;  // only possible in K2
    } else if (leaf_nbrs == 1) {
      stems.push_back(v);
    } else {
      return false;
    }
  }
  if (leaves != static_cast<int>(stems.size())) return false;
  return is_connected(induced_subgraph(g, stems));
}

BoundReport tree_bound_report(const Graph& tree, std::string graph_id) {
  if (!is_tree(tree) || tree.order() < 3) throw PreconditionError("tree bound report needs a tree with p >= 3");
  BoundReport report;
  report.graph_id = std::move(graph_id);
  const long long p = tree.order();
  const auto cls = classify_vertices(tree);
  const auto result = solve_tree(tree);
  const Rational gamma(result.weight);
  report.rows.push_back(evaluated("stem_upper", gamma, Rational(6 * p + 3 * cls.stems, 5)));
  report.rows.push_back(evaluated("half_order_upper", gamma, Rational(3 * p, 2)));
  TreeFacts facts;
  facts.stems = cls.stems;
  facts.is_corona = is_corona(tree);
  facts.corona_equivalence = report.rows.back().tight == facts.is_corona;
  report.tree = facts;
  return report;
}

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string report_to_csv(const BoundReport& report) {
  std::string out = "name,lhs,rhs,holds,tight,applicable\n";
  auto flag = [](bool b) { return b ? "true" : "false"; };
  for (const auto& row : report.rows) {
    const bool verdict = row.applicable && row.known;
    out += row.name;
    out += ',';
    out += verdict ? rational_to_string(row.lhs) : "";
    out += ',';
    out += verdict ? rational_to_string(row.rhs) : "";
    out += ',';
    out += verdict ? flag(row.holds) : "";
    out += ',';
    out += verdict ? flag(row.tight) : "";
    out += ',';
    out += flag(row.applicable);
    out += '\n';
  }
  return out;
}

std::string report_to_json(const BoundReport& report) {
  nlohmann::ordered_json doc;
  doc["graph"] = report.graph_id;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r;
    r["name"] = row.name;
    const bool verdict = row.applicable && row.known;
    r["lhs"] = verdict ? nlohmann::ordered_json(rational_to_string(row.lhs)) : nlohmann::ordered_json(nullptr);
    r["rhs"] = verdict ? nlohmann::ordered_json(rational_to_string(row.rhs)) : nlohmann::ordered_json(nullptr);
    r["holds"] = verdict ? nlohmann::ordered_json(row.holds) : nlohmann::ordered_json(nullptr);
    r["tight"] = verdict ? nlohmann::ordered_json(row.tight) : nlohmann::ordered_json(nullptr);
    r["applicable"] = row.applicable;
    r["preconditions_met"] = row.preconditions_met;
    r["known"] = row.known;
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  if (report.tree) {
    doc["tree"] = {{"stems", report.tree->stems},
                   {"is_corona", report.tree->is_corona},
                   {"corona_equivalence", report.tree->corona_equivalence}};
  }
  doc["all_hold"] = report.all_hold();
  return doc.dump();
}

}  // namespace oitdr
