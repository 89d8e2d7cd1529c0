#include "oitdr/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oitdr/bounds.hpp"
#include "oitdr/checks.hpp"
#include "oitdr/families.hpp"
#include "oitdr/graph.hpp"
#include "oitdr/labeling.hpp"
#include "oitdr/reduction.hpp"
#include "oitdr/solver.hpp"
#include "oitdr/tree_dp.hpp"

namespace oitdr::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string family;
  long long budget_ms = 60000;
  bool sequential = false;
  bool canonical = false;
  bool tree = false;
  std::string format = "text";
  std::uint64_t seed = 1;
};

long long default_budget() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used == std::string_view(env).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw PreconditionError(std::string(kBudgetEnv) + " must be a non-negative integer");
  }
  return 60000;
}

void add_common(CLI::App& sub, Common& c, bool with_family = true) {
  if (with_family) {
    sub.add_option("--family", c.family, "Graph family spec, e.g. path:10 or corona:path:3");
  }
  sub.add_option("--budget-ms", c.budget_ms, "Solver time budget in ms (0 = unlimited)")
      ->check(CLI::NonNegativeNumber);
  sub.add_flag("--sequential", c.sequential, "Disable the parallel search");
  sub.add_flag("--canonical", c.canonical, "Report the lexicographically smallest optimal witness");
  sub.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub.add_option("--seed", c.seed, "Seed for random families given without one");
}

SolveOptions solve_options(const Common& c) {
  SolveOptions o;
  if (c.budget_ms > 0) o.time_budget = std::chrono::milliseconds(c.budget_ms);
  o.parallel = !c.sequential;
  o.canonical_witness = c.canonical;
  return o;
}

FamilySpec family_with_seed(const Common& c) {
  FamilySpec spec = parse_family_spec(c.family);
  if ((spec.family == Family::random_tree || spec.family == Family::random_connected) && spec.args.size() == 1) {
    spec.args.push_back(static_cast<long long>(c.seed));
  }
  return spec;
}

struct Source {
  std::string id;
  Graph graph;
};

Source load_graph(const Common& c, const std::string& path) {
  if (!c.family.empty() && !path.empty()) throw PreconditionError("give either a graph file or --family, not both");
  if (!c.family.empty()) {
    const auto spec = family_with_seed(c);
    return {spec.to_string(), generate(spec)};
  }
  if (path.empty()) throw PreconditionError("a graph file or --family is required");
  return {path, read_edge_list_file(path)};
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json edges_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.order()}, {"m", g.size()}, {"edges", std::move(edges)}};
}

std::string join(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// ---- parameters ---------------------------------------------------------

const std::vector<std::string> kParams{"oitdrd", "oidrd", "tdrd", "gamma", "gamma-t", "gamma-tcoi", "matching"};

struct Outcome {
  SolveStatus status = SolveStatus::infeasible;
  bool has_value = false;
  long long value = 0;
  std::vector<int> witness;  // labels, or a vertex set
  std::uint64_t nodes = 0;
  long long millis = 0;
};

Outcome from_solve(const SolveResult& r) {
  Outcome o;
  o.status = r.status;
  o.has_value = r.has_witness();
  o.value = r.weight;
  if (r.has_witness()) o.witness.assign(r.witness.labels().begin(), r.witness.labels().end());
  o.nodes = r.nodes_explored;
  o.millis = r.elapsed.count();
  return o;
}

Outcome from_set(const SetResult& r) {
  Outcome o;
  o.status = r.feasible ? SolveStatus::optimal : SolveStatus::infeasible;
  o.has_value = r.feasible;
  o.value = r.size;
  o.witness.assign(r.set.begin(), r.set.end());
  return o;
}

Outcome compute(const Graph& g, const std::string& param, const Common& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  if (c.tree && param != "oitdrd") throw PreconditionError("--tree applies to oitdrd only");
  if (param == "oitdrd") {
    o = from_solve(c.tree ? solve_tree(g) : solve_oitdrd(g, solve_options(c)));
  } else if (param == "oidrd") {
    o = from_solve(solve_oidrd(g, solve_options(c)));
  } else if (param == "tdrd") {
    o = from_solve(solve_tdrd(g, solve_options(c)));
  } else if (param == "gamma") {
    o = from_set(minimum_dominating_set(g));
  } else if (param == "gamma-t") {
    o = from_set(minimum_total_dominating_set(g));
  } else if (param == "gamma-tcoi") {
    o = from_set(minimum_total_coindependent_set(g));
  } else if (param == "matching") {
    const auto m = maximum_matching(g);
    o.status = SolveStatus::optimal;
    o.has_value = true;
    o.value = static_cast<long long>(m.size());
    for (auto [u, v] : m) {
      o.witness.push_back(u);
      o.witness.push_back(v);
    }
  } else {
    throw PreconditionError("unknown parameter " + param);
  }
  if (o.millis == 0) {
    o.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return o;
}

int status_exit(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return kOk;
    case SolveStatus::infeasible: return kNegative;
    case SolveStatus::budget_exceeded: return kBudget;
  }
  return kOk;
}

// ---- subcommands --------------------------------------------------------

int cmd_solve(const Common& c, const std::string& path, const std::string& param, std::ostream& out) {
  const auto src = load_graph(c, path);
  const auto o = compute(src.graph, param, c);
  if (c.format == "json") {
    Json result;
    result["feasible"] = o.status != SolveStatus::infeasible;
    result["weight"] = o.has_value ? Json(o.value) : Json(nullptr);
    result["witness"] = o.has_value ? Json(o.witness) : Json(nullptr);
    result["optimal"] = o.status == SolveStatus::optimal;
    Json doc;
    doc["graph"] = src.id;
    doc["n"] = src.graph.order();
    doc["param"] = param;
    doc["result"] = std::move(result);
    doc["stats"] = {{"nodes", o.nodes}, {"millis", o.millis}};
    out << doc.dump() << '\n';
  } else if (c.format == "csv") {
    out << "graph,n,param,value,status\n"
        << src.id << ',' << src.graph.order() << ',' << param << ','
        << (o.has_value ? std::to_string(o.value) : "") << ',' << status_name(o.status) << '\n';
  } else {
    out << param << " of " << src.id << ": ";
    if (o.has_value) {
      out << o.value << " (" << status_name(o.status) << ")\n";
      out << (param == "matching" ? "edges: " : param.rfind("gamma", 0) == 0 ? "set: " : "labels: ")
          << join(o.witness, ' ') << '\n';
    } else {
      out << status_name(o.status) << '\n';
    }
    out << "nodes " << o.nodes << ", " << o.millis << " ms\n";
  }
  return status_exit(o.status);
}

FunctionClass parse_class(const std::string& name) {
  for (auto c : {kDrdf, kTdrdf, kOidrdf, kOitdrdf}) {
    if (class_name(c) == name) return c;
  }
  throw PreconditionError("unknown function class " + name);
}

int cmd_check(const Common& c, const std::vector<std::string>& files, const std::string& cls,
              std::ostream& out) {
  std::string graph_path, label_path;
  if (files.size() == 2) {
    graph_path = files[0];
    label_path = files[1];
  } else if (files.size() == 1 && !c.family.empty()) {
    label_path = files[0];
  } else {
    throw PreconditionError("check needs a graph and a labeling file");
  }
  const auto src = load_graph(c, graph_path);
  const auto f = labeling_from_json(read_text(label_path));
  const auto fc = parse_class(cls);
  const auto verdict = check_function(src.graph, f, fc);
  const long long w = weight(f);
  if (c.format == "json") {
    Json doc;
    doc["class"] = class_name(fc);
    doc["valid"] = verdict.valid();
    doc["weight"] = w;
    doc["violation"] = verdict.valid() ? Json(nullptr)
                                       : Json{{"condition", condition_name(verdict.violation->condition)},
                                              {"vertex", verdict.violation->witness}};
    out << doc.dump() << '\n';
  } else if (c.format == "csv") {
    out << "class,valid,weight,condition,vertex\n" << class_name(fc) << ',' << (verdict.valid() ? "true" : "false")
        << ',' << w << ',';
    if (!verdict.valid()) out << condition_name(verdict.violation->condition) << ',' << verdict.violation->witness;
    else out << ',';
    out << '\n';
  } else if (verdict.valid()) {
    out << "valid, weight " << w << '\n';
  } else {
    out << "invalid: " << condition_name(verdict.violation->condition) << " fails at vertex "
        << verdict.violation->witness << ", weight " << w << '\n';
  }
  return verdict.valid() ? kOk : kNegative;
}

int cmd_bounds(const Common& c, const std::string& path, std::ostream& out) {
  const auto src = load_graph(c, path);
  const auto report = c.tree ? tree_bound_report(src.graph, src.id) : bound_report(src.graph, solve_options(c), src.id);
  if (c.format == "json") {
    out << report_to_json(report) << '\n';
  } else {
    out << report_to_csv(report);
    if (c.format == "text" && report.tree) {
      out << "stems " << report.tree->stems << ", corona " << (report.tree->is_corona ? "yes" : "no")
          << ", equality iff corona " << (report.tree->corona_equivalence ? "yes" : "no") << '\n';
    }
  }
  if (!report.all_hold() || (report.tree && !report.tree->corona_equivalence)) return kNegative;
  const bool unknown = std::any_of(report.rows.begin(), report.rows.end(),
                                   [](const BoundRow& r) { return r.applicable && !r.known; });
  return unknown ? kBudget : kOk;
}

int cmd_reduce(const Common& c, const std::string& path, std::optional<long long> k, int max_order,
               std::ostream& out) {
  const auto src = load_graph(c, path);
  const auto gm = build_gadget(src.graph);
  std::optional<ReductionVerdict> verdict;
  if (src.graph.order() <= max_order) {
    ReductionOptions ro;
    ro.max_order = max_order;
    ro.solve = solve_options(c);
    long long threshold = 0;
    if (k) {
      threshold = *k;
    } else {
      const auto r = solve_oidrd(src.graph, ro.solve);
      if (!r.optimal()) return kBudget;
      threshold = r.weight;
    }
    verdict = verify_reduction(src.graph, threshold, ro);
  }
  if (c.format == "json") {
    Json doc;
    doc["graph"] = src.id;
    doc["host"] = edges_json(gm.host);
    doc["gadget"] = Json::parse(gadget_to_json(gm));
    doc["verdict"] = verdict ? Json::parse(verdict_to_json(*verdict)) : Json(nullptr);
    out << doc.dump() << '\n';
  } else {
    out << to_edge_list(gm.host) << '\n' << gadget_to_json(gm) << '\n';
    if (verdict) out << verdict_to_json(*verdict) << '\n';
  }
  if (!verdict) return kOk;
  if ((verdict->forward_ok && !*verdict->forward_ok) || (verdict->backward_ok && !*verdict->backward_ok)) {
    return kNegative;
  }
  return verdict->complete() ? kOk : kBudget;
}

int cmd_family(const Common& c, std::ostream& out) {
  if (c.family.empty()) throw PreconditionError("family needs --family");
  const auto spec = family_with_seed(c);
  Json graphs = Json::array();
  bool first = true;
  for_each_member(spec, [&](const Graph& g) {
    if (c.format == "json") {
      graphs.push_back(edges_json(g));
    } else {
      if (!first) out << '\n';
      out << to_edge_list(g);
    }
    first = false;
  });
  if (c.format == "json") out << Json{{"family", spec.to_string()}, {"graphs", std::move(graphs)}}.dump() << '\n';
  return kOk;
}

int cmd_enumerate(const Common& c, const std::string& path, int max_order, std::ostream& out) {
  const auto src = load_graph(c, path);
  if (!admits_function(src.graph, kOitdrdf)) {
    out << (c.format == "json" ? "{\"feasible\":false}\n" : "infeasible\n");
    return kNegative;
  }
  EnumerationOptions eo;
  eo.max_order = max_order;
  const auto all = enumerate_optimal_oitdrdf(src.graph, eo);
  const long long w = all.empty() ? 0 : weight(all.front());
  auto labels = [](const Labeling& f) { return std::vector<int>(f.labels().begin(), f.labels().end()); };
  if (c.format == "json") {
    Json list = Json::array();
    for (const auto& f : all) list.push_back(labels(f));
    Json doc;
    doc["graph"] = src.id;
    doc["feasible"] = true;
    doc["weight"] = w;
    doc["count"] = all.size();
    doc["labelings"] = std::move(list);
    out << doc.dump() << '\n';
  } else if (c.format == "csv") {
    out << "index,weight,labels\n";
    for (std::size_t i = 0; i < all.size(); ++i) out << i << ',' << w << ',' << join(labels(all[i]), ' ') << '\n';
  } else {
    out << "weight " << w << ", " << all.size() << " optimal labelings\n";
    for (const auto& f : all) out << join(labels(f), ' ') << '\n';
  }
  return kOk;
}

int cmd_bench(const Common& c, const std::vector<std::string>& files, const std::string& params_text,
              std::ostream& out) {
  std::vector<std::string> params;
  std::stringstream ss(params_text);
  for (std::string p; std::getline(ss, p, ',');) {
    if (std::find(kParams.begin(), kParams.end(), p) == kParams.end()) throw PreconditionError("unknown parameter " + p);
    params.push_back(p);
  }
  if (params.empty()) throw PreconditionError("bench needs at least one parameter");
  std::vector<Source> corpus;
  if (!c.family.empty()) {
    const auto spec = family_with_seed(c);
    int index = 0;
    for_each_member(spec, [&](const Graph& g) {
      std::string id = spec.to_string();
      if (spec.streams()) id += "#" + std::to_string(index);
      corpus.push_back({std::move(id), g});
      ++index;
    });
  }
  for (const auto& f : files) corpus.push_back({f, read_edge_list_file(f)});
  if (corpus.empty()) throw PreconditionError("bench needs --family or graph files");

  int code = kOk;
  Json rows = Json::array();
  if (c.format != "json") out << "graph,n,param,value,nodes,millis\n";
  for (const auto& src : corpus) {
    for (const auto& p : params) {
      const auto o = compute(src.graph, p, c);
      if (o.status == SolveStatus::budget_exceeded) code = kBudget;
      if (c.format == "json") {
        rows.push_back({{"graph", src.id},
                        {"n", src.graph.order()},
                        {"param", p},
                        {"value", o.status == SolveStatus::optimal ? Json(o.value) : Json(nullptr)},
                        {"stats", {{"nodes", o.nodes}, {"millis", o.millis}}}});
      } else {
        out << src.id << ',' << src.graph.order() << ',' << p << ','
            << (o.status == SolveStatus::optimal ? std::to_string(o.value) : "") << ',' << o.nodes << ','
            << o.millis << '\n';
      }
    }
  }
  if (c.format == "json") out << rows.dump() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Outer-independent total double Roman domination toolkit", "oitdr"};
  app.require_subcommand(1);

  Common c;
  try {
    c.budget_ms = default_budget();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::string path;
  std::string param = "oitdrd";
  auto* solve = app.add_subcommand("solve", "Exact value of a domination parameter");
  solve->add_option("graph", path, "Edge-list file");
  solve->add_option("--param", param, "Parameter")->check(CLI::IsMember(kParams));
  solve->add_flag("--tree", c.tree, "Use the linear-time tree algorithm");
  add_common(*solve, c);

  std::vector<std::string> files;
  std::string cls = "oitdrdf";
  auto* check = app.add_subcommand("check", "Validate a labeling against a graph");
  check->add_option("files", files, "Graph file and labeling JSON file")->expected(1, 2);
  check->add_option("--class", cls, "Function class")->check(CLI::IsMember({"drdf", "tdrdf", "oidrdf", "oitdrdf"}));
  add_common(*check, c);

  auto* bounds = app.add_subcommand("bounds", "Evaluate the upper and lower bounds");
  bounds->add_option("graph", path, "Edge-list file");
  bounds->add_flag("--tree", c.tree, "Tree bounds via the tree algorithm");
  add_common(*bounds, c);

  std::optional<long long> k;
  int reduce_max = 3;
  auto* reduce = app.add_subcommand("reduce", "Build the hardness gadget and verify it");
  reduce->add_option("graph", path, "Edge-list file");
  reduce->add_option("-k", k, "Threshold (default: the OIDRD number of the input)");
  reduce->add_option("--max-order", reduce_max, "Verify only inputs up to this order")->check(CLI::Range(0, 8));
  add_common(*reduce, c);

  auto* family = app.add_subcommand("family", "Emit a generated graph family as edge lists");
  add_common(*family, c);

  int enum_max = EnumerationOptions{}.max_order;
  auto* enumerate = app.add_subcommand("enumerate", "List every optimal labeling");
  enumerate->add_option("graph", path, "Edge-list file");
  enumerate->add_option("--max-order", enum_max, "Refuse larger graphs")->check(CLI::Range(0, 16));
  add_common(*enumerate, c);

  std::string params = "oitdrd";
  auto* bench = app.add_subcommand("bench", "CSV timings over a corpus");
  bench->add_option("graphs", files, "Edge-list files");
  bench->add_option("--params", params, "Comma-separated parameters");
  bench->add_flag("--tree", c.tree, "Use the tree algorithm for oitdrd");
  add_common(*bench, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(c, path, param, out);
    if (check->parsed()) return cmd_check(c, files, cls, out);
    if (bounds->parsed()) return cmd_bounds(c, path, out);
    if (reduce->parsed()) return cmd_reduce(c, path, k, reduce_max, out);
    if (family->parsed()) return cmd_family(c, out);
    if (enumerate->parsed()) return cmd_enumerate(c, path, enum_max, out);
    if (bench->parsed()) return cmd_bench(c, files, params, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace oitdr::cli
