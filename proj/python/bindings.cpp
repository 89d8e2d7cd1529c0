#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oitdr/bounds.hpp"
#include "oitdr/checks.hpp"
#include "oitdr/constructions.hpp"
#include "oitdr/families.hpp"
#include "oitdr/graph.hpp"
#include "oitdr/labeling.hpp"
#include "oitdr/reduction.hpp"
#include "oitdr/solver.hpp"
#include "oitdr/tree_dp.hpp"

namespace py = pybind11;
using namespace oitdr;

namespace {

Graph make_graph(int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

std::vector<int> labels_of(const Labeling& f) { return {f.labels().begin(), f.labels().end()}; }

Labeling to_labeling(const std::vector<int>& v) {
  std::vector<Label> labels;
  labels.reserve(v.size());
  for (int x : v) {
    if (x < 0 || x > 3) throw PreconditionError("labels must lie in 0..3");
    labels.push_back(static_cast<Label>(x));
  }
  return Labeling(std::move(labels));
}

py::dict result_dict(const SolveResult& r) {
  py::dict d;
  d["status"] = std::string(status_name(r.status));
  d["feasible"] = r.feasible();
  d["optimal"] = r.optimal();
  d["weight"] = r.has_witness() ? py::object(py::int_(r.weight)) : py::object(py::none());
  d["witness"] = r.has_witness() ? py::object(py::cast(labels_of(r.witness))) : py::object(py::none());
  d["nodes"] = r.nodes_explored;
  d["millis"] = r.elapsed.count();
  return d;
}

SolveOptions options(std::optional<long long> budget_ms, bool parallel, bool canonical) {
  SolveOptions o;
  if (budget_ms) o.time_budget = std::chrono::milliseconds(*budget_ms);
  o.parallel = parallel;
  o.canonical_witness = canonical;
  return o;
}

}  // namespace

PYBIND11_MODULE(_oitdr, m) {
  m.doc() = "Outer-independent total double Roman domination";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) {
        auto s = g.neighbors(v);
        return std::vector<Vertex>(s.begin(), s.end());
      })
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("from_edge_list", [](const std::string& text) { return from_edge_list(text); });
  m.def("to_edge_list", &to_edge_list);
  m.def("is_tree", &is_tree);
  m.def("girth", &girth);

  m.def("family", [](const std::string& spec) { return generate(parse_family_spec(spec)); },
        "Single graph from a family spec such as 'path:10'");
  m.def("family_members", [](const std::string& spec) {
    std::vector<Graph> out;
    for_each_member(parse_family_spec(spec), [&](const Graph& g) { out.push_back(g); });
    return out;
  });

  m.def("check_oitdrdf", [](const Graph& g, const std::vector<int>& f) {
    return check_oitdrdf(g, to_labeling(f)).valid();
  });
  m.def("violation", [](const Graph& g, const std::vector<int>& f) -> py::object {
    const auto v = check_oitdrdf(g, to_labeling(f));
    if (v.valid()) return py::none();
    return py::make_tuple(std::string(condition_name(v.violation->condition)), v.violation->witness);
  });

  m.def("solve_oitdrd", [](const Graph& g, std::optional<long long> budget_ms, bool parallel, bool canonical) {
          return result_dict(solve_oitdrd(g, options(budget_ms, parallel, canonical)));
        },
        py::arg("graph"), py::arg("budget_ms") = py::none(), py::arg("parallel") = false,
        py::arg("canonical") = false);
  m.def("solve_oidrd", [](const Graph& g, std::optional<long long> budget_ms) {
          return result_dict(solve_oidrd(g, options(budget_ms, false, false)));
        },
        py::arg("graph"), py::arg("budget_ms") = py::none());
  m.def("solve_tree", [](const Graph& t) { return result_dict(solve_tree(t)); });
  m.def("enumerate_optimal", [](const Graph& g) {
    std::vector<std::vector<int>> out;
    for (const auto& f : enumerate_optimal_oitdrdf(g)) out.push_back(labels_of(f));
    return out;
  });

  m.def("domination_number", &domination_number);
  m.def("total_coindependent_number", &total_coindependent_number);
  m.def("matching_number", &matching_number);

  m.def("path_labeling", [](int p) { return labels_of(path_labeling(p).labeling); });
  m.def("cycle_labeling", [](int p) { return labels_of(cycle_labeling(p).labeling); });

  m.def("build_gadget", [](const Graph& g) { return build_gadget(g).host; });

  m.def("bounds_csv", [](const Graph& g) { return report_to_csv(bound_report(g)); });
  m.def("tree_bounds_csv", [](const Graph& t) { return report_to_csv(tree_bound_report(t)); });
  m.def("is_corona", &is_corona);
}
