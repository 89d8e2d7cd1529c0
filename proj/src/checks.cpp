#include "oitdr/checks.hpp"

#include <algorithm>
#include <queue>

namespace oitdr {

std::string_view class_name(FunctionClass c) {
  if (c.total && c.outer_independent) return "oitdrdf";
  if (c.total) return "tdrdf";
  if (c.outer_independent) return "oidrdf";
  return "drdf";
}

std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::double_roman: return "drdf";
    case Condition::total: return "total";
    case Condition::outer_independence: return "outer-independence";
  }
  return "?";
}

namespace {

bool double_roman_ok(const Graph& g, const Labeling& f, Vertex v) {
  const Label own = f[v];
  if (own >= 2) return true;
  int twos = 0;
  for (Vertex w : g.neighbors(v)) {
    if (own == 0) {
      if (f[w] == 3) return true;
      if (f[w] == 2 && ++twos >= 2) return true;
    } else if (f[w] >= 2) {
      return true;
    }
  }
  return false;
}

bool total_ok(const Graph& g, const Labeling& f, Vertex v) {
  if (f[v] == 0) return true;
  auto row = g.neighbors(v);
  return std::any_of(row.begin(), row.end(), [&](Vertex w) { return f[w] > 0; });
}

bool independence_ok(const Graph& g, const Labeling& f, Vertex v) {
  if (f[v] != 0) return true;
  auto row = g.neighbors(v);
  return std::none_of(row.begin(), row.end(), [&](Vertex w) { return f[w] == 0; });
}

}  // namespace

Verdict check_function(const Graph& g, const Labeling& f, FunctionClass c) {
  if (f.order() != g.order()) {
    throw PreconditionError("labeling has " + std::to_string(f.order()) + " entries, graph has " +
                            std::to_string(g.order()) + " vertices");
  }
  const int n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    if (!double_roman_ok(g, f, v)) return {Violation{Condition::double_roman, v}};
  }
  if (c.total) {
    for (Vertex v = 0; v < n; ++v) {
      if (!total_ok(g, f, v)) return {Violation{Condition::total, v}};
    }
  }
  if (c.outer_independent) {
    for (Vertex v = 0; v < n; ++v) {
      if (!independence_ok(g, f, v)) return {Violation{Condition::outer_independence, v}};
    }
  }
  return {};
}

Verdict check_oitdrdf(const Graph& g, const Labeling& f) { return check_function(g, f, kOitdrdf); }
bool check_drdf(const Graph& g, const Labeling& f) { return check_function(g, f, kDrdf).valid(); }
bool check_tdrdf(const Graph& g, const Labeling& f) { return check_function(g, f, kTdrdf).valid(); }
bool check_oidrdf(const Graph& g, const Labeling& f) { return check_function(g, f, kOidrdf).valid(); }

SetProperties check_set_properties(const Graph& g, std::span<const Vertex> set) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  for (Vertex v : set) {
    if (v < 0 || v >= n) throw PreconditionError("set vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  SetProperties props;
  props.independent = true;
  props.dominating = true;
  props.total_dominating = true;
  bool complement_independent = true;
  bool complement_nonempty = false;
  for (Vertex v = 0; v < n; ++v) {
    bool has_in_neighbor = false;
    for (Vertex w : g.neighbors(v)) {
      if (in[w]) has_in_neighbor = true;
      if (in[v] && in[w]) props.independent = false;
      if (!in[v] && !in[w]) complement_independent = false;
    }
    if (!in[v]) {
      complement_nonempty = true;
      if (!has_in_neighbor) props.dominating = false;
    }
    if (!has_in_neighbor) props.total_dominating = false;
  }
  props.total_coindependent = props.total_dominating && complement_nonempty && complement_independent;
  return props;
}

VertexClassification classify_vertices(const Graph& g) {
  const int n = g.order();
  VertexClassification out;
  out.roles.assign(n, VertexRole::other);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) ++out.leaves;
    int leaf_count = 0;
    for (Vertex w : g.neighbors(v)) leaf_count += g.degree(w) == 1;
    if (leaf_count >= 2) {
      out.roles[v] = VertexRole::strong_stem;
    } else if (leaf_count == 1) {
      out.roles[v] = VertexRole::weak_stem;
    } else if (g.degree(v) == 1) {
      out.roles[v] = VertexRole::leaf;
    }
    if (leaf_count >= 1) ++out.stems;
  }
  return out;
}

std::vector<Vertex> leaf_neighbors(const Graph& g, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v)) {
    if (g.degree(w) == 1) out.push_back(w);
  }
  return out;
}

namespace {

std::vector<Vertex> bfs_parents(const Graph& g, Vertex root, Vertex& farthest) {
  std::vector<Vertex> parent(g.order(), -2);
  std::queue<Vertex> queue;
  parent[root] = -1;
  queue.push(root);
  farthest = root;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    farthest = v;
    for (Vertex w : g.neighbors(v)) {
      if (parent[w] == -2) {
        parent[w] = v;
        queue.push(w);
      }
    }
  }
  return parent;
}

}  // namespace

std::vector<Vertex> diametral_path(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) {
    throw PreconditionError("diameter requested on an empty or disconnected graph");
  }
  if (is_tree(g)) {
    // two sweeps are exact on trees
    Vertex a = 0, b = 0;
    bfs_parents(g, 0, a);
    auto parent = bfs_parents(g, a, b);
    std::vector<Vertex> path;
    for (Vertex v = b; v != -1; v = parent[v]) path.push_back(v);
    return path;
  }
  std::vector<Vertex> best;
  for (Vertex s = 0; s < g.order(); ++s) {
    Vertex far = s;
    auto parent = bfs_parents(g, s, far);
    std::vector<Vertex> path;
    for (Vertex v = far; v != -1; v = parent[v]) path.push_back(v);
    if (path.size() > best.size()) best = std::move(path);
  }
  return best;
}

int diameter(const Graph& g) { return static_cast<int>(diametral_path(g).size()) - 1; }

}  // namespace oitdr
