#include "oitdr/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <set>

namespace oitdr {

namespace {

struct NamedFamily {
  std::string_view name;
  Family family;
};

constexpr std::array<NamedFamily, 12> kFamilies{{
    {"path", Family::path},
    {"cycle", Family::cycle},
    {"star", Family::star},
    {"double_star", Family::double_star},
    {"corona", Family::corona},
    {"complete_bipartite", Family::complete_bipartite},
    {"spider4", Family::spider4},
    {"random_tree", Family::random_tree},
    {"random_connected", Family::random_connected},
    {"tutte_coxeter", Family::tutte_coxeter},
    {"all_connected", Family::all_connected},
    {"all_trees", Family::all_trees},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

// Unbiased draw from [0, bound).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& entry : kFamilies) {
    if (entry.family == f) return entry.name;
  }
  return "?";
}

std::string FamilySpec::to_string() const {
  std::string out(family_name(family));
  if (family == Family::corona && base) return out + ":" + base->to_string();
  for (std::size_t i = 0; i < args.size(); ++i) {
    out += i == 0 ? ':' : ',';
    out += std::to_string(args[i]);
  }
  return out;
}

FamilySpec parse_family_spec(std::string_view text) {
  auto colon = text.find(':');
  std::string_view name = text.substr(0, colon);
  auto it = std::find_if(kFamilies.begin(), kFamilies.end(),
                         [&](const NamedFamily& e) { return e.name == name; });
  if (it == kFamilies.end()) throw ParseError("unknown family \"" + std::string(name) + "\"");
  FamilySpec spec;
  spec.family = it->family;
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (spec.family == Family::corona) {
    if (rest.empty()) throw ParseError("corona needs a base family, e.g. corona:path:3");
    spec.base = std::make_shared<FamilySpec>(parse_family_spec(rest));
    if (spec.base->streams()) throw ParseError("corona base must be a single graph");
    return spec;
  }
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("bad family argument \"" + std::string(token) + "\"");
    }
    spec.args.push_back(value);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  return spec;
}

Graph path_graph(int p) {
  require(p >= 1, "path needs p >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < p; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(p, edges);
}

Graph cycle_graph(int p) {
  require(p >= 3, "cycle needs p >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < p; ++v) edges.emplace_back(v, (v + 1) % p);
  return Graph::from_edges(p, edges);
}

Graph star_graph(int p) {
  require(p >= 2, "star needs order p >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < p; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(p, edges);
}

Graph double_star(int r, int t) {
  require(r >= 1 && t >= r, "double star needs t >= r >= 1");
  const Vertex z1 = r, z2 = r + 1;
  std::vector<Edge> edges{{z1, z2}};
  for (Vertex v = 0; v < r; ++v) edges.emplace_back(v, z1);
  for (Vertex v = r + 2; v < r + 2 + t; ++v) edges.emplace_back(z2, v);
  return Graph::from_edges(r + t + 2, edges);
}

Graph corona(const Graph& base) {
  const int n = base.order();
  auto edges = base.edges();
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, v + n);
  return Graph::from_edges(2 * n, edges);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite needs both sides nonempty");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(a + b, edges);
}

Graph spider4(int t) {
  require(t >= 3, "spider4 needs t >= 3 (at least two legs)");
  const int legs = t - 1;
  std::vector<Edge> edges;
  for (int i = 0; i < legs; ++i) {
    Vertex first = 1 + 4 * i;
    edges.emplace_back(0, first);
    for (Vertex v = first; v < first + 3; ++v) edges.emplace_back(v, v + 1);
  }
  return Graph::from_edges(1 + 4 * legs, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "random tree needs n >= 1");
  if (n == 1) return Graph::from_edges(1, {});
  if (n == 2) return path_graph(2);
  std::mt19937_64 rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(uniform_below(rng, n));
  std::vector<int> remaining(n, 1);
  for (Vertex c : code) ++remaining[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (remaining[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--remaining[c] == 1) leaves.push(c);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph::from_edges(n, edges);
}

Graph random_connected(int n, std::uint64_t seed, int percent) {
  require(percent >= 0 && percent <= 100, "edge percent must be in 0..100");
  Graph tree = random_tree(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto edges = tree.edges();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (tree.adjacent(u, v)) continue;
      if (static_cast<int>(uniform_below(rng, 100)) < percent) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph tutte_coxeter_graph() {
  constexpr std::array<int, 6> lcf{-13, -9, 7, -7, 9, 13};
  constexpr int n = 30;
  std::set<Edge> edges;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    edges.emplace(std::min(i, j), std::max(i, j));
    int k = ((i + lcf[i % 6]) % n + n) % n;
    edges.emplace(std::min(i, k), std::max(i, k));
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(n, list);
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit) {
  require(n >= 1, "all_connected needs n >= 1");
  if (n > kMaxAllConnectedOrder) {
    throw LimitExceeded("all_connected is capped at n = " + std::to_string(kMaxAllConnectedOrder));
  }
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const std::uint32_t total = std::uint32_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    // connectivity on bitmasks before building a Graph
    std::array<std::uint32_t, kMaxAllConnectedOrder> adj{};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) {
        adj[pairs[i].first] |= 1u << pairs[i].second;
        adj[pairs[i].second] |= 1u << pairs[i].first;
      }
    }
    std::uint32_t reached = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v) {
        if (frontier >> v & 1) next |= adj[v];
      }
      frontier = next & ~reached;
      reached |= next;
    }
    if (reached != (1u << n) - 1) continue;
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) edges.push_back(pairs[i]);
    }
    visit(Graph::from_edges(n, edges));
  }
}

namespace {

// Wright-Richmond-Odlyzko-McKay successor on level sequences of free trees.
using Layout = std::vector<int>;

bool next_rooted_tree(Layout& layout, std::size_t p) {
  if (p == 0) return false;
  std::size_t q = p - 1;
  while (layout[q] != layout[p] - 1) --q;
  for (std::size_t i = p; i < layout.size(); ++i) layout[i] = layout[i - p + q];
  return true;
}

bool next_rooted_tree(Layout& layout) {
  std::size_t p = layout.size() - 1;
  while (layout[p] == 1) --p;
  return next_rooted_tree(layout, p);
}

// Subtree under the first child of the root (levels shifted down by one)
// versus the rest of the tree.
void split_tree(const Layout& layout, Layout& left, Layout& rest) {
  std::size_t m = layout.size();
  bool seen_one = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (seen_one) {
        m = i;
        break;
      }
      seen_one = true;
    }
  }
  left.clear();
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  rest.assign(1, 0);
  rest.insert(rest.end(), layout.begin() + static_cast<std::ptrdiff_t>(m), layout.end());
}

void next_tree(Layout& candidate) {
  Layout left, rest;
  split_tree(candidate, left, rest);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) valid = false;
    else if (left.size() == rest.size() && left > rest) valid = false;
  }
  if (valid) return;
  const std::size_t p = left.size();
  const int pivot = candidate[p];
  next_rooted_tree(candidate, p);
  if (pivot > 2) {
    split_tree(candidate, left, rest);
    const int new_left_height = *std::max_element(left.begin(), left.end());
    const std::size_t len = static_cast<std::size_t>(new_left_height) + 1;
    for (std::size_t i = 0; i < len; ++i) candidate[candidate.size() - len + i] = static_cast<int>(i) + 1;
  }
}

Graph layout_to_graph(const Layout& layout) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      edges.emplace_back(stack.back(), static_cast<Vertex>(i));
    }
    stack.push_back(static_cast<Vertex>(i));
  }
  return Graph::from_edges(static_cast<int>(layout.size()), edges);
}

}  // namespace

void for_each_free_tree(int n, const std::function<void(const Graph&)>& visit) {
  require(n >= 1, "all_trees needs n >= 1");
  if (n > kMaxAllTreesOrder) {
    throw LimitExceeded("all_trees is capped at n = " + std::to_string(kMaxAllTreesOrder));
  }
  if (n == 1) {
    visit(Graph::from_edges(1, {}));
    return;
  }
  Layout layout;
  for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);
  while (true) {
    next_tree(layout);
    visit(layout_to_graph(layout));
    if (!next_rooted_tree(layout)) break;
  }
}

namespace {

int arg(const FamilySpec& spec, std::size_t i, const char* what) {
  if (i >= spec.args.size()) {
    throw PreconditionError(std::string(family_name(spec.family)) + " needs argument " + what);
  }
  const long long v = spec.args[i];
  if (v < 0 || v > 100'000'000) throw PreconditionError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

void expect_args(const FamilySpec& spec, std::size_t lo, std::size_t hi) {
  if (spec.args.size() < lo || spec.args.size() > hi) {
    throw PreconditionError(std::string(family_name(spec.family)) + ": wrong number of arguments");
  }
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::path:
      expect_args(spec, 1, 1);
      return path_graph(arg(spec, 0, "p"));
    case Family::cycle:
      expect_args(spec, 1, 1);
      return cycle_graph(arg(spec, 0, "p"));
    case Family::star:
      expect_args(spec, 1, 1);
      return star_graph(arg(spec, 0, "p"));
    case Family::double_star:
      expect_args(spec, 2, 2);
      return double_star(arg(spec, 0, "r"), arg(spec, 1, "t"));
    case Family::corona:
      if (!spec.base) throw PreconditionError("corona needs a base family");
      return corona(generate(*spec.base));
    case Family::complete_bipartite:
      expect_args(spec, 2, 2);
      return complete_bipartite(arg(spec, 0, "a"), arg(spec, 1, "b"));
    case Family::spider4:
      expect_args(spec, 1, 1);
      return spider4(arg(spec, 0, "t"));
    case Family::random_tree:
      expect_args(spec, 2, 2);
      return random_tree(arg(spec, 0, "n"), static_cast<std::uint64_t>(spec.args[1]));
    case Family::random_connected:
      expect_args(spec, 2, 3);
      return random_connected(arg(spec, 0, "n"), static_cast<std::uint64_t>(spec.args[1]),
                              spec.args.size() > 2 ? arg(spec, 2, "percent") : 50);
    case Family::tutte_coxeter:
      expect_args(spec, 0, 0);
      return tutte_coxeter_graph();
    case Family::all_connected:
    case Family::all_trees:
      throw PreconditionError(std::string(family_name(spec.family)) + " is a stream; use for_each_member");
  }
  throw PreconditionError("unknown family");
}

void for_each_member(const FamilySpec& spec, const std::function<void(const Graph&)>& visit) {
  if (spec.family == Family::all_connected) {
    expect_args(spec, 1, 1);
    for_each_connected_graph(arg(spec, 0, "n"), visit);
  } else if (spec.family == Family::all_trees) {
    expect_args(spec, 1, 1);
    for_each_free_tree(arg(spec, 0, "n"), visit);
  } else {
    visit(generate(spec));
  }
}

}  // namespace oitdr
