#include "oitdr/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

namespace oitdr {

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  if (order < 0) throw PreconditionError("negative vertex count");
  std::vector<std::vector<Vertex>> rows(order);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw PreconditionError("edge " + std::to_string(u) + " " + std::to_string(v) +
                              " has an endpoint outside 0.." + std::to_string(order - 1));
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    rows[u].push_back(v);
    rows[v].push_back(u);
  }
  Graph g;
  g.offsets_.reserve(order + 1);
  g.offsets_.push_back(0);
  g.targets_.reserve(2 * edges.size());
  for (Vertex v = 0; v < order; ++v) {
    auto& row = rows[v];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      auto dup = *std::adjacent_find(row.begin(), row.end());
      throw PreconditionError("duplicate edge " + std::to_string(std::min(v, dup)) + " " +
                              std::to_string(std::max(v, dup)));
    }
    g.targets_.insert(g.targets_.end(), row.begin(), row.end());
    g.offsets_.push_back(g.targets_.size());
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

int Graph::min_degree() const {
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < order(); ++v) best = std::min(best, degree(v));
  return order() == 0 ? 0 : best;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  int line_no = 0;

  // Next non-blank line, or false at end of input.
  bool next(std::string_view& line) {
    while (pos < text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.find_first_not_of(" \t") != std::string_view::npos) return true;
    }
    return false;
  }
};

// Exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view line, long long& a, long long& b) {
  auto skip = [&](std::size_t i) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    return i;
  };
  auto read = [&](std::size_t& i, long long& out) {
    i = skip(i);
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), out);
    if (ec != std::errc() || ptr == line.data() + i) return false;
    i = static_cast<std::size_t>(ptr - line.data());
    return true;
  };
  std::size_t i = 0;
  if (!read(i, a)) return false;
  if (i < line.size() && line[i] != ' ' && line[i] != '\t') return false;
  if (!read(i, b)) return false;
  return skip(i) == line.size();
}

}  // namespace

Graph from_edge_list(std::string_view text) {
  LineReader reader{text};
  std::string_view line;
  if (!reader.next(line)) throw ParseError("empty edge list: missing \"n m\" header");
  long long n = 0, m = 0;
  if (!parse_pair(line, n, m) || n < 0 || m < 0) {
    throw ParseError("line " + std::to_string(reader.line_no) + ": expected \"n m\" header");
  }
  if (n > std::numeric_limits<Vertex>::max()) throw ParseError("vertex count too large");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!reader.next(line)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    long long u = 0, v = 0;
    if (!parse_pair(line, u, v)) {
      throw ParseError("line " + std::to_string(reader.line_no) + ": expected \"u v\"");
    }
    if (u >= n || v >= n) {
      throw ParseError("line " + std::to_string(reader.line_no) + ": vertex out of range");
    }
    if (u == v) throw ParseError("line " + std::to_string(reader.line_no) + ": self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (reader.next(line)) {
    throw ParseError("line " + std::to_string(reader.line_no) + ": more edge lines than declared");
  }
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_edge_list(buf.str());
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == static_cast<std::size_t>(g.order() - 1) && is_connected(g);
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    // sorted rows: linear intersection test
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i == *j) return false;
      if (*i < *j) ++i; else ++j;
    }
  }
  return true;
}

int regular_degree(const Graph& g) {
  if (g.order() == 0) return -1;
  int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return -1;
  }
  return d;
}

int girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  std::queue<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    queue.push(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      if (2 * dist[v] + 1 >= best) continue;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
    while (!queue.empty()) queue.pop();
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  }
  return Graph::from_edges(static_cast<int>(keep.size()), edges);
}

}  // namespace oitdr
