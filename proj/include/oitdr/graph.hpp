#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oitdr {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (edge list, labeling JSON, family spec).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (enumeration limit, bitmask width) was hit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in compressed rows with each row sorted, so
/// neighbor iteration order never depends on the order edges were given.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an explicit edge set. Throws PreconditionError on
  /// self-loops, out-of-range endpoints and repeated edges.
  static Graph from_edges(int order, std::span<const Edge> edges);

  int order() const { return static_cast<int>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::size_t size() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  bool adjacent(Vertex u, Vertex v) const;

  int min_degree() const;
  int max_degree() const;

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Parses the "n m" header followed by m "u v" lines.
Graph from_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string to_edge_list(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_triangle_free(const Graph& g);
/// Returns the common degree, or -1 if the graph is not regular.
int regular_degree(const Graph& g);
/// Length of a shortest cycle; 0 for forests.
int girth(const Graph& g);
/// Induced subgraph on `keep` (vertices renumbered in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

}  // namespace oitdr
