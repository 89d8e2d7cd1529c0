#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "oitdr/graph.hpp"

namespace oitdr {

enum class Family {
  path,
  cycle,
  star,
  double_star,
  corona,
  complete_bipartite,
  spider4,
  random_tree,
  random_connected,
  tutte_coxeter,
  all_connected,
  all_trees,
};

/// A named graph family with its parameters.
///
/// Text form is `name:arg,arg,...`, e.g. `path:10`, `double_star:2,3`,
/// `random_tree:9,42` (order, seed), `random_connected:8,7,40` (order,
/// seed, extra-edge percent), `all_trees:8`. Corona takes a nested spec:
/// `corona:path:3`.
struct FamilySpec {
  Family family = Family::path;
  std::vector<long long> args;
  std::shared_ptr<const FamilySpec> base;  // corona only

  bool streams() const { return family == Family::all_connected || family == Family::all_trees; }
  std::string to_string() const;
};

std::string_view family_name(Family f);
FamilySpec parse_family_spec(std::string_view text);

/// Single graph for non-streaming families; throws PreconditionError for
/// all_* families and out-of-range parameters.
Graph generate(const FamilySpec& spec);
/// Every member of the family (one graph for non-streaming families).
void for_each_member(const FamilySpec& spec, const std::function<void(const Graph&)>& visit);

Graph path_graph(int p);
Graph cycle_graph(int p);
/// K_{1,p-1}: center 0, leaves 1..p-1.
Graph star_graph(int p);
/// Leaves of the first center are 0..r-1, centers are r and r+1, leaves
/// of the second center follow. DS_{1,1} is the path 0-1-2-3.
Graph double_star(int r, int t);
/// Original vertices keep their ids; the pendant of v is v + n(F).
Graph corona(const Graph& base);
Graph complete_bipartite(int a, int b);
/// K_{1,t-1} with every edge subdivided three times; center 0, leg i occupies 1+4i..4+4i.
Graph spider4(int t);
/// Uniform labeled tree from a Prüfer sequence.
Graph random_tree(int n, std::uint64_t seed);
/// Random spanning tree plus each remaining pair with probability percent/100.
Graph random_connected(int n, std::uint64_t seed, int percent = 50);
/// 3-regular girth-8 cage on 30 vertices, from LCF [-13,-9,7,-7,9,13]^5.
Graph tutte_coxeter_graph();

inline constexpr int kMaxAllConnectedOrder = 6;
inline constexpr int kMaxAllTreesOrder = 18;

/// Every labeled connected graph of order n (no isomorphism reduction).
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit);
/// Every free tree of order n exactly once, via canonical level sequences.
void for_each_free_tree(int n, const std::function<void(const Graph&)>& visit);

}  // namespace oitdr
