#pragma once

#include <string>
#include <utility>

#include "oitdr/graph.hpp"
#include "oitdr/labeling.hpp"
#include "oitdr/solver.hpp"

namespace oitdr {

/// A labeling built by an explicit upper-bound argument. `labeling` is a
/// valid OITDRDF and its weight never exceeds `claimed_bound`.
struct ConstructionOutcome {
  Labeling labeling;
  long long claimed_bound = 0;
  std::string construction_name;
};

/// Labeling JSON extended with "construction" and "claimed_bound".
std::string construction_to_json(const ConstructionOutcome& c);

/// 6 for p = 4, otherwise ceil(6p/5). Requires p >= 3.
long long path_value(int p);
/// ceil(6p/5). Requires p >= 3.
long long cycle_value(int p);

/// Period-5 pattern 1,2,0,2,1 with residue fix-ups at the end; fixed
/// tables for p <= 7.
ConstructionOutcome path_labeling(int p);
ConstructionOutcome cycle_labeling(int p);

/// Orients each matched edge so that every unsaturated vertex sees a 2-end.
/// Returns, per matching edge, the vertex that receives label 2.
/// Throws PreconditionError if the matching is not maximum and Error if
/// two unsaturated vertices force opposite ends of one edge.
std::vector<Vertex> orient_matching(const Graph& g, const Matching& matching);

/// Matched 2-ends get 2, other matched ends and unsaturated vertices get 1;
/// weight n + |matching|. Requires g connected, n >= 2, matching maximum.
ConstructionOutcome matching_labeling(const Graph& g, const Matching& matching);
/// Same orientation, unsaturated vertices get 0; weight 3|matching|.
/// Requires g triangle-free with minimum degree at least 2.
ConstructionOutcome matching_labeling_triangle_free(const Graph& g, const Matching& matching);

/// Cor(F) with 2 on original vertices and 1 on pendants.
std::pair<Graph, ConstructionOutcome> corona_labeling(const Graph& base);

/// 3 on both centers, 0 on all leaves (vertex ids as in double_star()).
ConstructionOutcome double_star_labeling(int r, int t);
/// 3 on the center, 1 on leaf 1, 0 on the other leaves (ids as in star_graph()).
ConstructionOutcome star_labeling(int p);

/// Distance-layer labeling around the edge {r, r2} of an m-regular graph
/// with girth >= 8; weight 2(p - 2m^2 + 3m - 1).
ConstructionOutcome regular_girth8_labeling(const Graph& g, Vertex r, Vertex r2);

}  // namespace oitdr
