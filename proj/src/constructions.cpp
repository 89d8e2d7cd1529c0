#include "oitdr/constructions.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>

#include "oitdr/checks.hpp"
#include "oitdr/families.hpp"

namespace oitdr {

std::string construction_to_json(const ConstructionOutcome& c) {
  nlohmann::ordered_json doc;
  doc["n"] = c.labeling.order();
  doc["labels"] = std::vector<int>(c.labeling.labels().begin(), c.labeling.labels().end());
  doc["construction"] = c.construction_name;
  doc["claimed_bound"] = c.claimed_bound;
  return doc.dump();
}

long long path_value(int p) {
  if (p < 3) throw PreconditionError("path value needs p >= 3");
  if (p == 4) return 6;
  return (6LL * p + 4) / 5;
}

long long cycle_value(int p) {
  if (p < 3) throw PreconditionError("cycle value needs p >= 3");
  return (6LL * p + 4) / 5;
}

namespace {

std::vector<Label> path_labels(int p) {
  switch (p) {
    case 3: return {1, 3, 0};
    case 4: return {1, 2, 2, 1};
    case 5: return {1, 2, 0, 2, 1};
    case 6: return {1, 2, 0, 2, 1, 2};
    case 7: return {1, 2, 0, 2, 1, 1, 2};
    default: break;
  }
  std::vector<Label> t(p, 0);
  constexpr std::array<Label, 5> block{1, 2, 0, 2, 1};
  const int blocks = (p - 5) / 5 + 1;
  for (int j = 0; j < blocks; ++j) {
    for (int i = 0; i < 5; ++i) t[5 * j + i] = block[i];
  }
  // 1-based b_p is t[p - 1]
  switch (p % 5) {
    case 1:
      t[p - 1] = 2;
      break;
    case 2:
      t[p - 1] = 2;
      t[p - 2] = 1;
      break;
    case 3:
      t[p - 1] = 1;
      t[p - 3] = 1;
      t[p - 2] = 2;
      break;
    case 4:
      t[p - 1] = 1;
      t[p - 2] = 2;
      t[p - 4] = 2;
      t[p - 3] = 0;
      break;
    default:
      break;
  }
  return t;
}

}  // namespace

ConstructionOutcome path_labeling(int p) {
  return {Labeling(path_labels(p)), path_value(p), "path"};
}

ConstructionOutcome cycle_labeling(int p) {
  const long long bound = cycle_value(p);
  if (p == 4) return {Labeling{2, 0, 2, 1}, bound, "cycle"};
  return {Labeling(path_labels(p)), bound, "cycle"};
}

namespace {

void require_maximum(const Graph& g, const Matching& matching) {
  if (!is_matching(g, matching)) throw PreconditionError("not a matching of the graph");
  if (static_cast<int>(matching.size()) != matching_number(g)) {
    throw PreconditionError("matching is not maximum");
  }
}

std::vector<char> saturated(const Graph& g, const Matching& matching) {
  std::vector<char> sat(g.order(), 0);
  for (auto [u, v] : matching) sat[u] = sat[v] = 1;
  return sat;
}

Labeling matching_based(const Graph& g, const Matching& matching, Label unsaturated_label) {
  const auto twos = orient_matching(g, matching);
  const auto sat = saturated(g, matching);
  std::vector<Label> labels(g.order(), unsaturated_label);
  for (std::size_t i = 0; i < matching.size(); ++i) {
    auto [u, v] = matching[i];
    labels[u] = labels[v] = 1;
    labels[twos[i]] = 2;
  }
  return Labeling(std::move(labels));
}

}  // namespace

std::vector<Vertex> orient_matching(const Graph& g, const Matching& matching) {
  require_maximum(g, matching);
  const auto sat = saturated(g, matching);
  std::vector<Vertex> twos;
  twos.reserve(matching.size());
  for (auto [a, b] : matching) {
    bool a_forced = false, b_forced = false;
    for (Vertex y : g.neighbors(a)) {
      if (!sat[y] && !g.adjacent(y, b)) a_forced = true;
    }
    for (Vertex y : g.neighbors(b)) {
      if (!sat[y] && !g.adjacent(y, a)) b_forced = true;
    }
    if (a_forced && b_forced) {
      throw Error("internal contradiction: both ends of matched edge " + std::to_string(a) + " " +
                  std::to_string(b) + " have private unsaturated neighbors");
    }
    twos.push_back(b_forced ? b : std::min(a, b));
  }
  return twos;
}

ConstructionOutcome matching_labeling(const Graph& g, const Matching& matching) {
  if (g.order() < 2 || !is_connected(g)) {
    throw PreconditionError("matching labeling needs a connected graph of order >= 2");
  }
  const long long bound = g.order() + static_cast<long long>(matching.size());
  return {matching_based(g, matching, 1), bound, "matching"};
}

ConstructionOutcome matching_labeling_triangle_free(const Graph& g, const Matching& matching) {
  if (!is_triangle_free(g)) throw PreconditionError("graph contains a triangle");
  if (g.order() == 0 || g.min_degree() < 2) throw PreconditionError("minimum degree must be at least 2");
  const long long bound = 3LL * static_cast<long long>(matching.size());
  return {matching_based(g, matching, 0), bound, "matching_triangle_free"};
}

std::pair<Graph, ConstructionOutcome> corona_labeling(const Graph& base) {
  if (base.order() < 1 || !is_connected(base)) {
    throw PreconditionError("corona labeling needs a connected base graph");
  }
  const int n = base.order();
  Graph host = corona(base);
  std::vector<Label> labels(2 * n, 1);
  std::fill(labels.begin(), labels.begin() + n, Label{2});
  return {std::move(host), ConstructionOutcome{Labeling(std::move(labels)), 3LL * n, "corona"}};
}

ConstructionOutcome double_star_labeling(int r, int t) {
  if (r < 1 || t < r) throw PreconditionError("double star needs t >= r >= 1");
  std::vector<Label> labels(r + t + 2, 0);
  labels[r] = labels[r + 1] = 3;
  return {Labeling(std::move(labels)), 6, "double_star"};
}

ConstructionOutcome star_labeling(int p) {
  if (p < 3) throw PreconditionError("star labeling needs p >= 3");
  std::vector<Label> labels(p, 0);
  labels[0] = 3;
  labels[1] = 1;
  return {Labeling(std::move(labels)), 4, "star"};
}

ConstructionOutcome regular_girth8_labeling(const Graph& g, Vertex r, Vertex r2) {
  const int m = regular_degree(g);
  if (m < 2) throw PreconditionError("graph is not m-regular with m >= 2");
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  const int gi = girth(g);
  if (gi < 8) throw PreconditionError("girth " + std::to_string(gi) + " is below 8");
  if (r < 0 || r2 < 0 || r >= g.order() || r2 >= g.order() || !g.adjacent(r, r2)) {
    throw PreconditionError("r and r' must be adjacent");
  }
  std::vector<Label> labels(g.order(), 2);
  // One side of the edge: `hub` keeps 2, its other neighbors get 0, each of
  // those has one distinguished 2-neighbor whose outer neighbors get 1, and
  // its remaining neighbors get 1.
  auto side = [&](Vertex hub, Vertex other) {
    for (Vertex mid : g.neighbors(hub)) {
      if (mid == other) continue;
      labels[mid] = 0;
      bool first = true;
      for (Vertex z : g.neighbors(mid)) {
        if (z == hub) continue;
        if (first) {
          first = false;
          for (Vertex x : g.neighbors(z)) {
            if (x != mid) labels[x] = 1;
          }
        } else {
          labels[z] = 1;
        }
      }
    }
  };
  side(r2, r);
  side(r, r2);
  const long long p = g.order();
  const long long mm = m;
  return {Labeling(std::move(labels)), 2 * (p - 2 * mm * mm + 3 * mm - 1), "regular_girth8"};
}

}  // namespace oitdr
