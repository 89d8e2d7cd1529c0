#pragma once

#include <random>
#include <vector>

#include "oitdr/graph.hpp"
#include "oitdr/labeling.hpp"

namespace testing {

inline oitdr::Graph graph(int n, std::vector<oitdr::Edge> edges) { return oitdr::Graph::from_edges(n, edges); }

inline oitdr::Labeling labeling(const std::vector<int>& v) {
  std::vector<oitdr::Label> labels(v.begin(), v.end());
  return oitdr::Labeling(std::move(labels));
}

inline std::vector<int> ints(const oitdr::Labeling& f) { return {f.labels().begin(), f.labels().end()}; }

/// Erdos-Renyi G(n, q) with q in percent; may be disconnected.
inline oitdr::Graph random_graph(int n, int percent, std::mt19937_64& rng) {
  std::vector<oitdr::Edge> edges;
  std::uniform_int_distribution<int> coin(0, 99);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) < percent) edges.emplace_back(u, v);
    }
  }
  return graph(n, edges);
}

inline oitdr::Labeling random_labeling(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, 3);
  std::vector<oitdr::Label> labels(n);
  for (auto& l : labels) l = static_cast<oitdr::Label>(d(rng));
  return oitdr::Labeling(std::move(labels));
}

}  // namespace testing
