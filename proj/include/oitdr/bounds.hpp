#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <vector>

#include "oitdr/graph.hpp"
#include "oitdr/solver.hpp"

namespace oitdr {

using Rational = boost::rational<long long>;

/// One inequality `lhs <= rhs` evaluated on a graph.
struct BoundRow {
  std::string name;
  Rational lhs{0};
  Rational rhs{0};
  bool holds = false;
  bool tight = false;              // lhs == rhs
  bool applicable = false;         // a verdict was computed
  bool preconditions_met = false;  // the graph satisfies the hypotheses
  bool known = true;               // false when a solver ran out of budget
};

struct TreeFacts {
  int stems = 0;
  bool is_corona = false;
  /// (OITDRD number == 3p/2) == is_corona
  bool corona_equivalence = false;
};

struct BoundReport {
  std::string graph_id;
  std::vector<BoundRow> rows;
  std::optional<TreeFacts> tree;

  /// No evaluated row fails.
  bool all_hold() const;
  const BoundRow* find(std::string_view name) const;
};

/// Rows, in this order:
///   matching_upper      gamma <= p + matching number
///   triangle_free_upper gamma <= 3 matching number (triangle-free, min degree >= 2)
///   half_order_upper    gamma <= 3p/2
///   oidr_lower          gamma_oidR <= gamma
///   oidr_upper          gamma <= 2 gamma_oidR - domination number
///   tcoi_lower          gamma_t,coi + domination number <= gamma
///   degree_lower        2p/D + (D-2)/D gamma_t,coi + domination number/D <= gamma
///   regular_girth8_upper gamma <= 2(p - 2m^2 + 3m - 1) (m-regular, girth >= 8)
/// where gamma is the OITDRD number. Requires g connected with order >= 2.
BoundReport bound_report(const Graph& g, const SolveOptions& opts = {}, std::string graph_id = "");

/// Tree rows (gamma from the tree DP):
///   stem_upper        gamma <= (6p + 3s)/5
///   half_order_upper  gamma <= 3p/2, with corona recognition in `tree`
/// Requires a tree with order >= 3.
BoundReport tree_bound_report(const Graph& tree, std::string graph_id = "");

/// Every vertex is a leaf or a stem with exactly one leaf neighbor, stems
/// induce a connected graph, and #leaves == #stems. K2 = Cor(K1) counts.
bool is_corona(const Graph& g);

std::string rational_to_string(const Rational& r);
std::string report_to_csv(const BoundReport& report);
std::string report_to_json(const BoundReport& report);

}  // namespace oitdr
