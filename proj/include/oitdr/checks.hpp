#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "oitdr/graph.hpp"
#include "oitdr/labeling.hpp"

namespace oitdr {

/// Which of the optional conditions a double Roman dominating function must
/// also satisfy. The four named classes are the combinations below.
struct FunctionClass {
  bool total = false;              // positive vertices induce no isolated vertex
  bool outer_independent = false;  // 0-vertices form an independent set

  bool operator==(const FunctionClass&) const = default;
};

inline constexpr FunctionClass kDrdf{false, false};
inline constexpr FunctionClass kTdrdf{true, false};
inline constexpr FunctionClass kOidrdf{false, true};
inline constexpr FunctionClass kOitdrdf{true, true};

std::string_view class_name(FunctionClass c);

enum class Condition {
  double_roman,       // 0 needs a 3-neighbor or two 2-neighbors; 1 needs a >=2 neighbor
  total,              // positive vertex needs a positive neighbor
  outer_independence  // no edge between two 0-vertices
};

std::string_view condition_name(Condition c);

struct Violation {
  Condition condition;
  Vertex witness;

  bool operator==(const Violation&) const = default;
};

struct Verdict {
  std::optional<Violation> violation;

  bool valid() const { return !violation.has_value(); }
  explicit operator bool() const { return valid(); }
};

/// Checks the conditions in the order double Roman, total, outer
/// independence and reports the smallest witness of the first one that
/// fails. Throws PreconditionError when f.order() != g.order().
Verdict check_function(const Graph& g, const Labeling& f, FunctionClass c);

Verdict check_oitdrdf(const Graph& g, const Labeling& f);
bool check_drdf(const Graph& g, const Labeling& f);
bool check_tdrdf(const Graph& g, const Labeling& f);
bool check_oidrdf(const Graph& g, const Labeling& f);

struct SetProperties {
  bool independent = false;
  bool dominating = false;
  bool total_dominating = false;
  bool total_coindependent = false;
};

SetProperties check_set_properties(const Graph& g, std::span<const Vertex> set);

enum class VertexRole { leaf, weak_stem, strong_stem, other };

struct VertexClassification {
  std::vector<VertexRole> roles;
  int stems = 0;
  int leaves = 0;

  bool is_stem(Vertex v) const {
    return roles[v] == VertexRole::weak_stem || roles[v] == VertexRole::strong_stem;
  }
};

/// Leaf = degree 1; stem = adjacent to a leaf; strong = at least two leaf
/// neighbors. In K2 both vertices are leaves and (weak) stems; the role is
/// reported as weak_stem there and both count towards `leaves`.
VertexClassification classify_vertices(const Graph& g);

/// Leaf neighbors of v in increasing order.
std::vector<Vertex> leaf_neighbors(const Graph& g, Vertex v);

/// Longest shortest-path vertex sequence; throws PreconditionError on a
/// disconnected or empty graph.
std::vector<Vertex> diametral_path(const Graph& g);
int diameter(const Graph& g);

}  // namespace oitdr
