#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oitdr/checks.hpp"
#include "oitdr/graph.hpp"
#include "oitdr/labeling.hpp"

namespace oitdr {

enum class SolveStatus {
  optimal,          // weight is the exact minimum
  infeasible,       // no valid labeling exists
  budget_exceeded,  // time budget ran out; weight/witness are the best found so far, if any
};

struct SolveOptions {
  std::optional<std::chrono::milliseconds> time_budget;
  /// Return the lexicographically smallest optimal labeling (extra search pass).
  bool canonical_witness = false;
  /// Explore top-level branches on worker threads. The result, including
  /// the witness, is identical to a sequential run.
  bool parallel = false;
  /// 0 = one worker per hardware thread.
  unsigned threads = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::infeasible;
  long long weight = 0;     // meaningful when has_witness()
  Labeling witness;         // meaningful when has_witness()
  bool found = false;       // a valid labeling was found
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};

  bool feasible() const { return status != SolveStatus::infeasible; }
  bool optimal() const { return status == SolveStatus::optimal; }
  bool has_witness() const { return found; }
};

std::string_view status_name(SolveStatus s);

/// Minimum weight of a function of class `c` by branch and bound.
SolveResult solve(const Graph& g, FunctionClass c, const SolveOptions& opts = {});

inline SolveResult solve_oitdrd(const Graph& g, const SolveOptions& opts = {}) {
  return solve(g, kOitdrdf, opts);
}
inline SolveResult solve_oidrd(const Graph& g, const SolveOptions& opts = {}) {
  return solve(g, kOidrdf, opts);
}
inline SolveResult solve_tdrd(const Graph& g, const SolveOptions& opts = {}) {
  return solve(g, kTdrdf, opts);
}

/// {"feasible","weight","witness","nodes","millis","optimal"}; weight and
/// witness are null without a witness.
std::string result_to_json(const SolveResult& r);

/// True iff some function of class `c` exists on g.
bool admits_function(const Graph& g, FunctionClass c);

/// Visits every valid labeling of class `c` with weight at most
/// `max_weight`, in lexicographic order (vertex 0 most significant).
/// Returning false from the callback stops the walk.
void for_each_valid(const Graph& g, FunctionClass c, long long max_weight,
                    const std::function<bool(const Labeling&)>& visit);

struct EnumerationOptions {
  int max_order = 12;
};

/// Every minimum-weight OITDRDF, each once, in lexicographic order. Throws
/// LimitExceeded above max_order and PreconditionError when none exists.
void for_each_optimal_oitdrdf(const Graph& g, const std::function<bool(const Labeling&)>& visit,
                              const EnumerationOptions& opts = {});
std::vector<Labeling> enumerate_optimal_oitdrdf(const Graph& g, const EnumerationOptions& opts = {});

/// Result of a minimum-cardinality vertex set search.
struct SetResult {
  bool feasible = false;
  int size = 0;
  std::vector<Vertex> set;  // sorted
};

/// Subset searches run on 64-bit masks; they throw LimitExceeded when
/// g.order() > 64.
SetResult minimum_dominating_set(const Graph& g);
SetResult minimum_total_dominating_set(const Graph& g);
SetResult minimum_total_coindependent_set(const Graph& g);

int domination_number(const Graph& g);
/// -1 when no total dominating set exists (an isolated vertex).
int total_domination_number(const Graph& g);
/// -1 when no total co-independent dominating set exists.
int total_coindependent_number(const Graph& g);

using Matching = std::vector<Edge>;

/// Maximum matching by memoized search over vertex subsets (order <= 64).
Matching maximum_matching(const Graph& g);
int matching_number(const Graph& g);
bool is_matching(const Graph& g, const Matching& matching);

}  // namespace oitdr
