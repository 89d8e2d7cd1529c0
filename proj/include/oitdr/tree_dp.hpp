#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

#include "oitdr/graph.hpp"
#include "oitdr/solver.hpp"

namespace oitdr {

/// What a vertex still requires from its parent, given its own label and
/// what its children already provide.
enum class Need : std::uint8_t {
  none,      // satisfied inside its subtree
  ge2,       // parent label must be 2 or 3
  three,     // parent label must be 3
  positive,  // parent label must be at least 1
};

struct DpState {
  Label label;
  Need need;

  bool operator==(const DpState&) const = default;
};

/// The nine reachable (label, need) pairs, in table order.
inline constexpr std::array<DpState, 9> kDpStates{{
    {0, Need::none}, {0, Need::ge2}, {0, Need::three},
    {1, Need::none}, {1, Need::ge2},
    {2, Need::none}, {2, Need::positive},
    {3, Need::none}, {3, Need::positive},
}};

inline constexpr long long kUnreachable = std::numeric_limits<long long>::max() / 4;

/// Minimum subtree weight per final state (kUnreachable when impossible).
using DpTable = std::array<long long, 9>;

/// Running aggregate of a parent while its children are folded in.
/// Slots 0..5: label 0 with (has a 3-child, min(#2-children, 2));
/// slots 6,7: label 1 without / with a >=2 child;
/// slots 8,9 and 10,11: labels 2 and 3 without / with a positive child.
using PartialCosts = std::array<long long, 12>;

/// Slot costs of a vertex before any child is folded in.
PartialCosts dp_initial();

/// Folds one fully processed child into the parent's running costs.
PartialCosts dp_transition(const PartialCosts& parent, const DpTable& child);

/// Collapses running slots into the final (label, need) table.
DpTable dp_finalize(const PartialCosts& parent);

bool parent_discharges(Label parent, Need child_need);

/// Exact minimum OITDRDF weight of a tree in O(n), with a witness.
/// Throws PreconditionError when `tree` is not a tree; a single vertex is
/// reported infeasible.
SolveResult solve_tree(const Graph& tree, Vertex root = 0);

}  // namespace oitdr
