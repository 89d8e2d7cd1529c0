#include "oitdr/tree_dp.hpp"

#include <algorithm>
#include <chrono>

namespace oitdr {

namespace {

constexpr int kSlots = 12;

Label slot_label(int slot) {
  if (slot < 6) return 0;
  if (slot < 8) return 1;
  if (slot < 10) return 2;
  return 3;
}

// Slot reached after adding a child with the given label; -1 if forbidden.
int advance(int slot, Label child) {
  if (slot < 6) {
    if (child == 0) return -1;  // two adjacent 0-vertices
    int has3 = slot / 3;
    int twos = slot % 3;
    if (child == 3) has3 = 1;
    if (child == 2) twos = std::min(2, twos + 1);
    return has3 * 3 + twos;
  }
  const int base = slot & ~1;
  const bool has = (slot & 1) != 0;
  const bool qualifies = slot < 8 ? child >= 2 : child >= 1;
  return base + ((has || qualifies) ? 1 : 0);
}

int final_index(int slot) {
  if (slot < 6) {
    const bool has3 = slot / 3 == 1;
    const int twos = slot % 3;
    if (has3 || twos == 2) return 0;
    return twos == 1 ? 1 : 2;
  }
  const bool has = (slot & 1) != 0;
  if (slot < 8) return has ? 3 : 4;
  if (slot < 10) return has ? 5 : 6;
  return has ? 7 : 8;
}

struct Choice {
  std::uint8_t prev_slot;
  std::uint8_t child_state;
};

}  // namespace

bool parent_discharges(Label parent, Need child_need) {
  switch (child_need) {
    case Need::none: return true;
    case Need::ge2: return parent >= 2;
    case Need::three: return parent == 3;
    case Need::positive: return parent >= 1;
  }
  return false;
}

PartialCosts dp_initial() {
  PartialCosts p;
  p.fill(kUnreachable);
  p[0] = 0;   // label 0, nothing yet
  p[6] = 1;   // label 1
  p[8] = 2;   // label 2
  p[10] = 3;  // label 3
  return p;
}

namespace {

PartialCosts fold(const PartialCosts& parent, const DpTable& child, Choice* choices) {
  PartialCosts next;
  next.fill(kUnreachable);
  for (int slot = 0; slot < kSlots; ++slot) {
    if (parent[slot] >= kUnreachable) continue;
    const Label own = slot_label(slot);
    for (int c = 0; c < static_cast<int>(kDpStates.size()); ++c) {
      if (child[c] >= kUnreachable) continue;
      const DpState state = kDpStates[c];
      if (!parent_discharges(own, state.need)) continue;
      const int target = advance(slot, state.label);
      if (target < 0) continue;
      const long long cost = parent[slot] + child[c];
      if (cost < next[target]) {
        next[target] = cost;
        if (choices) choices[target] = {static_cast<std::uint8_t>(slot), static_cast<std::uint8_t>(c)};
      }
    }
  }
  return next;
}

DpTable finalize(const PartialCosts& parent, std::uint8_t* slot_of) {
  DpTable table;
  table.fill(kUnreachable);
  for (int slot = 0; slot < kSlots; ++slot) {
    const int idx = final_index(slot);
    if (parent[slot] < table[idx]) {
      table[idx] = parent[slot];
      if (slot_of) slot_of[idx] = static_cast<std::uint8_t>(slot);
    }
  }
  return table;
}

}  // namespace

PartialCosts dp_transition(const PartialCosts& parent, const DpTable& child) {
  return fold(parent, child, nullptr);
}

DpTable dp_finalize(const PartialCosts& parent) { return finalize(parent, nullptr); }

SolveResult solve_tree(const Graph& tree, Vertex root) {
  const auto started = std::chrono::steady_clock::now();
  if (!is_tree(tree)) throw PreconditionError("solve_tree requires a tree");
  const int n = tree.order();
  if (root < 0 || root >= n) throw PreconditionError("root out of range");
  SolveResult result;
  if (n == 1) {
    result.status = SolveStatus::infeasible;
    return result;
  }

  // Preorder by explicit stack; children are the non-parent neighbors in id order.
  std::vector<Vertex> parent(n, -1), preorder;
  preorder.reserve(n);
  {
    std::vector<Vertex> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      preorder.push_back(v);
      for (Vertex w : tree.neighbors(v)) {
        if (parent[w] == -1) {
          parent[w] = v;
          stack.push_back(w);
        }
      }
    }
    parent[root] = -1;
  }

  std::vector<DpTable> table(n);
  std::vector<std::array<std::uint8_t, 9>> slot_of(n);
  std::vector<std::size_t> fold_begin(n);
  std::vector<std::array<Choice, kSlots>> choices(static_cast<std::size_t>(n - 1));
  std::size_t cursor = 0;
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    const Vertex v = *it;
    PartialCosts partial = dp_initial();
    fold_begin[v] = cursor;
    for (Vertex w : tree.neighbors(v)) {
      if (w == parent[v]) continue;
      partial = fold(partial, table[w], choices[cursor++].data());
    }
    table[v] = finalize(partial, slot_of[v].data());
  }

  // Root: need must be none; ties go to the smaller label.
  int best_state = -1;
  for (int c = 0; c < static_cast<int>(kDpStates.size()); ++c) {
    if (kDpStates[c].need != Need::none) continue;
    if (best_state < 0 || table[root][c] < table[root][best_state]) best_state = c;
  }
  result.nodes_explored = static_cast<std::uint64_t>(n);
  if (best_state < 0 || table[root][best_state] >= kUnreachable) {
    result.status = SolveStatus::infeasible;
    return result;
  }

  std::vector<Label> labels(n, 0);
  std::vector<std::pair<Vertex, int>> stack{{root, slot_of[root][best_state]}};
  std::vector<Vertex> kids;
  while (!stack.empty()) {
    auto [v, slot] = stack.back();
    stack.pop_back();
    labels[v] = slot_label(slot);
    kids.clear();
    for (Vertex w : tree.neighbors(v)) {
      if (w != parent[v]) kids.push_back(w);
    }
    for (std::size_t k = kids.size(); k-- > 0;) {
      const Choice choice = choices[fold_begin[v] + k][slot];
      stack.emplace_back(kids[k], slot_of[kids[k]][choice.child_state]);
      slot = choice.prev_slot;
    }
  }

  result.status = SolveStatus::optimal;
  result.found = true;
  result.weight = table[root][best_state];
  result.witness = Labeling(std::move(labels));
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return result;
}

}  // namespace oitdr
