#include "oitdr/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

#include <json.hpp>

namespace oitdr {

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

std::string result_to_json(const SolveResult& r) {
  nlohmann::ordered_json doc;
  doc["feasible"] = r.feasible();
  if (r.has_witness()) {
    doc["weight"] = r.weight;
    doc["witness"] = std::vector<int>(r.witness.labels().begin(), r.witness.labels().end());
  } else {
    doc["weight"] = nullptr;
    doc["witness"] = nullptr;
  }
  doc["nodes"] = r.nodes_explored;
  doc["millis"] = r.elapsed.count();
  doc["optimal"] = r.optimal();
  return doc.dump();
}

bool admits_function(const Graph& g, FunctionClass c) {
  if (!c.total) return true;
  return g.order() >= 1 && g.min_degree() >= 1;
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr long long kInfinity = std::numeric_limits<long long>::max() / 4;
constexpr std::uint64_t kBranchBits = 20;
constexpr std::uint64_t kNoBranch = (std::uint64_t{1} << kBranchBits) - 1;

// Incumbent ordered by (weight, branch index). Branches are numbered in DFS
// order, so the winner is the DFS-first optimum regardless of scheduling.
class Incumbent {
 public:
  Incumbent(long long weight, Labeling witness)
      : key_(pack(weight, kNoBranch)), witness_(std::move(witness)) {}

  static std::uint64_t pack(long long weight, std::uint64_t branch) {
    return (static_cast<std::uint64_t>(weight) << kBranchBits) | branch;
  }

  std::uint64_t key() const { return key_.load(std::memory_order_acquire); }

  void offer(long long weight, std::uint64_t branch, const std::vector<std::int8_t>& labels) {
    auto candidate = pack(weight, branch);
    if (candidate >= key()) return;
    std::lock_guard lock(mutex_);
    if (candidate >= key_.load(std::memory_order_relaxed)) return;
    std::vector<Label> copy(labels.begin(), labels.end());
    witness_ = Labeling(std::move(copy));
    key_.store(candidate, std::memory_order_release);
  }

  long long weight() const { return static_cast<long long>(key() >> kBranchBits); }
  Labeling witness() const {
    std::lock_guard lock(mutex_);
    return witness_;
  }

 private:
  std::atomic<std::uint64_t> key_;
  mutable std::mutex mutex_;
  Labeling witness_;
};

struct Stop {
  std::optional<Clock::time_point> deadline;
  std::atomic<bool> flag{false};

  bool poll() {
    if (flag.load(std::memory_order_relaxed)) return true;
    if (deadline && Clock::now() >= *deadline) {
      flag.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
};

// Depth-first labeling search with incremental neighborhood counters.
class Search {
 public:
  Search(const Graph& g, FunctionClass c, std::vector<Vertex> order, std::array<Label, 4> label_order)
      : g_(g),
        class_(c),
        n_(g.order()),
        order_(std::move(order)),
        label_order_(label_order),
        label_(n_, -1),
        free_(n_),
        zeros_(n_, 0),
        twos_(n_, 0),
        threes_(n_, 0),
        positive_(n_, 0),
        sum_(n_, 0),
        deficit_(n_, 0) {
    for (Vertex v = 0; v < n_; ++v) free_[v] = g.degree(v);
  }

  // Optimization mode.
  void optimize(std::size_t depth, Incumbent& best, std::uint64_t branch, Stop& stop) {
    if ((++nodes_ & 1023) == 0 && stop.poll()) return;
    if (stop.flag.load(std::memory_order_relaxed)) return;
    if (depth == order_.size()) {
      best.offer(weight_, branch, label_);
      return;
    }
    const Vertex v = order_[depth];
    for (Label l : label_order_) {
      if (!try_assign(v, l)) continue;
      long long lb = lower_bound();
      if (lb < kInfinity && Incumbent::pack(lb, branch) < best.key()) {
        optimize(depth + 1, best, branch, stop);
      }
      unassign(v);
    }
  }

  // Enumeration mode: every complete valid labeling of weight <= cap.
  bool enumerate(std::size_t depth, long long cap, const std::function<bool(const Labeling&)>& visit) {
    ++nodes_;
    if (depth == order_.size()) {
      std::vector<Label> copy(label_.begin(), label_.end());
      return visit(Labeling(std::move(copy)));
    }
    const Vertex v = order_[depth];
    for (Label l : label_order_) {
      if (!try_assign(v, l)) continue;
      bool keep_going = true;
      if (lower_bound() <= cap) keep_going = enumerate(depth + 1, cap, visit);
      unassign(v);
      if (!keep_going) return false;
    }
    return true;
  }

  // Assigns and checks local consistency; on failure the state is restored.
  bool try_assign(Vertex v, Label l) {
    if (l == 0 && class_.outer_independent && zeros_[v] > 0) return false;
    assign(v, l);
    if (!consistent(v)) {
      unassign(v);
      return false;
    }
    for (Vertex w : g_.neighbors(v)) {
      if (label_[w] >= 0 && !consistent(w)) {
        unassign(v);
        return false;
      }
    }
    return true;
  }

  void unassign(Vertex v) {
    const int l = label_[v];
    label_[v] = -1;
    weight_ -= l;
    for (Vertex w : g_.neighbors(v)) {
      ++free_[w];
      sum_[w] -= l;
      if (l == 0) --zeros_[w]; else --positive_[w];
      if (l == 2) --twos_[w];
      if (l == 3) --threes_[w];
    }
  }

  const std::vector<std::int8_t>& labels() const { return label_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void assign(Vertex v, Label l) {
    label_[v] = static_cast<std::int8_t>(l);
    weight_ += l;
    for (Vertex w : g_.neighbors(v)) {
      --free_[w];
      sum_[w] += l;
      if (l == 0) ++zeros_[w]; else ++positive_[w];
      if (l == 2) ++twos_[w];
      if (l == 3) ++threes_[w];
    }
  }

  // Whether an assigned vertex can still be satisfied by some completion.
  bool consistent(Vertex v) const {
    switch (label_[v]) {
      case 0:
        if (class_.outer_independent && zeros_[v] > 0) return false;
        return threes_[v] > 0 || twos_[v] >= 2 || free_[v] > 0;
      case 1:
        return twos_[v] + threes_[v] > 0 || free_[v] > 0;
      default:
        return !class_.total || positive_[v] > 0 || free_[v] > 0;
    }
  }

  // Every valid labeling has f(N[v]) >= need(v). The remaining weight must
  // close the summed deficit, and one unit on an unassigned vertex u closes
  // at most one unit for each deficient vertex of N[u].
  long long lower_bound() {
    const int total_extra = class_.total ? 1 : 0;
    long long deficit_sum = 0;
    for (Vertex v = 0; v < n_; ++v) {
      int need;
      int have = sum_[v];
      switch (label_[v]) {
        case -1: need = 2 + total_extra; break;
        case 0:
        case 1: need = 3; have += label_[v]; break;
        case 2: need = 2 + total_extra; have += 2; break;
        default: need = 3 + total_extra; have += 3; break;
      }
      deficit_[v] = need > have ? 1 : 0;
      deficit_sum += std::max(0, need - have);
    }
    long long forced = 0;
    int cover = 0;
    for (Vertex u = 0; u < n_; ++u) {
      if (label_[u] >= 0) continue;
      if (class_.outer_independent && zeros_[u] > 0) ++forced;
      int c = deficit_[u];
      for (Vertex w : g_.neighbors(u)) c += deficit_[w];
      cover = std::max(cover, c);
    }
    if (deficit_sum == 0) return weight_ + forced;
    if (cover == 0) return kInfinity;
    return weight_ + std::max(forced, (deficit_sum + cover - 1) / cover);
  }

  const Graph& g_;
  FunctionClass class_;
  int n_;
  std::vector<Vertex> order_;
  std::array<Label, 4> label_order_;
  std::vector<std::int8_t> label_;
  std::vector<int> free_, zeros_, twos_, threes_, positive_, sum_;
  std::vector<char> deficit_;
  long long weight_ = 0;
  std::uint64_t nodes_ = 0;
};

std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

std::vector<Vertex> index_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  return order;
}

constexpr std::array<Label, 4> kSearchLabels{0, 2, 3, 1};
constexpr std::array<Label, 4> kLexLabels{0, 1, 2, 3};

// Consistent label prefixes for the first `depth` vertices of `order`, in DFS order.
void collect_prefixes(Search& s, const std::vector<Vertex>& order, std::size_t depth,
                      std::vector<Label>& prefix, std::vector<std::vector<Label>>& out) {
  if (prefix.size() == depth) {
    out.push_back(prefix);
    return;
  }
  const Vertex v = order[prefix.size()];
  for (Label l : kSearchLabels) {
    if (!s.try_assign(v, l)) continue;
    prefix.push_back(l);
    collect_prefixes(s, order, depth, prefix, out);
    prefix.pop_back();
    s.unassign(v);
  }
}

}  // namespace

SolveResult solve(const Graph& g, FunctionClass c, const SolveOptions& opts) {
  const auto started = Clock::now();
  SolveResult result;
  auto finish = [&](SolveResult& r) -> SolveResult {
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
    return r;
  };
  if (!admits_function(g, c)) {
    result.status = SolveStatus::infeasible;
    return finish(result);
  }
  const int n = g.order();
  if (n == 0) {
    result.status = SolveStatus::optimal;
    result.found = true;
    return finish(result);
  }

  Stop stop;
  if (opts.time_budget) stop.deadline = started + *opts.time_budget;

  // The all-2 labeling is valid for every class once admits_function holds.
  Incumbent best(2LL * n, Labeling::constant(n, 2));
  const auto order = degree_order(g);
  std::atomic<std::uint64_t> nodes{0};

  if (!opts.parallel) {
    Search search(g, c, order, kSearchLabels);
    search.optimize(0, best, 0, stop);
    nodes += search.nodes();
  } else {
    Search splitter(g, c, order, kSearchLabels);
    std::vector<std::vector<Label>> prefixes;
    std::vector<Label> prefix;
    collect_prefixes(splitter, order, std::min<std::size_t>(3, order.size()), prefix, prefixes);
    unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, prefixes.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      Search search(g, c, order, kSearchLabels);
      for (std::size_t b = next++; b < prefixes.size(); b = next++) {
        const auto& p = prefixes[b];
        std::size_t done = 0;
        for (; done < p.size(); ++done) {
          if (!search.try_assign(order[done], p[done])) break;
        }
        if (done == p.size()) search.optimize(p.size(), best, b, stop);
        while (done > 0) search.unassign(order[--done]);
      }
      nodes += search.nodes();
    };
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
  }
  result.nodes_explored = nodes.load();
  result.found = true;
  result.weight = best.weight();
  result.witness = best.witness();
  result.status = stop.flag.load() ? SolveStatus::budget_exceeded : SolveStatus::optimal;

  if (opts.canonical_witness && result.status == SolveStatus::optimal) {
    Search lex(g, c, index_order(g), kLexLabels);
    std::optional<Labeling> first;
    lex.enumerate(0, result.weight, [&](const Labeling& f) {
      first = f;
      return false;
    });
    result.nodes_explored += lex.nodes();
    if (first) result.witness = *first;
  }
  return finish(result);
}

void for_each_valid(const Graph& g, FunctionClass c, long long max_weight,
                    const std::function<bool(const Labeling&)>& visit) {
  if (!admits_function(g, c)) return;
  Search search(g, c, index_order(g), kLexLabels);
  search.enumerate(0, max_weight, visit);
}

void for_each_optimal_oitdrdf(const Graph& g, const std::function<bool(const Labeling&)>& visit,
                              const EnumerationOptions& opts) {
  if (g.order() > opts.max_order) {
    throw LimitExceeded("enumeration limited to " + std::to_string(opts.max_order) + " vertices, graph has " +
                        std::to_string(g.order()));
  }
  auto best = solve_oitdrd(g);
  if (!best.feasible()) throw PreconditionError("graph admits no OITDRDF (isolated vertex)");
  for_each_valid(g, kOitdrdf, best.weight, visit);
}

std::vector<Labeling> enumerate_optimal_oitdrdf(const Graph& g, const EnumerationOptions& opts) {
  std::vector<Labeling> out;
  for_each_optimal_oitdrdf(g, [&](const Labeling& f) {
    out.push_back(f);
    return true;
  }, opts);
  return out;
}

// ---------------------------------------------------------------------------
// Vertex subset searches

namespace {

using Mask = std::uint64_t;

struct MaskGraph {
  int n = 0;
  std::vector<Mask> open;    // N(v)
  std::vector<Mask> closed;  // N[v]
  Mask all = 0;

  explicit MaskGraph(const Graph& g) : n(g.order()), open(n, 0), closed(n, 0) {
    if (n > 64) throw LimitExceeded("subset search supports at most 64 vertices");
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.neighbors(v)) open[v] |= Mask{1} << w;
      closed[v] = open[v] | (Mask{1} << v);
    }
    all = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
  }
};

std::vector<Vertex> mask_to_set(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Smallest S with every vertex covered by rows[s] for some s in S.
class CoverSearch {
 public:
  CoverSearch(const MaskGraph& mg, const std::vector<Mask>& rows) : mg_(mg), rows_(rows) {
    for (Mask r : rows_) max_cover_ = std::max(max_cover_, std::popcount(r));
    best_size_ = mg.n + 1;
  }

  void run(Mask covered, Mask chosen, int count) {
    Mask open = mg_.all & ~covered;
    if (open == 0) {
      if (count < best_size_) {
        best_size_ = count;
        best_ = chosen;
      }
      return;
    }
    int lb = count + (std::popcount(open) + max_cover_ - 1) / max_cover_;
    if (lb >= best_size_) return;
    Vertex v = std::countr_zero(open);
    // candidates: vertices whose row covers v
    std::vector<std::pair<int, Vertex>> cands;
    for (Vertex u = 0; u < mg_.n; ++u) {
      if (rows_[u] >> v & 1) cands.emplace_back(-std::popcount(rows_[u] & open), u);
    }
    std::sort(cands.begin(), cands.end());
    for (auto [score, u] : cands) run(covered | rows_[u], chosen | (Mask{1} << u), count + 1);
  }

  bool feasible() const { return best_size_ <= mg_.n; }
  int size() const { return best_size_; }
  Mask set() const { return best_; }

 private:
  const MaskGraph& mg_;
  const std::vector<Mask>& rows_;
  int max_cover_ = 1;
  int best_size_;
  Mask best_ = 0;
};

}  // namespace

SetResult minimum_dominating_set(const Graph& g) {
  MaskGraph mg(g);
  CoverSearch search(mg, mg.closed);
  search.run(0, 0, 0);
  return {true, search.size(), mask_to_set(search.set())};
}

SetResult minimum_total_dominating_set(const Graph& g) {
  if (g.order() == 0 || g.min_degree() == 0) return {};
  MaskGraph mg(g);
  CoverSearch search(mg, mg.open);
  search.run(0, 0, 0);
  return {true, search.size(), mask_to_set(search.set())};
}

namespace {

// Largest nonempty independent I such that every vertex outside I keeps a
// neighbor outside I. Its complement is a minimum total co-independent
// dominating set.
class CoindependentSearch {
 public:
  explicit CoindependentSearch(const MaskGraph& mg) : mg_(mg) {}

  void run(Vertex v, Mask in_i, int count) {
    if (v == mg_.n) {
      if (count >= 1 && count > best_count_) {
        best_count_ = count;
        best_ = in_i;
      }
      return;
    }
    if (count + (mg_.n - v) <= best_count_) return;
    const Mask bit = Mask{1} << v;
    const Mask decided = (bit << 1) - 1;  // vertices 0..v
    // v joins I
    if ((mg_.open[v] & in_i) == 0 && ok_after(v, in_i | bit, decided)) run(v + 1, in_i | bit, count + 1);
    // v stays outside I
    if (ok_after(v, in_i, decided)) run(v + 1, in_i, count);
  }

  int best_count() const { return best_count_; }
  Mask best() const { return best_; }

 private:
  // Outside vertices in N[v] that are fully decided must see an outside neighbor.
  bool ok_after(Vertex v, Mask in_i, Mask decided) const {
    Mask check = mg_.closed[v] & decided & ~in_i;
    while (check) {
      Vertex w = std::countr_zero(check);
      check &= check - 1;
      Mask nb = mg_.open[w];
      if ((nb & ~decided) == 0 && (nb & ~in_i) == 0) return false;
    }
    return true;
  }

  const MaskGraph& mg_;
  int best_count_ = 0;
  Mask best_ = 0;
};

}  // namespace

SetResult minimum_total_coindependent_set(const Graph& g) {
  if (g.order() == 0 || g.min_degree() == 0) return {};
  MaskGraph mg(g);
  CoindependentSearch search(mg);
  search.run(0, 0, 0);
  if (search.best_count() == 0) return {};
  Mask s = mg.all & ~search.best();
  return {true, std::popcount(s), mask_to_set(s)};
}

int domination_number(const Graph& g) { return minimum_dominating_set(g).size; }

int total_domination_number(const Graph& g) {
  auto r = minimum_total_dominating_set(g);
  return r.feasible ? r.size : -1;
}

int total_coindependent_number(const Graph& g) {
  auto r = minimum_total_coindependent_set(g);
  return r.feasible ? r.size : -1;
}

// ---------------------------------------------------------------------------
// Matching

namespace {

class MatchingSearch {
 public:
  explicit MatchingSearch(const MaskGraph& mg) : mg_(mg) {}

  int best(Mask alive) {
    // vertices without an alive neighbor cannot be matched
    while (alive) {
      Vertex v = std::countr_zero(alive);
      if (mg_.open[v] & alive) break;
      alive &= alive - 1;
    }
    if (alive == 0) return 0;
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
    Vertex v = std::countr_zero(alive);
    Mask rest = alive & ~(Mask{1} << v);
    int value = best(rest);
    Mask nb = mg_.open[v] & rest;
    while (nb) {
      Vertex u = std::countr_zero(nb);
      nb &= nb - 1;
      value = std::max(value, 1 + best(rest & ~(Mask{1} << u)));
    }
    memo_.emplace(alive, value);
    return value;
  }

  Matching reconstruct(Mask alive) {
    Matching out;
    while (true) {
      int target = best(alive);
      if (target == 0) break;
      Vertex v = -1;
      for (Mask a = alive; a; a &= a - 1) {
        Vertex c = std::countr_zero(a);
        if (mg_.open[c] & alive) {
          v = c;
          break;
        }
        alive &= ~(Mask{1} << c);
      }
      Mask rest = alive & ~(Mask{1} << v);
      if (best(rest) == target) {
        alive = rest;
        continue;
      }
      for (Mask nb = mg_.open[v] & rest; nb; nb &= nb - 1) {
        Vertex u = std::countr_zero(nb);
        Mask next = rest & ~(Mask{1} << u);
        if (1 + best(next) == target) {
          out.emplace_back(std::min(u, v), std::max(u, v));
          alive = next;
          break;
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const MaskGraph& mg_;
  std::unordered_map<Mask, int> memo_;
};

}  // namespace

Matching maximum_matching(const Graph& g) {
  if (g.order() > 64) throw LimitExceeded("matching search supports at most 64 vertices");
  MaskGraph mg(g);
  MatchingSearch search(mg);
  return search.reconstruct(mg.all);
}

int matching_number(const Graph& g) { return static_cast<int>(maximum_matching(g).size()); }

bool is_matching(const Graph& g, const Matching& matching) {
  std::vector<char> used(g.order(), 0);
  for (auto [u, v] : matching) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) return false;
    if (used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

}  // namespace oitdr
