// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "oitdr/bounds.hpp"
#include "oitdr/checks.hpp"
#include "oitdr/cli.hpp"
#include "oitdr/constructions.hpp"
#include "oitdr/families.hpp"
#include "oitdr/reduction.hpp"
#include "oitdr/solver.hpp"
#include "oitdr/tree_dp.hpp"

#ifndef OITDR_DATA_DIR
#define OITDR_DATA_DIR "data"
#endif

using namespace oitdr;

namespace {

/// Collects failures; keeps the first few messages for the report line.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 3) messages_.push_back(what);
  }
  void note(std::string s) { notes_.push_back(std::move(s)); }
  bool passed() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    for (const auto& n : notes_) os << "; " << n;
    if (failures_) {
      os << "; " << failures_ << " failed:";
      for (const auto& m : messages_) os << " [" << m << "]";
    }
    return os.str();
  }

 private:
  long long checks_ = 0;
  long long failures_ = 0;
  std::vector<std::string> messages_;
  std::vector<std::string> notes_;
};

std::string id(const Graph& g) {
  std::string s = "n=" + std::to_string(g.order()) + " E={";
  for (auto [u, v] : g.edges()) s += std::to_string(u) + "-" + std::to_string(v) + " ";
  return s + "}";
}

long long ceil_6p_5(long long p) { return (6 * p + 4) / 5; }

void for_each_connected_upto(int lo, int hi, const std::function<void(const Graph&)>& visit) {
  for (int n = lo; n <= hi; ++n) for_each_connected_graph(n, visit);
}

// 1 -----------------------------------------------------------------------
void paths_and_cycles(Tally& t) {
  for (int p = 3; p <= 12; ++p) {
    const long long path_expect = p == 4 ? 6 : ceil_6p_5(p);
    const auto pg = path_graph(p);
    const auto cg = cycle_graph(p);
    t.expect(*oracle::min_weight(oracle::simple_of(pg), oracle::kOitd) == path_expect,
             "brute force P" + std::to_string(p));
    t.expect(*oracle::min_weight(oracle::simple_of(cg), oracle::kOitd) == ceil_6p_5(p),
             "brute force C" + std::to_string(p));
    t.expect(solve_oitdrd(pg).weight == path_expect, "solver P" + std::to_string(p));
    t.expect(solve_oitdrd(cg).weight == ceil_6p_5(p), "solver C" + std::to_string(p));
  }
  for (int p = 3; p <= 1000; ++p) {
    t.expect(solve_tree(path_graph(p)).weight == (p == 4 ? 6 : ceil_6p_5(p)), "tree dp P" + std::to_string(p));
  }
}

// 2 -----------------------------------------------------------------------
void tree_dp_oracle(Tally& t) {
  int trees = 0;
  for (int n = 2; n <= 10; ++n) {
    for_each_free_tree(n, [&](const Graph& tree) {
      ++trees;
      const auto dp = solve_tree(tree);
      const auto bb = solve_oitdrd(tree);
      t.expect(dp.weight == bb.weight && bb.optimal(), "free tree " + id(tree));
      t.expect(check_oitdrdf(tree, dp.witness).valid() && weight(dp.witness) == dp.weight, "dp witness " + id(tree));
    });
  }
  t.note(std::to_string(trees) + " free trees (199 with 3<=n<=10, plus K2)");
  std::mt19937_64 rng(20240501);
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const auto tree = random_tree(n, rng());
    t.expect(solve_tree(tree).weight == solve_oitdrd(tree).weight, "random tree " + id(tree));
  }
}

// 3 -----------------------------------------------------------------------
void double_stars(Tally& t) {
  for (int r = 1; r <= 5; ++r) {
    for (int s = r; s <= 5; ++s) {
      const auto g = double_star(r, s);
      t.expect(solve_oitdrd(g).weight == 6, "solver DS" + std::to_string(r) + "," + std::to_string(s));
      if (g.order() <= 10) {
        t.expect(*oracle::min_weight(oracle::simple_of(g), oracle::kOitd) == 6,
                 "brute force DS" + std::to_string(r) + "," + std::to_string(s));
      }
    }
  }
  for (int r = 1; r <= 50; ++r) {
    for (int s = r; s <= 50; ++s) {
      t.expect(solve_tree(double_star(r, s)).weight == 6, "tree dp DS" + std::to_string(r) + "," + std::to_string(s));
    }
  }
}

// 4 -----------------------------------------------------------------------
void corona_characterization(Tally& t) {
  int coronas = 0;
  for (int n = 2; n <= 10; ++n) {
    for_each_free_tree(n, [&](const Graph& tree) {
      const bool extremal = 2 * solve_tree(tree).weight == 3LL * n;
      const bool recognized = is_corona(tree);
      coronas += recognized;
      t.expect(extremal == recognized, "tree " + id(tree));
      t.expect(recognized == oracle::corona_tree(oracle::simple_of(tree)), "recognizer " + id(tree));
    });
  }
  t.note(std::to_string(coronas) + " coronas");
}

// 5 -----------------------------------------------------------------------
void stem_bound(Tally& t) {
  auto holds = [](const Graph& tree, long long gamma) {
    const long long p = tree.order();
    const long long s = classify_vertices(tree).stems;
    return 5 * gamma <= 6 * p + 3 * s;
  };
  for (int n = 3; n <= 10; ++n) {
    for_each_free_tree(n, [&](const Graph& tree) {
      const auto report = tree_bound_report(tree);
      t.expect(report.all_hold(), "report " + id(tree));
      t.expect(holds(tree, solve_tree(tree).weight), "free tree " + id(tree));
    });
  }
  std::mt19937_64 rng(77);
  for (int i = 0; i < 10000; ++i) {
    const int n = 3 + static_cast<int>(rng() % 198);
    const auto tree = random_tree(n, rng());
    t.expect(holds(tree, solve_tree(tree).weight), "random tree n=" + std::to_string(n));
  }
  // Equality on coronas: every free tree base up to order 10, random bases up to 100.
  auto tight = [&](const Graph& base) {
    const auto host = corona(base);
    const auto report = tree_bound_report(host);
    const auto* row = report.find("stem_upper");
    t.expect(row && row->tight, "corona of " + id(base));
  };
  int bases = 0;
  for (int n = 2; n <= 10; ++n) {
    for_each_free_tree(n, [&](const Graph& f) {
      tight(f);
      ++bases;
    });
  }
  for (int n = 11; n <= 100; ++n) {
    for (int k = 0; k < 5; ++k) {
      tight(random_tree(n, rng()));
      ++bases;
    }
  }
  t.note(std::to_string(bases) + " corona bases with 2<=n(F)<=100");
}

// 6 -----------------------------------------------------------------------
void bound_chain(Tally& t) {
  long long graphs = 0, tcoi_rows = 0;
  auto run = [&](const Graph& g) {
    ++graphs;
    const auto r = bound_report(g);
    for (const char* name : {"oidr_lower", "oidr_upper", "tcoi_lower", "degree_lower"}) {
      const auto* row = r.find(name);
      if (!row) {
        t.expect(false, std::string("missing row ") + name);
        continue;
      }
      t.expect(row->known, std::string(name) + " unknown on " + id(g));
      if (row->applicable) t.expect(row->holds, std::string(name) + " violated on " + id(g));
    }
    tcoi_rows += r.find("tcoi_lower")->applicable;
  };
  for_each_connected_upto(2, 6, run);
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 1000; ++i) {
    const int n = 7 + static_cast<int>(i % 2);
    run(random_connected(n, rng(), 10 + static_cast<int>(rng() % 70)));
  }
  t.note(std::to_string(graphs) + " graphs, " + std::to_string(tcoi_rows) + " with a feasible gamma_t,coi");
}

// 7 -----------------------------------------------------------------------
void matching_bounds(Tally& t) {
  long long triangle_free = 0;
  for_each_connected_upto(2, 6, [&](const Graph& g) {
    const auto m = maximum_matching(g);
    const long long alpha = static_cast<long long>(m.size());
    const auto c = matching_labeling(g, m);
    t.expect(check_oitdrdf(g, c.labeling).valid() && weight(c.labeling) == g.order() + alpha, "n+alpha' " + id(g));
    if (is_triangle_free(g) && g.min_degree() >= 2) {
      ++triangle_free;
      const auto d = matching_labeling_triangle_free(g, m);
      t.expect(check_oitdrdf(g, d.labeling).valid() && weight(d.labeling) == 3 * alpha, "3alpha' " + id(g));
    }
  });
  int bases = 0;
  for_each_connected_upto(1, 3, [&](const Graph& f) {
    ++bases;
    const auto host = corona(f);
    t.expect(solve_oitdrd(host).weight == host.order() + matching_number(host), "tight on Cor " + id(f));
  });
  t.note(std::to_string(triangle_free) + " triangle-free min-degree-2 graphs, " + std::to_string(bases) +
         " corona bases");
}

// 8 -----------------------------------------------------------------------
void regular_girth8(Tally& t) {
  const auto c8 = cycle_graph(8);
  const auto c = regular_girth8_labeling(c8, 0, 1);
  t.expect(check_oitdrdf(c8, c.labeling).valid() && weight(c.labeling) == 10, "C8 construction");
  t.expect(*oracle::min_weight(oracle::simple_of(c8), oracle::kOitd) == 10, "C8 brute force optimum");
  const auto tc = read_edge_list_file(std::string(OITDR_DATA_DIR) + "/tutte_coxeter.edges");
  t.expect(tc.order() == 30 && tc.size() == 45 && regular_degree(tc) == 3 && girth(tc) == 8,
           "fixture is 3-regular with girth 8");
  const auto [r, r2] = tc.edges().front();
  const auto d = regular_girth8_labeling(tc, r, r2);
  t.expect(check_oitdrdf(tc, d.labeling).valid(), "Tutte-Coxeter labeling valid");
  t.expect(weight(d.labeling) == 40 && 2 * (30 - 18 + 9 - 1) == 40, "Tutte-Coxeter weight 40");
}

// 9 -----------------------------------------------------------------------
void reduction(Tally& t) {
  const auto start = std::chrono::steady_clock::now();
  int exact = 0;
  for_each_connected_upto(1, 3, [&](const Graph& g) {
    const auto gm = build_gadget(g);
    const auto small = solve_oidrd(g);
    const auto host = solve_oitdrd(gm.host);
    t.expect(small.optimal() && host.optimal(), "exact solves " + id(g));
    t.expect(host.weight == small.weight + 4LL * g.order(), "offset " + id(g));
    const auto v = verify_reduction(g, small.weight);
    t.expect(v.complete() && *v.forward_ok && *v.backward_ok, "verdict " + id(g));
    ++exact;
  });
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(secs <= 900.0, "n<=3 exact equality took " + std::to_string(secs) + " s");
  long long lifted = 0;
  for_each_connected_upto(1, 6, [&](const Graph& g) {
    const auto gm = build_gadget(g);
    t.expect(gm.host.order() == 6 * g.order() && gm.host.size() == g.size() + 5 * static_cast<std::size_t>(g.order()),
             "gadget size " + id(g));
    for (const auto& f : {solve_oidrd(g).witness, Labeling::constant(g.order(), 3)}) {
      const auto h = lift_oidrdf(g, f, gm);
      t.expect(check_oitdrdf(gm.host, h).valid() && weight(h) == weight(f) + 4LL * g.order(), "lift " + id(g));
      ++lifted;
    }
  });
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f s", secs);
  t.note(std::to_string(exact) + " exact equalities in " + buf + ", " + std::to_string(lifted) + " lifts");
}

// 10 ----------------------------------------------------------------------
void observations(Tally& t) {
  long long labelings = 0;
  auto observe = [&](const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> pairs;  // (stem, leaf)
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 1) continue;
      pairs.emplace_back(g.neighbors(v)[0], v);
    }
    if (pairs.empty()) return;
    oracle::for_each_labeling(g.order(), [&](const std::vector<int>& raw) {
      const Labeling f(std::vector<Label>(raw.begin(), raw.end()));
      if (!check_oitdrdf(g, f).valid()) return;
      ++labelings;
      for (auto [y, leaf] : pairs) t.expect(f[y] + f[leaf] >= 3 && f[y] >= 1, "stem/leaf pair on " + id(g));
    });
  };
  for_each_connected_upto(2, 5, observe);
  for (int n = 2; n <= 7; ++n) for_each_free_tree(n, observe);
  std::mt19937_64 rng(90210);
  for (int i = 0; i < 200; ++i) observe(random_connected(6 + i % 2, rng(), 15 + static_cast<int>(rng() % 40)));
  t.note(std::to_string(labelings) + " valid labelings");

  int strong_trees = 0, weak_trees = 0;
  for (int attempt = 0; attempt < 200000 && (strong_trees < 200 || weak_trees < 200); ++attempt) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const auto tree = random_tree(n, rng());
    const auto cls = classify_vertices(tree);
    std::vector<Vertex> strong, weak;
    for (Vertex v = 0; v < n; ++v) {
      if (cls.roles[v] == VertexRole::strong_stem) strong.push_back(v);
      if (cls.roles[v] == VertexRole::weak_stem && tree.degree(v) > 1) weak.push_back(v);
    }
    const bool want_strong = strong_trees < 200 && !strong.empty() && diameter(tree) >= 3;
    const bool want_weak = weak_trees < 200 && !weak.empty();
    if (!want_strong && !want_weak) continue;
    const auto optimal = enumerate_optimal_oitdrdf(tree);
    if (want_strong) {
      ++strong_trees;
      for (Vertex u : strong) {
        const auto leaves = leaf_neighbors(tree, u);
        bool found = false;
        for (const auto& f : optimal) {
          bool ok = f[u] == 3;
          for (Vertex z : leaves) ok = ok && f[z] == 0;
          found = found || ok;
        }
        t.expect(found, "strong stem " + std::to_string(u) + " of " + id(tree));
      }
    }
    if (want_weak) {
      ++weak_trees;
      for (Vertex r : weak) {
        const Vertex leaf = leaf_neighbors(tree, r).front();
        bool found = false;
        for (const auto& f : optimal) found = found || f[r] + f[leaf] == 3;
        t.expect(found, "weak stem " + std::to_string(r) + " of " + id(tree));
      }
    }
  }
  t.expect(strong_trees == 200 && weak_trees == 200, "sampled 200 trees of each stem type");
  t.note(std::to_string(strong_trees) + " trees with a strong stem, " + std::to_string(weak_trees) +
         " with a weak stem");
}

// 11 ----------------------------------------------------------------------
std::string run_cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

std::string without_stats(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  if (doc.is_object()) doc.erase("stats");
  if (doc.is_array()) {
    for (auto& row : doc) row.erase("stats");
  }
  return doc.dump();
}

void determinism_and_performance(Tally& t) {
  const std::vector<std::vector<std::string>> commands{
      {"solve", "--family", "random_connected:12", "--seed", "31", "--format", "json"},
      {"solve", "--family", "random_tree:40", "--seed", "8", "--tree", "--format", "json"},
      {"solve", "--family", "random_connected:10,4", "--param", "gamma-tcoi", "--format", "json"},
      {"bounds", "--family", "random_connected:8,21", "--format", "json"},
      {"bounds", "--family", "random_tree:30,2", "--tree", "--format", "json"},
      {"family", "--family", "random_connected:9,7,35", "--format", "json"},
      {"enumerate", "--family", "random_tree:9,13", "--format", "json"},
      {"reduce", "--family", "random_tree:3,1", "--format", "json"},
      {"bench", "--family", "all_trees:6", "--params", "oitdrd,gamma,matching", "--format", "json"},
  };
  for (const auto& cmd : commands) {
    const auto first = without_stats(run_cli(cmd));
    for (int rep = 0; rep < 3; ++rep) t.expect(without_stats(run_cli(cmd)) == first, "repeat of " + cmd[0] + " " + cmd[2]);
    auto seq = cmd;
    seq.push_back("--sequential");
    t.expect(without_stats(run_cli(seq)) == first, "sequential " + cmd[0] + " " + cmd[2]);
  }
  t.expect(run_cli({"family", "--family", "random_tree:50", "--seed", "3"}) ==
               run_cli({"family", "--family", "random_tree:50,3"}),
           "seed option equals inline seed");

  const auto path = path_graph(1'000'000);
  const auto start = std::chrono::steady_clock::now();
  const auto r = solve_tree(path);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(r.weight == ceil_6p_5(1'000'000), "P_1e6 weight");
  t.expect(r.nodes_explored == 1'000'000, "P_1e6 processes every vertex once");
  t.expect(check_oitdrdf(path, r.witness).valid(), "P_1e6 witness");
  t.expect(secs < 10.0, "P_1e6 took " + std::to_string(secs) + " s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "P_1e6 in %.3f s", secs);
  t.note(buf);
}

struct Criterion {
  int number;
  const char* title;
  void (*body)(Tally&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "path and cycle formulas", paths_and_cycles},
      {2, "tree algorithm equals branch and bound", tree_dp_oracle},
      {3, "double stars have value 6", double_stars},
      {4, "3p/2 exactly on coronas of trees", corona_characterization},
      {5, "tree stem bound and corona tightness", stem_bound},
      {6, "bound chain on small connected graphs", bound_chain},
      {7, "matching constructions", matching_bounds},
      {8, "regular girth-8 construction", regular_girth8},
      {9, "hardness gadget equivalence", reduction},
      {10, "stem and leaf observations", observations},
      {11, "determinism and performance", determinism_and_performance},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !t.passed();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (t.passed() ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " (" << timing
              << "; " << t.summary() << ")" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
