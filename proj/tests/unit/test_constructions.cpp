#include <doctest.h>

#include <random>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"
#include "oitdr/checks.hpp"
#include "oitdr/constructions.hpp"
#include "oitdr/families.hpp"
#include "oitdr/tree_dp.hpp"

using namespace oitdr;
using testing::graph;
using testing::ints;

namespace {

void require_sound(const Graph& g, const ConstructionOutcome& c) {
  CHECK(check_oitdrdf(g, c.labeling).valid());
  CHECK(weight(c.labeling) == c.claimed_bound);
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("closed forms") {
    CHECK(path_value(4) == 6);
    CHECK(path_value(3) == 4);
    CHECK(cycle_value(10) == 12);
    CHECK(cycle_value(4) == 5);
    CHECK_THROWS_AS(path_value(2), PreconditionError);
    CHECK_THROWS_AS(cycle_value(2), PreconditionError);
  }

  TEST_CASE("path and cycle labelings") {
    const auto p10 = path_labeling(10);
    CHECK(ints(p10.labeling) == std::vector<int>{1, 2, 0, 2, 1, 1, 2, 0, 2, 1});
    CHECK(p10.claimed_bound == 12);
    CHECK(check_oitdrdf(path_graph(4), path_labeling(4).labeling).valid());
    CHECK(weight(path_labeling(4).labeling) == 6);
    CHECK(ints(path_labeling(6).labeling) == std::vector<int>{1, 2, 0, 2, 1, 2});
    CHECK(weight(path_labeling(6).labeling) == 8);

    for (int p = 3; p <= 14; ++p) {
      const auto pl = path_labeling(p);
      require_sound(path_graph(p), pl);
      CHECK(pl.claimed_bound == *oracle::min_weight(oracle::simple_of(path_graph(p)), oracle::kOitd));
      const auto cl = cycle_labeling(p);
      require_sound(cycle_graph(p), cl);
      CHECK(cl.claimed_bound == *oracle::min_weight(oracle::simple_of(cycle_graph(p)), oracle::kOitd));
    }
    for (int p = 15; p <= 1000; ++p) {
      require_sound(path_graph(p), path_labeling(p));
      require_sound(cycle_graph(p), cycle_labeling(p));
      CHECK(path_labeling(p).claimed_bound == solve_tree(path_graph(p)).weight);
    }
  }

  TEST_CASE("fixed small path tables") {
    const std::vector<std::vector<int>> tables{
        {1, 3, 0}, {1, 2, 2, 1}, {1, 2, 0, 2, 1}, {1, 2, 0, 2, 1, 2}, {1, 2, 0, 2, 1, 1, 2}};
    const std::vector<int> weights{4, 6, 6, 8, 9};
    for (int p = 3; p <= 7; ++p) {
      CHECK(ints(path_labeling(p).labeling) == tables[p - 3]);
      CHECK(weight(path_labeling(p).labeling) == weights[p - 3]);
    }
  }

  TEST_CASE("matching labeling examples") {
    const auto p4 = path_graph(4);
    const Matching m4{{0, 1}, {2, 3}};
    const auto a = matching_labeling(p4, m4);
    require_sound(p4, a);
    CHECK(a.claimed_bound == 6);

    const auto c5 = cycle_graph(5);
    const auto b = matching_labeling(c5, maximum_matching(c5));
    require_sound(c5, b);
    CHECK(b.claimed_bound == 7);

    const auto k2 = path_graph(2);
    const auto c = matching_labeling(k2, Matching{{0, 1}});
    CHECK(ints(c.labeling) == std::vector<int>{2, 1});
    CHECK(c.claimed_bound == 3);

    CHECK_THROWS_AS(matching_labeling(p4, Matching{{1, 2}}), PreconditionError);
    CHECK_THROWS_AS(matching_labeling(p4, Matching{{0, 2}}), PreconditionError);
  }

  TEST_CASE("triangle-free matching labeling") {
    const auto c6 = cycle_graph(6);
    const auto a = matching_labeling_triangle_free(c6, Matching{{0, 1}, {2, 3}, {4, 5}});
    require_sound(c6, a);
    CHECK(a.claimed_bound == 9);

    const auto c4 = cycle_graph(4);
    const auto b = matching_labeling_triangle_free(c4, Matching{{0, 1}, {2, 3}});
    require_sound(c4, b);
    CHECK(b.claimed_bound == 6);

    CHECK_THROWS_AS(matching_labeling_triangle_free(cycle_graph(3), Matching{{0, 1}}), PreconditionError);
    CHECK_THROWS_AS(matching_labeling_triangle_free(path_graph(4), Matching{{0, 1}, {2, 3}}), PreconditionError);
  }

  TEST_CASE("matching labelings on random connected graphs") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 8);
      const auto g = random_connected(n, rng(), 35);
      const auto m = maximum_matching(g);
      const auto c = matching_labeling(g, m);
      require_sound(g, c);
      CHECK(c.claimed_bound == n + static_cast<long long>(m.size()));
      CHECK(c.claimed_bound >= solve_oitdrd(g).weight);
      if (is_triangle_free(g) && g.min_degree() >= 2) require_sound(g, matching_labeling_triangle_free(g, m));
    }
  }

  TEST_CASE("corona labeling") {
    const auto [p4, a] = corona_labeling(path_graph(2));
    CHECK(p4.order() == 4);
    require_sound(p4, a);
    CHECK(a.claimed_bound == 6);

    const auto [k2, b] = corona_labeling(graph(1, {}));
    CHECK(k2.size() == 1);
    CHECK(b.claimed_bound == 3);

    for (int n = 1; n <= 4; ++n) {
      for_each_connected_graph(n, [&](const Graph& f) {
        const auto [host, c] = corona_labeling(f);
        require_sound(host, c);
        CHECK(c.claimed_bound == solve_oitdrd(host).weight);
      });
    }
  }

  TEST_CASE("stars and double stars") {
    const auto p4 = double_star_labeling(1, 1);
    CHECK(ints(p4.labeling) == std::vector<int>{0, 3, 3, 0});
    require_sound(double_star(1, 1), p4);
    require_sound(double_star(3, 5), double_star_labeling(3, 5));
    CHECK(double_star_labeling(3, 5).claimed_bound == 6);
    const auto s = star_labeling(4);
    CHECK(ints(s.labeling) == std::vector<int>{3, 1, 0, 0});
    require_sound(star_graph(4), s);
    CHECK_THROWS_AS(double_star_labeling(3, 2), PreconditionError);
    CHECK_THROWS_AS(star_labeling(2), PreconditionError);
  }

  TEST_CASE("regular girth-8 labeling") {
    const auto c8 = cycle_graph(8);
    for (auto [r, r2] : c8.edges()) {
      const auto c = regular_girth8_labeling(c8, r, r2);
      require_sound(c8, c);
      CHECK(c.claimed_bound == 10);
    }
    CHECK(solve_oitdrd(c8).weight == 10);

    const auto tc = tutte_coxeter_graph();
    for (auto [r, r2] : tc.edges()) {
      const auto c = regular_girth8_labeling(tc, r, r2);
      require_sound(tc, c);
      CHECK(c.claimed_bound == 40);
    }
    CHECK_THROWS_AS(regular_girth8_labeling(cycle_graph(7), 0, 1), PreconditionError);
    CHECK_THROWS_AS(regular_girth8_labeling(path_graph(9), 0, 1), PreconditionError);
    CHECK_THROWS_AS(regular_girth8_labeling(c8, 0, 2), PreconditionError);
  }

  TEST_CASE("json") {
    const auto s = construction_to_json(star_labeling(4));
    CHECK(s == R"({"n":4,"labels":[3,1,0,0],"construction":"star","claimed_bound":4})");
  }
}
