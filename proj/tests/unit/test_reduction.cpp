#include <doctest.h>

#include <random>

#include "../support/helpers.hpp"
#include "oitdr/checks.hpp"
#include "oitdr/families.hpp"
#include "oitdr/reduction.hpp"

using namespace oitdr;
using testing::graph;
using testing::labeling;

TEST_SUITE("reduction") {
  TEST_CASE("gadget sizes") {
    const auto k2 = build_gadget(path_graph(2));
    CHECK(k2.host.order() == 12);
    CHECK(k2.host.size() == 11);
    const auto k1 = build_gadget(graph(1, {}));
    CHECK(k1.host.order() == 6);
    CHECK(k1.host.size() == 5);
    const auto c3 = build_gadget(cycle_graph(3));
    CHECK(c3.host.order() == 18);
    CHECK(c3.host.size() == 18);
    CHECK_THROWS_AS(build_gadget(graph(0, {})), PreconditionError);
  }

  TEST_CASE("numbering and recovery") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 9);
      const auto g = testing::random_graph(n, 40, rng);
      const auto gm = build_gadget(g);
      CHECK(gm.host.order() == 6 * n);
      CHECK(gm.host.size() == g.size() + 5 * static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        const auto& s = gm.stars[i];
        CHECK(s.x == i);
        CHECK(s.u == n + 5 * i);
        CHECK(s.d == n + 5 * i + 4);
        CHECK(gm.host.adjacent(s.a, s.x));
        CHECK(gm.host.degree(s.u) == 4);
      }
      std::vector<Vertex> originals(n);
      for (int i = 0; i < n; ++i) originals[i] = i;
      CHECK(induced_subgraph(gm.host, originals) == g);
      CHECK(is_bipartite(gm.host) == is_bipartite(g));
    }
  }

  TEST_CASE("lifting") {
    const auto p2 = path_graph(2);
    const auto gm = build_gadget(p2);
    const auto a = lift_oidrdf(p2, labeling({3, 0}), gm);
    CHECK(weight(a) == 11);
    CHECK(check_oitdrdf(gm.host, a).valid());
    const auto b = lift_oidrdf(p2, labeling({2, 1}), gm);
    CHECK(weight(b) == 11);
    CHECK(check_oitdrdf(gm.host, b).valid());

    const auto p3 = path_graph(3);
    const auto gm3 = build_gadget(p3);
    const auto c = lift_oidrdf(p3, labeling({0, 3, 0}), gm3);
    CHECK(weight(c) == 15);
    CHECK(check_oitdrdf(gm3.host, c).valid());

    CHECK_THROWS_AS(lift_oidrdf(p2, labeling({1, 0}), gm), PreconditionError);
    CHECK_THROWS_AS(lift_oidrdf(p3, labeling({0, 3, 0}), gm), PreconditionError);
  }

  TEST_CASE("verification examples") {
    const auto p2 = path_graph(2);
    const auto v3 = verify_reduction(p2, 3);
    CHECK(v3.gamma_oidr == 3);
    CHECK(v3.gamma_host == 11);
    CHECK(v3.forward_ok == true);
    CHECK(v3.backward_ok == true);

    const auto v2 = verify_reduction(p2, 2);
    CHECK(v2.forward_ok == true);
    CHECK(v2.backward_ok == true);

    const auto k1 = verify_reduction(graph(1, {}), 2);
    CHECK(k1.gamma_oidr == 2);
    CHECK(k1.gamma_host == 6);
    CHECK(k1.complete());

    CHECK_THROWS_AS(verify_reduction(path_graph(4), 4), PreconditionError);
    const auto json = verdict_to_json(v3);
    CHECK(json.find(R"("gamma_host":11)") != std::string::npos);
  }
}
