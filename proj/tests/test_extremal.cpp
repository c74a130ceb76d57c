#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "support/oracles.hpp"
#include "uniconn/canonical.hpp"
#include "uniconn/connectivity.hpp"
#include "uniconn/errors.hpp"
#include "uniconn/extremal.hpp"
#include "uniconn/graph.hpp"
#include "uniconn/graph6.hpp"

using namespace uniconn;

namespace {

std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> tuple_set(
    const std::vector<OperationProfile>& profiles) {
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  for (const auto& p : profiles) out.insert({{p.j, p.t}, {p.p, p.s}});
  return out;
}

Graph prism() {
  return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                        {0, 3}, {1, 4}, {2, 5}});
}

}  // namespace

TEST_SUITE("extremal") {
  TEST_CASE("bounds") {
    CHECK(extremal_bound(4) == 4);
    CHECK(extremal_bound(5) == 4);
    CHECK(extremal_bound(10) == 8);
    CHECK_THROWS_AS(extremal_bound(3), std::invalid_argument);

    CHECK(mader_bound(10, 3) == 6);
    CHECK(mader_bound(4, 3) == 3);  // ceil(14/5); the k=3 bound improves this to 4
    CHECK_THROWS_AS(mader_bound(3, 3), std::invalid_argument);
    for (int n = 4; n <= 60; ++n) {
      CHECK(extremal_bound(n) >= mader_bound(n, 3));
    }
  }

  TEST_CASE("is_extremal") {
    CHECK(is_extremal(complete_graph(4)));
    CHECK(is_extremal(wheel(5)));
    CHECK(!is_extremal(wheel(10)));
    CHECK_THROWS_AS(is_extremal(cycle_graph(5)), std::invalid_argument);
  }

  TEST_CASE("feasible profiles match the closed cases") {
    CHECK(tuple_set(feasible_profiles(10)) ==
          tuple_set({make_profile(10, 1, 1, 2, 0), make_profile(10, 2, 0, 2, 0),
                     make_profile(10, 1, 0, 2, 2)}));
    CHECK(tuple_set(feasible_profiles(5)) ==
          tuple_set({make_profile(5, 0, 0, 1, 0)}));
    CHECK(tuple_set(feasible_profiles(6)) ==
          tuple_set({make_profile(6, 0, 0, 1, 1)}));
    CHECK_THROWS_AS(feasible_profiles(4), std::invalid_argument);
  }

  TEST_CASE("feasible profiles equal the integer scan") {
    // Independent re-derivation: p = k-1 plus the size identity, the
    // bridge/primary inequality, and the cap p <= floor((n-2)/3).
    for (int n = 5; n <= 23; ++n) {
      const int ell = (n + 1) % 3 - 1;
      const int k = (n - ell) / 3;
      std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> scan;
      for (int j = 0; 2 * j <= n; ++j) {
        for (int t = 0; 2 * t <= n; ++t) {
          for (int p = 0; p <= n; ++p) {
            const int s = n - 4 - 2 * j - 2 * t - p;
            if (s < 0) continue;
            if (j + 1 < p) continue;
            if (p > (n - 2) / 3) continue;
            if (p != k - 1) continue;
            scan.insert({{j, t}, {p, s}});
          }
        }
      }
      CHECK(tuple_set(feasible_profiles(n)) == scan);
    }
  }

  TEST_CASE("profile arithmetic") {
    for (int n = 4; n <= 40; ++n) {
      const OperationProfile p = make_profile(n, 0, 0, 0, 0);
      CHECK(p.n == 3 * p.k + p.ell);
      CHECK(p.ell >= -1);
      CHECK(p.ell <= 1);
    }
  }

  TEST_CASE("generated extremal graphs attain the bound") {
    for (int n = 4; n <= 13; ++n) {
      for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const GeneratedExtremal made = generate_extremal(n, seed);
        CHECK(made.graph.vertex_count() == n);
        CHECK(is_uniformly_k_connected(made.graph, 3));
        CHECK(is_extremal(made.graph));
        CHECK(nu(made.graph) == n - made.profile.p);
        if (n >= 5) {
          const auto feasible = tuple_set(feasible_profiles(n));
          CHECK(feasible.count({{made.profile.j, made.profile.t},
                                {made.profile.p, made.profile.s}}) == 1);
        }
      }
    }
  }

  TEST_CASE("generation worked examples") {
    const GeneratedExtremal k4 = generate_extremal(4, 1);
    CHECK(k4.graph == complete_graph(4));
    CHECK(k4.profile.j + k4.profile.t + k4.profile.p + k4.profile.s == 0);

    const GeneratedExtremal n8 = generate_extremal(8, 5);
    CHECK(n8.profile.j == 1);
    CHECK(n8.profile.t == 0);
    CHECK(n8.profile.p == 2);
    CHECK(n8.profile.s == 0);

    const GeneratedExtremal n10 =
        generate_extremal(10, 7, make_profile(10, 1, 1, 2, 0));
    CHECK(n10.profile.t == 1);
    CHECK(is_extremal(n10.graph));
    CHECK_THROWS_AS(generate_extremal(10, 7, make_profile(10, 3, 0, 2, 0)),
                    std::invalid_argument);
  }

  TEST_CASE("replaying a generated recipe reproduces the graph") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const GeneratedExtremal made = generate_extremal(11, seed);
      const ReplayResult r = replay(made.recipe);
      CHECK(graph6_encode(r.graph) == graph6_encode(made.graph));
      CHECK(r.profile == made.profile);
    }
  }

  TEST_CASE("enumeration small cases") {
    CHECK(enumerate_extremal(4).all ==
          std::vector<std::string>{canonical_graph6(complete_graph(4))});
    CHECK(enumerate_extremal(5).all ==
          std::vector<std::string>{canonical_graph6(wheel(5))});
    CHECK(enumerate_extremal(6).all ==
          std::vector<std::string>{canonical_graph6(wheel(6))});
    CHECK_THROWS_AS(enumerate_extremal(14), BudgetError);
    CHECK_THROWS_AS(enumerate_extremal(3), std::invalid_argument);
  }

  TEST_CASE("enumeration at seven contains the named constructions") {
    const Enumeration e = enumerate_extremal(7);
    const std::set<std::string> all(e.all.begin(), e.all.end());

    const Graph k33_spoke = spoke(complete_bipartite(3, 3), 0, 3, 1).graph;
    CHECK(all.count(canonical_graph6(k33_spoke)) == 1);

    std::set<std::string> prism_spokes;
    const Graph pr = prism();
    for (const Edge& e2 : pr.edges()) {
      for (VertexId x = 0; x < 6; ++x) {
        if (x == e2.u || x == e2.v) continue;
        prism_spokes.insert(canonical_graph6(spoke(pr, e2.u, e2.v, x).graph));
      }
    }
    for (const std::string& text : prism_spokes) CHECK(all.count(text) == 1);

    const Graph k4 = complete_graph(4);
    const Graph w5 = wheel(5);
    const std::string bridged = canonical_graph6(
        bridge(k4, 0, w5, 0, all_matchings(k4, 0, w5, 0)[0]).graph);
    CHECK(all.count(bridged) == 1);
  }

  TEST_CASE("enumeration agrees with the labeled-graph oracle at five and six") {
    for (int n : {5, 6}) {
      std::set<std::string> oracle;
      testing::for_each_uniform3(n, [&](const Graph& g) {
        if (nu(g) == extremal_bound(n)) oracle.insert(canonical_graph6(g));
      });
      const Enumeration e = enumerate_extremal(n);
      CHECK(oracle == std::set<std::string>(e.all.begin(), e.all.end()));
    }
  }

  TEST_CASE("profile groups partition the union") {
    const Enumeration e = enumerate_extremal(10);
    std::set<std::string> unioned;
    for (const auto& pc : e.by_profile) {
      CHECK(std::is_sorted(pc.graphs.begin(), pc.graphs.end()));
      unioned.insert(pc.graphs.begin(), pc.graphs.end());
    }
    CHECK(unioned == std::set<std::string>(e.all.begin(), e.all.end()));
    CHECK(e.bound == extremal_bound(10));
    for (const std::string& text : e.all) {
      const Graph g = graph6_decode(text);
      CHECK(is_uniformly_k_connected(g, 3));
      CHECK(is_extremal(g));
    }
  }
}
