#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"
#include "uniconn/constructions.hpp"
#include "uniconn/errors.hpp"
#include "uniconn/graph.hpp"
#include "uniconn/treewidth.hpp"

using namespace uniconn;

namespace {

// K4 with every edge subdivided; vertex uv's midpoint listed uv-order
// 01->4, 02->5, 03->6, 12->7, 13->8, 23->9.
Graph subdivided_k4() {
  return make_graph(10, {{0, 4}, {1, 4}, {0, 5}, {2, 5}, {0, 6}, {3, 6},
                         {1, 7}, {2, 7}, {1, 8}, {3, 8}, {2, 9}, {3, 9}});
}

// Width-3 decomposition of subdivided_k4 whose bags hold each original
// vertex with at most one of its (midpoint) neighbors.
TreeDecomposition star_decomposition_sub_k4() {
  TreeDecomposition d;
  d.bags = {{0, 1, 2, 3}, {0, 1, 4}, {0, 2, 5}, {0, 3, 6},
            {1, 2, 7},    {1, 3, 8}, {2, 3, 9}};
  for (int i = 1; i <= 6; ++i) d.tree_edges.emplace_back(0, i);
  return d;
}

TreeDecomposition w5_two_bags() {
  TreeDecomposition d;
  d.bags = {{0, 1, 2, 4}, {0, 2, 3, 4}};
  d.tree_edges = {{0, 1}};
  return d;
}

VertexId image_of(const BridgeMatching& m, VertexId a) {
  for (const auto& [x, y] : m.pairs) {
    if (x == a) return y;
  }
  return -1;
}

std::vector<VertexId> identity_order(int n) {
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

TEST_SUITE("treewidth") {
  TEST_CASE("width and validation basics") {
    const Graph k4 = complete_graph(4);
    TreeDecomposition single;
    single.bags = {{0, 1, 2, 3}};
    CHECK(validate(k4, single) == DecompositionDefect::None);
    CHECK(is_valid_decomposition(k4, single));
    CHECK(width(single) == 3);

    CHECK(validate(wheel(5), w5_two_bags()) == DecompositionDefect::None);
    CHECK(width(w5_two_bags()) == 3);

    CHECK_THROWS_AS(width(TreeDecomposition{}), std::invalid_argument);
  }

  TEST_CASE("each defect is detected") {
    const Graph k4 = complete_graph(4);
    const Graph c4 = cycle_graph(4);

    CHECK(validate(k4, TreeDecomposition{}) == DecompositionDefect::Empty);

    TreeDecomposition range;
    range.bags = {{0, 4}};
    CHECK(validate(k4, range) == DecompositionDefect::BagOutOfRange);

    TreeDecomposition forest;
    forest.bags = {{0, 1, 2, 3}, {0, 1, 2, 3}};
    CHECK(validate(k4, forest) == DecompositionDefect::NotATree);

    TreeDecomposition loop;
    loop.bags = {{0, 1, 2, 3}, {0, 1, 2, 3}};
    loop.tree_edges = {{1, 1}};
    CHECK(validate(k4, loop) == DecompositionDefect::NotATree);

    TreeDecomposition missing_vertex;
    missing_vertex.bags = {{0, 1, 2}};
    CHECK(validate(k4, missing_vertex) == DecompositionDefect::VertexMissing);

    TreeDecomposition missing_edge;
    missing_edge.bags = {{0, 1}, {1, 2}, {2, 3}};
    missing_edge.tree_edges = {{0, 1}, {1, 2}};
    CHECK(validate(c4, missing_edge) == DecompositionDefect::EdgeMissing);

    // Every edge covered, but vertex 0 sits in the two path ends.
    TreeDecomposition torn;
    torn.bags = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    torn.tree_edges = {{0, 1}, {1, 2}, {2, 3}};
    CHECK(validate(c4, torn) == DecompositionDefect::SubtreeDisconnected);
  }

  TEST_CASE("exact treewidth on named graphs") {
    CHECK(treewidth_exact(complete_graph(4)).value == 3);
    CHECK(treewidth_exact(cycle_graph(6)).value == 2);
    CHECK(treewidth_exact(wheel(8)).value == 3);
    CHECK(treewidth_exact(wheel(10)).value == 3);
    CHECK(treewidth_exact(complete_bipartite(3, 3)).value == 3);
    CHECK(treewidth_exact(path_graph(6)).value == 1);
    CHECK(treewidth_exact(Graph(5, {})).value == 0);
    CHECK(treewidth_exact(subdivided_k4()).value == 3);
    CHECK_THROWS_AS(treewidth_exact(Graph()), std::invalid_argument);
  }

  TEST_CASE("witness decompositions validate and realize the value") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const Graph g = testing::random_graph(7, seed);
      const TreewidthResult r = treewidth_exact(g);
      CHECK(r.value == testing::brute_treewidth(g));
      CHECK(is_valid_decomposition(g, r.decomposition));
      CHECK(width(r.decomposition) == r.value);
      CHECK(testing::ordering_width(g, r.elimination_order) == r.value);
    }
  }

  TEST_CASE("maximal cliques land inside single bags") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const Graph g = testing::random_graph(8, seed, 3, 5);
      const TreewidthResult r = treewidth_exact(g);
      for (unsigned mask = 1; mask < (1u << 8); ++mask) {
        std::vector<VertexId> clique;
        for (VertexId v = 0; v < 8; ++v) {
          if (mask & (1u << v)) clique.push_back(v);
        }
        bool is_clique = true;
        for (std::size_t i = 0; i < clique.size() && is_clique; ++i) {
          for (std::size_t k = i + 1; k < clique.size(); ++k) {
            if (!g.has_edge(clique[i], clique[k])) {
              is_clique = false;
              break;
            }
          }
        }
        if (!is_clique) continue;
        bool contained = false;
        for (const auto& bag : r.decomposition.bags) {
          if (std::includes(bag.begin(), bag.end(), clique.begin(),
                            clique.end())) {
            contained = true;
            break;
          }
        }
        CHECK(contained);
      }
    }
  }

  TEST_CASE("elimination order is the lexicographic minimum") {
    std::vector<Graph> cases = {wheel(5), cycle_graph(6), complete_graph(4),
                                path_graph(5)};
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      cases.push_back(testing::random_graph(6, seed));
    }
    for (const Graph& g : cases) {
      const TreewidthResult r = treewidth_exact(g);
      std::vector<VertexId> perm = identity_order(g.vertex_count());
      int best = g.vertex_count();
      std::vector<VertexId> best_order;
      do {
        const int w = testing::ordering_width(g, perm);
        if (w < best) {
          best = w;
          best_order = perm;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      CHECK(r.value == best);
      CHECK(r.elimination_order == best_order);
    }
  }

  TEST_CASE("treewidth never grows under edge contraction") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const Graph g = testing::random_graph(8, seed);
      if (g.edge_count() == 0) continue;
      const int tw = treewidth_exact(g).value;
      const Edge e = g.edges()[seed % g.edges().size()];
      CHECK(treewidth_exact(contract_edge(g, e).graph).value <= tw);
    }
  }

  TEST_CASE("budget and hard cap") {
    CHECK_THROWS_AS(treewidth_exact(Graph(23, {})), BudgetError);
    CHECK_THROWS_AS(treewidth_exact(Graph(25, {}), 30), BudgetError);
    CHECK(treewidth_exact(cycle_graph(23), 23).value == 2);
  }

  TEST_CASE("safe vertices") {
    const Graph k4 = complete_graph(4);
    for (VertexId v = 0; v < 4; ++v) CHECK(is_safe_vertex(k4, v));
    CHECK(is_safe_vertex(wheel(5), 0));

    const Graph spoked_k33 = spoke(complete_bipartite(3, 3), 0, 3, 1).graph;
    std::set<VertexId> unsafe;
    for (VertexId v = 0; v < spoked_k33.vertex_count(); ++v) {
      if (spoked_k33.neighbors(v).size() != 3) continue;
      if (!is_safe_vertex(spoked_k33, v)) unsafe.insert(v);
    }
    CHECK(unsafe == std::set<VertexId>{0, 2});

    CHECK_THROWS_AS(is_safe_vertex(wheel(5), 4), std::invalid_argument);
    CHECK_THROWS_AS(is_safe_vertex(k4, 9), std::invalid_argument);
  }

  TEST_CASE("safe decompositions pin the vertex with two neighbors") {
    for (const auto& [g, v] : {std::pair<Graph, VertexId>{complete_graph(4), 0},
                               {wheel(5), 0},
                               {wheel(7), 2}}) {
      const TreeDecomposition d = safe_decomposition(g, v);
      CHECK(is_valid_decomposition(g, d));
      CHECK(width(d) == treewidth_exact(g).value);
      bool pinned = false;
      for (const auto& bag : d.bags) {
        if (std::find(bag.begin(), bag.end(), v) == bag.end()) continue;
        int hit = 0;
        for (VertexId a : g.neighbors(v)) {
          if (std::find(bag.begin(), bag.end(), a) != bag.end()) ++hit;
        }
        if (hit >= 2) pinned = true;
      }
      CHECK(pinned);
    }
    const Graph spoked_k33 = spoke(complete_bipartite(3, 3), 0, 3, 1).graph;
    CHECK_THROWS_AS(safe_decomposition(spoked_k33, 0), std::invalid_argument);
    CHECK_THROWS_AS(safe_decomposition(wheel(5), 4), std::invalid_argument);
  }

  TEST_CASE("bridge combiner keeps width three over every matching") {
    const Graph w5 = wheel(5);
    const TreeDecomposition d = w5_two_bags();
    const std::vector<int> want_pairs = {2, 1, 1, 1, 1, 2};
    const auto ms = all_matchings(w5, 0, w5, 0);
    REQUIRE(ms.size() == 6);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const CombineResult c =
          combine_decompositions_bridge(w5, d, 0, w5, d, 0, ms[i]);
      const Graph b = bridge(w5, 0, w5, 0, ms[i], false).graph;
      CHECK(is_valid_decomposition(b, c.decomposition));
      CHECK(width(c.decomposition) == 3);
      CHECK(c.complete_pairs == want_pairs[i]);
      CHECK(c.decomposition.node_count() ==
            d.node_count() * 2 + (c.complete_pairs == 1 ? 1 : 2));

      std::set<VertexId> lefts(c.left_labels.begin(), c.left_labels.end());
      CHECK(lefts == std::set<VertexId>{1, 3, 4});
      for (int k = 0; k < 3; ++k) {
        CHECK(c.right_labels[k] == image_of(ms[i], c.left_labels[k]));
      }
    }
  }

  TEST_CASE("bridge combiner on single-bag inputs") {
    const Graph k4 = complete_graph(4);
    TreeDecomposition d;
    d.bags = {{0, 1, 2, 3}};
    for (const auto& m : all_matchings(k4, 0, k4, 0)) {
      const CombineResult c = combine_decompositions_bridge(k4, d, 0, k4, d, 0, m);
      const Graph b = bridge(k4, 0, k4, 0, m, false).graph;
      CHECK(is_valid_decomposition(b, c.decomposition));
      CHECK(width(c.decomposition) == 3);
      CHECK(c.complete_pairs == 3);
    }
  }

  TEST_CASE("bridge combiner rejections") {
    const Graph w5 = wheel(5);
    const auto m = all_matchings(w5, 0, w5, 0)[0];

    TreeDecomposition broken = w5_two_bags();
    broken.bags[0] = {0, 1, 4};  // drops edge 1-2 coverage
    CHECK_THROWS_AS(
        combine_decompositions_bridge(w5, broken, 0, w5, w5_two_bags(), 0, m),
        std::invalid_argument);

    // Valid width-2 inputs: the width hypothesis fails.
    const Graph diamond =
        make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    TreeDecomposition thin;
    thin.bags = {{0, 1, 2}, {0, 1, 3}};
    thin.tree_edges = {{0, 1}};
    REQUIRE(is_valid_decomposition(diamond, thin));
    const auto dm = all_matchings(diamond, 0, diamond, 0)[0];
    CHECK_THROWS_AS(
        combine_decompositions_bridge(diamond, thin, 0, diamond, thin, 0, dm),
        std::invalid_argument);

    // Valid width-3 input whose bags never hold vertex 0 with two
    // neighbors: no qualifying bag on the left side.
    const Graph sub = subdivided_k4();
    const TreeDecomposition star = star_decomposition_sub_k4();
    REQUIRE(is_valid_decomposition(sub, star));
    const auto sm = all_matchings(sub, 0, w5, 0)[0];
    CHECK_THROWS_AS(
        combine_decompositions_bridge(sub, star, 0, w5, w5_two_bags(), 0, sm),
        std::invalid_argument);
  }

  TEST_CASE("clique sums") {
    const Graph t = complete_graph(3);
    const CliqueSum cs = clique_sum(t, {1, 2}, t, {0, 1});
    CHECK(cs.graph.vertex_count() == 4);
    CHECK(cs.graph.edge_count() == 5);
    CHECK(treewidth_exact(cs.graph).value == 2);
    for (int i = 0; i < 2; ++i) CHECK(cs.map2[i] == cs.map1[1 + i]);
    for (const Edge& e : t.edges()) {
      CHECK(cs.graph.has_edge(cs.map1[e.u], cs.map1[e.v]));
      CHECK(cs.graph.has_edge(cs.map2[e.u], cs.map2[e.v]));
    }

    const Graph k4 = complete_graph(4);
    const CliqueSum big = clique_sum(k4, {0, 1, 2}, k4, {1, 2, 3});
    CHECK(big.graph.vertex_count() == 5);
    CHECK(treewidth_exact(big.graph).value == 3);

    CHECK_THROWS_AS(clique_sum(t, {0}, t, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(clique_sum(t, {}, t, {}), std::invalid_argument);
    CHECK_THROWS_AS(clique_sum(t, {0, 0}, t, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(clique_sum(t, {0, 3}, t, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(clique_sum(path_graph(3), {0, 2}, t, {0, 1}),
                    std::invalid_argument);
  }

  TEST_CASE("line graph width bound") {
    const LineGraphBound k4 = line_graph_bound_check(complete_graph(4));
    CHECK(k4.tw == 3);
    CHECK(k4.tw_line == 4);
    CHECK(k4.holds);

    const LineGraphBound star = line_graph_bound_check(complete_bipartite(1, 3));
    CHECK(star.tw == 1);
    CHECK(star.tw_line == 2);
    CHECK(star.holds);

    const LineGraphBound w6 = line_graph_bound_check(wheel(6));
    CHECK(w6.tw == 3);
    CHECK(w6.tw_line == 6);
    CHECK(w6.holds);

    CHECK_THROWS_AS(line_graph_bound_check(Graph(3, {})), std::invalid_argument);
  }

  TEST_CASE("bridged line graphs embed properly in the tripod clique sum") {
    const Graph k4 = complete_graph(4);
    const Graph w5 = wheel(5);
    for (const auto& m : all_matchings(k4, 0, k4, 0)) {
      CHECK(bridge_line_subgraph_check(k4, 0, k4, 0, m));
    }
    for (const auto& m : all_matchings(w5, 0, w5, 0)) {
      CHECK(bridge_line_subgraph_check(w5, 0, w5, 0, m));
    }
  }

  TEST_CASE("extremal corpus width bound") {
    const ExtremalTwBound b = extremal_tw_bound(wheel(7));
    CHECK(b.treewidth == 3);
    CHECK(b.within_bound);
  }

  TEST_CASE("text rendering") {
    const TreewidthResult c4 = treewidth_exact(cycle_graph(4));
    CHECK(decomposition_to_text(c4.decomposition) ==
          "s td 4 3 4\n"
          "b 1 1 2 4\n"
          "b 2 2 3 4\n"
          "b 3 3 4\n"
          "b 4 4\n"
          "1 2\n"
          "2 3\n"
          "3 4\n");
    CHECK_THROWS_AS(decomposition_to_text(TreeDecomposition{}),
                    std::invalid_argument);
  }

  TEST_CASE("json round trip") {
    for (const Graph& g : {wheel(6), cycle_graph(5), complete_graph(4)}) {
      const TreewidthResult r = treewidth_exact(g);
      const std::string text = decomposition_to_json(r.decomposition);
      CHECK(text.find("\"nodes\":[") != std::string::npos);
      CHECK(text.find("\"bags\":{") != std::string::npos);
      CHECK(text.find("\"tree_edges\":[") != std::string::npos);
      const TreeDecomposition back = decomposition_from_json(text);
      CHECK(back.bags == r.decomposition.bags);
      CHECK(back.tree_edges == r.decomposition.tree_edges);
      CHECK(decomposition_to_json(back) == text);
    }
    CHECK_THROWS_AS(decomposition_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(decomposition_from_json("[1, 2"), std::invalid_argument);
  }
}
