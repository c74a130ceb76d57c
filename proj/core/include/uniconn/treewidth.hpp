#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "uniconn/constructions.hpp"
#include "uniconn/graph.hpp"

namespace uniconn {

// The subset dynamic program keeps one byte per vertex subset.
inline constexpr int kDefaultTreewidthBudget = 22;

struct TreeDecomposition {
  std::vector<std::vector<VertexId>> bags;     // sorted, duplicate-free
  std::vector<std::pair<int, int>> tree_edges;

  int node_count() const { return static_cast<int>(bags.size()); }
};

enum class DecompositionDefect {
  None,
  Empty,
  BagOutOfRange,
  NotATree,
  VertexMissing,
  EdgeMissing,
  SubtreeDisconnected,
};

DecompositionDefect validate(const Graph& g, const TreeDecomposition& td);
bool is_valid_decomposition(const Graph& g, const TreeDecomposition& td);

int width(const TreeDecomposition& td);  // error on an empty decomposition

struct TreewidthResult {
  int value = 0;
  TreeDecomposition decomposition;
  // Lexicographically smallest elimination ordering among those realizing
  // the optimum; makes results reproducible byte for byte.
  std::vector<VertexId> elimination_order;
};

// Exact treewidth by dynamic programming over vertex subsets, with a
// witnessing decomposition derived from the elimination ordering.
TreewidthResult treewidth_exact(const Graph& g,
                                int budget = kDefaultTreewidthBudget);

// A degree-3 vertex is safe iff two of its neighbors are adjacent or can be
// made adjacent without raising the treewidth.
bool is_safe_vertex(const Graph& g, VertexId v,
                    int budget = kDefaultTreewidthBudget);

// Minimum-width decomposition holding v and two of its neighbors in one
// bag; exists exactly when v is safe.
TreeDecomposition safe_decomposition(const Graph& g, VertexId v,
                                     int budget = kDefaultTreewidthBudget);

struct CombineResult {
  // Decomposition of bridge(g1, v1, g2, v2, m) under that graph's numbering.
  TreeDecomposition decomposition;
  std::array<VertexId, 3> left_labels;   // x1, y1, z1 in g1 ids
  std::array<VertexId, 3> right_labels;  // their matched images in g2 ids
  int complete_pairs = 0;                // size of F in the chosen bag pair
};

// Merges decompositions of the two sides into one of the bridged graph with
// width max(width(d1), width(d2)).  Requires some bag of d1 to contain v1
// with two of its neighbors, likewise for d2, and max width >= 3.
CombineResult combine_decompositions_bridge(const Graph& g1,
                                            const TreeDecomposition& d1,
                                            VertexId v1, const Graph& g2,
                                            const TreeDecomposition& d2,
                                            VertexId v2,
                                            const BridgeMatching& m);

struct CliqueSum {
  Graph graph;
  std::vector<VertexId> map1;
  std::vector<VertexId> map2;
};

// Disjoint union with s[i] identified with t[i]; both must be cliques of
// equal size.
CliqueSum clique_sum(const Graph& g1, const std::vector<VertexId>& s,
                     const Graph& g2, const std::vector<VertexId>& t);

struct LineGraphBound {
  int tw = 0;
  int tw_line = 0;
  bool holds = false;  // tw <= 2 * tw_line + 1
};
LineGraphBound line_graph_bound_check(const Graph& g,
                                      int budget = kDefaultTreewidthBudget);

// Builds the clique-sum H of the two line graphs identified along the edge
// tripods at v1 and v2, maps the line graph of the bridged graph into it by
// edge identity, and checks that map lands on a proper subgraph.
bool bridge_line_subgraph_check(const Graph& g1, VertexId v1, const Graph& g2,
                                VertexId v2, const BridgeMatching& m);

struct ExtremalTwBound {
  int treewidth = 0;
  bool within_bound = false;  // treewidth <= 13
};
ExtremalTwBound extremal_tw_bound(const Graph& g,
                                  int budget = kDefaultTreewidthBudget);

// Header line "s td <bags> <max_bag_size> <n>", one "b <id> <v...>" line per
// bag, then tree edges; everything 1-indexed.
std::string decomposition_to_text(const TreeDecomposition& td);

std::string decomposition_to_json(const TreeDecomposition& td);
TreeDecomposition decomposition_from_json(const std::string& text);

}  // namespace uniconn
