#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace uniconn {

using VertexId = int;

// Unordered vertex pair, stored with u < v.  Loops are rejected at
// construction time; no operation in this library produces one.
struct Edge {
  VertexId u = -1;
  VertexId v = -1;

  Edge() = default;
  Edge(VertexId a, VertexId b);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1.  Neighbor lists are
// kept sorted and an adjacency bitset backs O(1) edge queries.  All editing
// operations return new graphs.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }
  bool has_edge(VertexId a, VertexId b) const;
  std::span<const VertexId> neighbors(VertexId v) const;
  int degree(VertexId v) const;
  std::vector<int> degrees() const;
  int min_degree() const;  // error on the empty graph

  // Row of the adjacency bitset, packed 64 vertices per word.
  std::span<const std::uint64_t> adjacency_row(VertexId v) const;
  int row_words() const { return stride_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int stride_ = 0;
  std::vector<Edge> edges_;                  // sorted, no duplicates
  std::vector<std::vector<VertexId>> adj_;   // sorted neighbor lists
  std::vector<std::uint64_t> bits_;          // n_ rows of stride_ words

  void check_vertex(VertexId v) const;
};

// Duplicate pairs collapse to one edge; loops and out-of-range endpoints
// are errors.
Graph make_graph(int n, const std::vector<Edge>& edges);

Graph complete_graph(int n);                 // n >= 1
Graph complete_bipartite(int a, int b);      // a, b >= 1
Graph cycle_graph(int n);                    // n >= 3
Graph path_graph(int n);                     // n >= 1

// Wheel on n vertices: hub n-1 joined to the cycle 0..n-2.  Requires n >= 4.
Graph wheel(int n);

struct VertexDeletion {
  Graph graph;
  std::vector<VertexId> old_to_new;  // -1 for the deleted vertex
};
VertexDeletion delete_vertex(const Graph& g, VertexId v);

Graph delete_edge(const Graph& g, Edge e);        // edge must exist
Graph add_edge(const Graph& g, VertexId a, VertexId b);  // must not exist

struct Contraction {
  Graph graph;
  std::vector<VertexId> old_to_new;
};
// Contracts e = uv by merging v into u; parallel edges collapse and the
// result is renumbered densely.
Contraction contract_edge(const Graph& g, Edge e);

struct LineGraph {
  Graph graph;
  std::vector<Edge> vertex_edges;  // line-graph vertex i represents this edge
};
// Vertices of the line graph are g.edges() in order; two are adjacent iff
// the underlying edges share an endpoint.
LineGraph line_graph(const Graph& g);

// Position of e in g.edges(), or -1 when absent.
int edge_index(const Graph& g, Edge e);

// New graph where vertex i is old vertex ordering[i]; ordering must be a
// permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const VertexId> ordering);

bool is_connected(const Graph& g);  // vacuously true for n <= 1

}  // namespace uniconn
