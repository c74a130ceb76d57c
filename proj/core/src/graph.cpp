#include "uniconn/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace uniconn {

namespace {

std::string vertex_str(VertexId v) { return std::to_string(v); }

}  // namespace

Edge::Edge(VertexId a, VertexId b) {
  if (a == b) {
    throw std::invalid_argument("loop edge at vertex " + vertex_str(a));
  }
  u = std::min(a, b);
  v = std::max(a, b);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  stride_ = (n + 63) / 64;
  edges_ = edges;
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adj_.resize(n_);
  bits_.assign(static_cast<std::size_t>(n_) * stride_, 0);
  for (const Edge& e : edges_) {
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw std::invalid_argument("edge endpoint out of range: " +
                                  vertex_str(e.u) + "-" + vertex_str(e.v));
    }
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    bits_[static_cast<std::size_t>(e.u) * stride_ + e.v / 64] |=
        std::uint64_t{1} << (e.v % 64);
    bits_[static_cast<std::size_t>(e.v) * stride_ + e.u / 64] |=
        std::uint64_t{1} << (e.u % 64);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(VertexId v) const {
  if (!has_vertex(v)) {
    throw std::invalid_argument("vertex out of range: " + vertex_str(v));
  }
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) return false;
  return (bits_[static_cast<std::size_t>(a) * stride_ + b / 64] >> (b % 64)) &
         1;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(VertexId v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = static_cast<int>(adj_[v].size());
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) throw std::invalid_argument("min_degree of empty graph");
  int best = degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::span<const std::uint64_t> Graph::adjacency_row(VertexId v) const {
  check_vertex(v);
  return {bits_.data() + static_cast<std::size_t>(v) * stride_,
          static_cast<std::size_t>(stride_)};
}

Graph make_graph(int n, const std::vector<Edge>& edges) {
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("complete_bipartite needs both sides >= 1");
  }
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph wheel(int n) {
  if (n < 4) throw std::invalid_argument("wheel needs n >= 4");
  const int hub = n - 1;
  std::vector<Edge> edges;
  for (int v = 0; v < hub; ++v) {
    edges.emplace_back(v, (v + 1) % hub);
    edges.emplace_back(v, hub);
  }
  return Graph(n, edges);
}

VertexDeletion delete_vertex(const Graph& g, VertexId v) {
  if (!g.has_vertex(v)) {
    throw std::invalid_argument("delete_vertex: vertex out of range");
  }
  std::vector<VertexId> map(g.vertex_count(), -1);
  int next = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (u != v) map[u] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) edges.emplace_back(map[e.u], map[e.v]);
  }
  return {Graph(g.vertex_count() - 1, edges), std::move(map)};
}

Graph delete_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("delete_edge: edge not present");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (const Edge& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  return Graph(g.vertex_count(), edges);
}

Graph add_edge(const Graph& g, VertexId a, VertexId b) {
  Edge e(a, b);
  if (!g.has_vertex(a) || !g.has_vertex(b)) {
    throw std::invalid_argument("add_edge: vertex out of range");
  }
  if (g.has_edge(a, b)) throw std::invalid_argument("add_edge: edge exists");
  std::vector<Edge> edges = g.edges();
  edges.push_back(e);
  return Graph(g.vertex_count(), edges);
}

Contraction contract_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("contract_edge: edge not present");
  }
  const VertexId keep = e.u, gone = e.v;
  std::vector<VertexId> map(g.vertex_count());
  int next = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    map[u] = (u == gone) ? -1 : next++;
  }
  map[gone] = map[keep];
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    VertexId a = map[f.u], b = map[f.v];
    if (a != b) edges.emplace_back(a, b);  // parallel copies dedup in ctor
  }
  return {Graph(g.vertex_count() - 1, edges), std::move(map)};
}

LineGraph line_graph(const Graph& g) {
  const auto& es = g.edges();
  const int m = static_cast<int>(es.size());
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int k = i + 1; k < m; ++k) {
      const bool shares = es[i].u == es[k].u || es[i].u == es[k].v ||
                          es[i].v == es[k].u || es[i].v == es[k].v;
      if (shares) edges.emplace_back(i, k);
    }
  }
  return {Graph(m, edges), es};
}

int edge_index(const Graph& g, Edge e) {
  const auto& es = g.edges();
  auto it = std::lower_bound(es.begin(), es.end(), e);
  if (it == es.end() || *it != e) return -1;
  return static_cast<int>(it - es.begin());
}

Graph relabel(const Graph& g, std::span<const VertexId> ordering) {
  const int n = g.vertex_count();
  if (static_cast<int>(ordering.size()) != n) {
    throw std::invalid_argument("relabel: ordering size mismatch");
  }
  std::vector<VertexId> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    VertexId old = ordering[i];
    if (old < 0 || old >= n || inv[old] != -1) {
      throw std::invalid_argument("relabel: not a permutation");
    }
    inv[old] = i;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.emplace_back(inv[e.u], inv[e.v]);
  return Graph(n, edges);
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

}  // namespace uniconn
