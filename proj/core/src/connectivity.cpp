#include "uniconn/connectivity.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace uniconn {

namespace {

// Dense residual network over split vertices: node 2v is the in-copy, 2v+1
// the out-copy.  Sized for the graphs this library handles (n <= 62).
struct SplitFlow {
  int nodes;
  std::vector<int> cap;

  explicit SplitFlow(const Graph& g, VertexId u, VertexId v)
      : nodes(2 * g.vertex_count()), cap(nodes * nodes, 0) {
    const int inf = g.vertex_count();
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      at(2 * w, 2 * w + 1) = (w == u || w == v) ? inf : 1;
    }
    for (const Edge& e : g.edges()) {
      at(2 * e.u + 1, 2 * e.v) = 1;
      at(2 * e.v + 1, 2 * e.u) = 1;
    }
  }

  int& at(int a, int b) { return cap[a * nodes + b]; }

  // BFS augmentation, one unit per round; stops once `cap_limit` is reached.
  int max_flow(int s, int t, int cap_limit) {
    int flow = 0;
    std::vector<int> parent(nodes);
    while (flow < cap_limit) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[s] = s;
      std::vector<int> queue{s};
      for (std::size_t qi = 0; qi < queue.size() && parent[t] == -1; ++qi) {
        const int a = queue[qi];
        for (int b = 0; b < nodes; ++b) {
          if (parent[b] == -1 && cap[a * nodes + b] > 0) {
            parent[b] = a;
            queue.push_back(b);
          }
        }
      }
      if (parent[t] == -1) break;
      for (int b = t; b != s; b = parent[b]) {
        at(parent[b], b) -= 1;
        at(b, parent[b]) += 1;
      }
      ++flow;
    }
    return flow;
  }
};

int local_connectivity_capped(const Graph& g, VertexId u, VertexId v,
                              int cap_limit) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) {
    throw std::invalid_argument("local_connectivity: vertex out of range");
  }
  if (u == v) {
    throw std::invalid_argument("local_connectivity: identical endpoints");
  }
  SplitFlow net(g, u, v);
  return net.max_flow(2 * u + 1, 2 * v, cap_limit);
}

}  // namespace

int local_connectivity(const Graph& g, VertexId u, VertexId v) {
  return local_connectivity_capped(g, u, v, g.vertex_count());
}

ConnectivityProfile connectivity_profile(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) {
    throw std::invalid_argument("connectivity_profile: need n >= 2");
  }
  ConnectivityProfile prof;
  bool first = true;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const int c = local_connectivity(g, u, v);
      if (first || c < prof.min_value) {
        prof.min_value = c;
        prof.min_pair = {u, v};
      }
      if (first || c > prof.max_value) {
        prof.max_value = c;
        prof.max_pair = {u, v};
      }
      first = false;
    }
  }
  return prof;
}

UniformityResult check_uniformly_k_connected(const Graph& g, int k) {
  if (k < 1) {
    throw std::invalid_argument("check_uniformly_k_connected: need k >= 1");
  }
  const int n = g.vertex_count();
  if (n < 2) return {false, -1, -1, -1};
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const int c = local_connectivity_capped(g, u, v, k + 1);
      if (c != k) return {false, u, v, c};
    }
  }
  return {true, -1, -1, k};
}

bool is_uniformly_k_connected(const Graph& g, int k) {
  return check_uniformly_k_connected(g, k).uniform;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("is_k_connected: need k >= 1");
  const int n = g.vertex_count();
  if (n <= k) return false;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (local_connectivity_capped(g, u, v, k) < k) return false;
    }
  }
  return true;
}

bool is_regular(const Graph& g, int d) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

int nu(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("nu: empty graph");
  const int d = g.min_degree();
  int count = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == d) ++count;
  }
  return count;
}

}  // namespace uniconn
