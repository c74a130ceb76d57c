#include "uniconn/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "uniconn/errors.hpp"

namespace uniconn {

namespace {

// One byte per subset; 2^24 is the point where the table stops being cheap.
constexpr int kHardTreewidthCap = 24;

using Mask = std::uint32_t;

struct SubsetDp {
  int n;
  std::vector<Mask> adj;
  std::vector<std::uint8_t> g;  // g[S] = best width over orderings ending S^c

  explicit SubsetDp(const Graph& graph) : n(graph.vertex_count()) {
    adj.assign(n, 0);
    for (const Edge& e : graph.edges()) {
      adj[e.u] |= Mask{1} << e.v;
      adj[e.v] |= Mask{1} << e.u;
    }
  }

  // Neighbors outside S of the component of v in G[S + v], minus v itself:
  // the back-degree of v when eliminated after S.
  int q(Mask S, int v) const {
    Mask outside = adj[v] & ~S;
    Mask reach = adj[v] & S;
    Mask frontier = reach;
    while (frontier) {
      Mask agg = 0;
      Mask f = frontier;
      while (f) {
        const int u = std::countr_zero(f);
        f &= f - 1;
        agg |= adj[u];
      }
      frontier = agg & S & ~reach;
      reach |= frontier;
      outside |= agg & ~S;
    }
    outside &= ~(Mask{1} << v);
    return std::popcount(outside);
  }

  void run() {
    const Mask full = (Mask{1} << n) - 1;
    g.assign(std::size_t{1} << n, 0);
    if (full == 0) return;
    for (Mask S = full - 1;; --S) {
      int best = INT_MAX;
      Mask rest = full & ~S;
      while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        const int cost = std::max(q(S, v), int{g[S | (Mask{1} << v)]});
        best = std::min(best, cost);
      }
      g[S] = static_cast<std::uint8_t>(best);
      if (S == 0) break;
    }
  }

  // Smallest vertex first among all orderings of width g[0].
  std::vector<VertexId> lex_smallest_order() const {
    const Mask full = (Mask{1} << n) - 1;
    const int tw = g[0];
    std::vector<VertexId> order;
    Mask S = 0;
    for (int i = 0; i < n; ++i) {
      for (int v = 0; v < n; ++v) {
        const Mask bit = Mask{1} << v;
        if (S & bit) continue;
        if (std::max(q(S, v), int{g[S | bit]}) <= tw) {
          order.push_back(v);
          S |= bit;
          break;
        }
      }
    }
    if (S != full) throw std::logic_error("treewidth: ordering incomplete");
    return order;
  }

  // Neighbors outside S of v's component, as a mask (same set q() counts).
  Mask q_set(Mask S, int v) const {
    Mask outside = adj[v] & ~S;
    Mask reach = adj[v] & S;
    Mask frontier = reach;
    while (frontier) {
      Mask agg = 0;
      Mask f = frontier;
      while (f) {
        const int u = std::countr_zero(f);
        f &= f - 1;
        agg |= adj[u];
      }
      frontier = agg & S & ~reach;
      reach |= frontier;
      outside |= agg & ~S;
    }
    return outside & ~(Mask{1} << v);
  }
};

TreeDecomposition decomposition_from_order(const SubsetDp& dp,
                                           const std::vector<VertexId>& order) {
  const int n = dp.n;
  TreeDecomposition td;
  td.bags.resize(n);
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<Mask> qsets(n);
  Mask S = 0;
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    qsets[i] = dp.q_set(S, v);
    Mask bag = qsets[i] | (Mask{1} << v);
    while (bag) {
      td.bags[i].push_back(std::countr_zero(bag));
      bag &= bag - 1;
    }
    S |= Mask{1} << v;
  }
  for (int i = 0; i < n; ++i) {
    // Parent: node of the earliest-eliminated vertex in the q-set, which is
    // always eliminated later than v; isolated tails chain to the next node.
    int parent = -1;
    Mask qs = qsets[i];
    while (qs) {
      const int u = std::countr_zero(qs);
      qs &= qs - 1;
      if (parent == -1 || position[u] < parent) parent = position[u];
    }
    if (parent == -1 && i + 1 < n) parent = i + 1;
    if (parent != -1) td.tree_edges.emplace_back(i, parent);
  }
  return td;
}

}  // namespace

DecompositionDefect validate(const Graph& g, const TreeDecomposition& td) {
  const int n = g.vertex_count();
  const int nodes = td.node_count();
  if (nodes == 0) return DecompositionDefect::Empty;
  for (const auto& bag : td.bags) {
    for (VertexId v : bag) {
      if (v < 0 || v >= n) return DecompositionDefect::BagOutOfRange;
    }
  }
  if (static_cast<int>(td.tree_edges.size()) != nodes - 1) {
    return DecompositionDefect::NotATree;
  }
  std::vector<std::vector<int>> nb(nodes);
  for (const auto& [a, b] : td.tree_edges) {
    if (a < 0 || a >= nodes || b < 0 || b >= nodes || a == b) {
      return DecompositionDefect::NotATree;
    }
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  {
    std::vector<char> seen(nodes, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b : nb[a]) {
        if (!seen[b]) {
          seen[b] = 1;
          ++count;
          stack.push_back(b);
        }
      }
    }
    if (count != nodes) return DecompositionDefect::NotATree;
  }
  std::vector<std::vector<char>> has(nodes, std::vector<char>(n, 0));
  for (int i = 0; i < nodes; ++i) {
    for (VertexId v : td.bags[i]) has[i][v] = 1;
  }
  for (VertexId v = 0; v < n; ++v) {
    bool found = false;
    for (int i = 0; i < nodes && !found; ++i) found = has[i][v];
    if (!found) return DecompositionDefect::VertexMissing;
  }
  for (const Edge& e : g.edges()) {
    bool found = false;
    for (int i = 0; i < nodes && !found; ++i) {
      found = has[i][e.u] && has[i][e.v];
    }
    if (!found) return DecompositionDefect::EdgeMissing;
  }
  for (VertexId v = 0; v < n; ++v) {
    int start = -1, total = 0;
    for (int i = 0; i < nodes; ++i) {
      if (has[i][v]) {
        start = i;
        ++total;
      }
    }
    std::vector<char> seen(nodes, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b : nb[a]) {
        if (!seen[b] && has[b][v]) {
          seen[b] = 1;
          ++count;
          stack.push_back(b);
        }
      }
    }
    if (count != total) return DecompositionDefect::SubtreeDisconnected;
  }
  return DecompositionDefect::None;
}

bool is_valid_decomposition(const Graph& g, const TreeDecomposition& td) {
  return validate(g, td) == DecompositionDefect::None;
}

int width(const TreeDecomposition& td) {
  if (td.bags.empty()) {
    throw std::invalid_argument("width: empty decomposition");
  }
  std::size_t biggest = 0;
  for (const auto& bag : td.bags) biggest = std::max(biggest, bag.size());
  return static_cast<int>(biggest) - 1;
}

TreewidthResult treewidth_exact(const Graph& g, int budget) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("treewidth_exact: empty graph");
  const int cap = std::min(budget, kHardTreewidthCap);
  if (n > cap) {
    throw BudgetError("treewidth_exact: n=" + std::to_string(n) +
                      " exceeds budget " + std::to_string(cap));
  }
  SubsetDp dp(g);
  dp.run();
  TreewidthResult result;
  result.value = dp.g[0];
  result.elimination_order = dp.lex_smallest_order();
  result.decomposition = decomposition_from_order(dp, result.elimination_order);
  return result;
}

bool is_safe_vertex(const Graph& g, VertexId v, int budget) {
  if (!g.has_vertex(v)) {
    throw std::invalid_argument("is_safe_vertex: vertex out of range");
  }
  if (g.degree(v) != 3) {
    throw std::invalid_argument("is_safe_vertex: vertex has degree " +
                                std::to_string(g.degree(v)) + ", need 3");
  }
  const auto nb = g.neighbors(v);
  for (int i = 0; i < 3; ++i) {
    for (int k = i + 1; k < 3; ++k) {
      if (g.has_edge(nb[i], nb[k])) return true;
    }
  }
  const int base = treewidth_exact(g, budget).value;
  for (int i = 0; i < 3; ++i) {
    for (int k = i + 1; k < 3; ++k) {
      if (treewidth_exact(add_edge(g, nb[i], nb[k]), budget).value == base) {
        return true;
      }
    }
  }
  return false;
}

TreeDecomposition safe_decomposition(const Graph& g, VertexId v, int budget) {
  if (!g.has_vertex(v) || g.degree(v) != 3) {
    throw std::invalid_argument("safe_decomposition: need a degree-3 vertex");
  }
  const auto nb = g.neighbors(v);
  for (int i = 0; i < 3; ++i) {
    for (int k = i + 1; k < 3; ++k) {
      if (g.has_edge(nb[i], nb[k])) {
        // {v, nb[i], nb[k]} is a triangle, so every decomposition already
        // holds it inside some bag.
        return treewidth_exact(g, budget).decomposition;
      }
    }
  }
  const int base = treewidth_exact(g, budget).value;
  for (int i = 0; i < 3; ++i) {
    for (int k = i + 1; k < 3; ++k) {
      const Graph plus = add_edge(g, nb[i], nb[k]);
      TreewidthResult r = treewidth_exact(plus, budget);
      if (r.value == base) return r.decomposition;
    }
  }
  throw std::invalid_argument("safe_decomposition: vertex is not safe");
}

namespace {

std::vector<VertexId> sorted_bag(std::vector<VertexId> bag) {
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  return bag;
}

// Replaces `from` by `to` in every bag, keeping bags sorted and
// duplicate-free.
std::vector<std::vector<VertexId>> substitute(
    const std::vector<std::vector<VertexId>>& bags, VertexId from,
    VertexId to) {
  std::vector<std::vector<VertexId>> out;
  out.reserve(bags.size());
  for (const auto& bag : bags) {
    std::vector<VertexId> nb;
    nb.reserve(bag.size());
    for (VertexId v : bag) nb.push_back(v == from ? to : v);
    out.push_back(sorted_bag(std::move(nb)));
  }
  return out;
}

}  // namespace

CombineResult combine_decompositions_bridge(const Graph& g1,
                                            const TreeDecomposition& d1,
                                            VertexId v1, const Graph& g2,
                                            const TreeDecomposition& d2,
                                            VertexId v2,
                                            const BridgeMatching& m) {
  if (validate(g1, d1) != DecompositionDefect::None ||
      validate(g2, d2) != DecompositionDefect::None) {
    throw std::invalid_argument(
        "combine_decompositions_bridge: invalid input decomposition");
  }
  const int w = std::max(width(d1), width(d2));
  if (w < 3) {
    throw std::invalid_argument(
        "combine_decompositions_bridge: need max input width >= 3");
  }
  BridgeResult br = bridge(g1, v1, g2, v2, m, false);

  std::array<VertexId, 3> nb1{}, nb2{};
  {
    auto n1 = g1.neighbors(v1);
    std::copy(n1.begin(), n1.end(), nb1.begin());
  }
  auto image = [&](VertexId a) {
    for (const auto& [x, y] : m.pairs) {
      if (x == a) return y;
    }
    throw std::logic_error("combine: matching misses a neighbor");
  };
  for (int i = 0; i < 3; ++i) nb2[i] = image(nb1[i]);

  // Qualifying bags: contain the deleted vertex plus two of its neighbors.
  auto qualifying = [](const TreeDecomposition& d, VertexId v,
                       std::span<const VertexId> nbs) {
    std::vector<std::pair<int, std::vector<VertexId>>> out;
    for (int i = 0; i < d.node_count(); ++i) {
      const auto& bag = d.bags[i];
      if (std::find(bag.begin(), bag.end(), v) == bag.end()) continue;
      std::vector<VertexId> hit;
      for (VertexId a : nbs) {
        if (std::find(bag.begin(), bag.end(), a) != bag.end()) {
          hit.push_back(a);
        }
      }
      if (hit.size() >= 2) out.emplace_back(i, std::move(hit));
    }
    return out;
  };
  const auto left_bags = qualifying(d1, v1, g1.neighbors(v1));
  const auto right_bags = qualifying(d2, v2, g2.neighbors(v2));
  if (left_bags.empty() || right_bags.empty()) {
    throw std::invalid_argument(
        "combine_decompositions_bridge: no bag holds the bridge vertex with "
        "two neighbors");
  }

  // First bag pair with a matched neighbor pair inside both bags.  Counting
  // |A| + |B| >= 4 against three matching pairs shows F is never empty, but
  // the scan keeps that a checked fact rather than an assumption.
  int s = -1, t = -1;
  std::vector<VertexId> F;
  std::vector<VertexId> A, B;
  for (const auto& [si, a] : left_bags) {
    for (const auto& [ti, b] : right_bags) {
      std::vector<VertexId> f;
      for (VertexId x : a) {
        if (std::find(b.begin(), b.end(), image(x)) != b.end()) {
          f.push_back(x);
        }
      }
      if (!f.empty()) {
        s = si;
        t = ti;
        F = std::move(f);
        A = a;
        B = b;
        break;
      }
    }
    if (s != -1) break;
  }
  if (s == -1) {
    throw std::invalid_argument(
        "combine_decompositions_bridge: no matched pair shared by "
        "qualifying bags");
  }

  VertexId x1, y1, z1;
  if (F.size() == 1) {
    // |A| = |B| = 2 here: a third member of A would force a second
    // complete pair.  y1's image lies outside B and z1's inside.
    x1 = F[0];
    y1 = -1;
    for (VertexId a : A) {
      if (a != x1) y1 = a;
    }
    z1 = -1;
    for (VertexId a : nb1) {
      if (a != x1 && a != y1) z1 = a;
    }
    if (std::find(B.begin(), B.end(), image(z1)) == B.end()) {
      throw std::logic_error("combine: single-pair case lost z2 from B");
    }
  } else {
    x1 = F[0];
    y1 = F[1];
    z1 = -1;
    for (VertexId a : nb1) {
      if (a != x1 && a != y1) z1 = a;
    }
  }
  const VertexId x2 = image(x1), y2 = image(y1), z2 = image(z1);

  const auto& map1 = br.map1;
  const auto& map2 = br.map2;
  TreeDecomposition out;
  const int m1 = d1.node_count();
  const int m2 = d2.node_count();

  auto push_mapped = [&out](const std::vector<std::vector<VertexId>>& bags,
                            const std::vector<VertexId>& map) {
    for (const auto& bag : bags) {
      std::vector<VertexId> nb;
      nb.reserve(bag.size());
      for (VertexId v : bag) nb.push_back(map[v]);
      out.bags.push_back(sorted_bag(std::move(nb)));
    }
  };

  if (F.size() == 1) {
    // Substitute v1 -> z2 and v2 -> y1, then join through one bag
    // {x1, x2, y1, z2}.  z2 lives on the other side, so substitution
    // happens in bridged-graph ids.
    auto bags1 = d1.bags;
    for (auto& bag : bags1) {
      for (VertexId& v : bag) v = (v == v1) ? map2[z2] : map1[v];
      bag = sorted_bag(bag);
      out.bags.push_back(bag);
    }
    auto bags2 = d2.bags;
    for (auto& bag : bags2) {
      for (VertexId& v : bag) v = (v == v2) ? map1[y1] : map2[v];
      bag = sorted_bag(bag);
      out.bags.push_back(bag);
    }
    out.bags.push_back(
        sorted_bag({map1[x1], map2[x2], map1[y1], map2[z2]}));
    const int link = m1 + m2;
    for (const auto& [a, b] : d1.tree_edges) out.tree_edges.emplace_back(a, b);
    for (const auto& [a, b] : d2.tree_edges) {
      out.tree_edges.emplace_back(a + m1, b + m1);
    }
    out.tree_edges.emplace_back(s, link);
    out.tree_edges.emplace_back(link, t + m1);
  } else {
    // Substitute both deleted vertices by z1, then join through bags
    // {x1, y1, y2, z1} and {x1, x2, y2, z1}.
    push_mapped(substitute(d1.bags, v1, z1), map1);
    auto bags2 = d2.bags;
    for (auto& bag : bags2) {
      for (VertexId& v : bag) v = (v == v2) ? map1[z1] : map2[v];
      bag = sorted_bag(bag);
      out.bags.push_back(bag);
    }
    out.bags.push_back(
        sorted_bag({map1[x1], map1[y1], map2[y2], map1[z1]}));
    out.bags.push_back(
        sorted_bag({map1[x1], map2[x2], map2[y2], map1[z1]}));
    const int node_v = m1 + m2;
    const int node_w = m1 + m2 + 1;
    for (const auto& [a, b] : d1.tree_edges) out.tree_edges.emplace_back(a, b);
    for (const auto& [a, b] : d2.tree_edges) {
      out.tree_edges.emplace_back(a + m1, b + m1);
    }
    out.tree_edges.emplace_back(s, node_v);
    out.tree_edges.emplace_back(node_v, node_w);
    out.tree_edges.emplace_back(node_w, t + m1);
  }

  CombineResult result;
  result.decomposition = std::move(out);
  result.left_labels = {x1, y1, z1};
  result.right_labels = {x2, y2, z2};
  result.complete_pairs = static_cast<int>(F.size());
  return result;
}

CliqueSum clique_sum(const Graph& g1, const std::vector<VertexId>& s,
                     const Graph& g2, const std::vector<VertexId>& t) {
  if (s.size() != t.size()) {
    throw std::invalid_argument("clique_sum: clique size mismatch");
  }
  if (s.empty()) {
    throw std::invalid_argument("clique_sum: empty identification");
  }
  auto check_clique = [](const Graph& g, const std::vector<VertexId>& c,
                         const char* side) {
    std::set<VertexId> uniq(c.begin(), c.end());
    if (uniq.size() != c.size()) {
      throw std::invalid_argument(std::string("clique_sum: repeated vertex "
                                              "in ") +
                                  side);
    }
    for (VertexId v : c) {
      if (!g.has_vertex(v)) {
        throw std::invalid_argument(std::string("clique_sum: vertex out of "
                                                "range in ") +
                                    side);
      }
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t k = i + 1; k < c.size(); ++k) {
        if (!g.has_edge(c[i], c[k])) {
          throw std::invalid_argument(std::string("clique_sum: ") + side +
                                      " is not a clique");
        }
      }
    }
  };
  check_clique(g1, s, "S");
  check_clique(g2, t, "T");

  std::vector<VertexId> map1(g1.vertex_count());
  for (VertexId v = 0; v < g1.vertex_count(); ++v) map1[v] = v;
  std::vector<VertexId> map2(g2.vertex_count(), -1);
  for (std::size_t i = 0; i < t.size(); ++i) map2[t[i]] = s[i];
  int next = g1.vertex_count();
  for (VertexId v = 0; v < g2.vertex_count(); ++v) {
    if (map2[v] == -1) map2[v] = next++;
  }
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.emplace_back(map2[e.u], map2[e.v]);
  return {Graph(next, edges), std::move(map1), std::move(map2)};
}

LineGraphBound line_graph_bound_check(const Graph& g, int budget) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("line_graph_bound_check: edgeless graph");
  }
  LineGraphBound out;
  out.tw = treewidth_exact(g, budget).value;
  out.tw_line = treewidth_exact(line_graph(g).graph, budget).value;
  out.holds = out.tw <= 2 * out.tw_line + 1;
  return out;
}

bool bridge_line_subgraph_check(const Graph& g1, VertexId v1, const Graph& g2,
                                VertexId v2, const BridgeMatching& m) {
  BridgeResult br = bridge(g1, v1, g2, v2, m, false);
  LineGraph l1 = line_graph(g1);
  LineGraph l2 = line_graph(g2);
  LineGraph lb = line_graph(br.graph);

  // Tripods: the three edges at the deleted vertices, as line-graph ids.
  std::vector<VertexId> tripod1, tripod2;
  auto image = [&](VertexId a) {
    for (const auto& [x, y] : m.pairs) {
      if (x == a) return y;
    }
    throw std::logic_error("bridge_line_subgraph_check: incomplete matching");
  };
  for (VertexId a : g1.neighbors(v1)) {
    tripod1.push_back(edge_index(g1, Edge(v1, a)));
    tripod2.push_back(edge_index(g2, Edge(v2, image(a))));
  }
  CliqueSum h = clique_sum(l1.graph, tripod1, l2.graph, tripod2);

  // Inverse vertex maps of the bridge for edge identification.
  std::vector<VertexId> inv1(br.graph.vertex_count(), -1);
  std::vector<VertexId> inv2(br.graph.vertex_count(), -1);
  for (VertexId v = 0; v < g1.vertex_count(); ++v) {
    if (br.map1[v] >= 0) inv1[br.map1[v]] = v;
  }
  for (VertexId v = 0; v < g2.vertex_count(); ++v) {
    if (br.map2[v] >= 0) inv2[br.map2[v]] = v;
  }
  const int split = g1.vertex_count() - 1;  // bridge ids below come from g1

  auto locate = [&](const Edge& e) -> VertexId {
    const bool left_u = e.u < split, left_v = e.v < split;
    if (left_u && left_v) {
      const int idx = edge_index(g1, Edge(inv1[e.u], inv1[e.v]));
      return h.map1[idx];
    }
    if (!left_u && !left_v) {
      const int idx = edge_index(g2, Edge(inv2[e.u], inv2[e.v]));
      return h.map2[idx];
    }
    // Matching edge: identify with the tripod edge of its left endpoint.
    const VertexId a = left_u ? inv1[e.u] : inv1[e.v];
    const int idx = edge_index(g1, Edge(v1, a));
    return h.map1[idx];
  };

  // The map must be a bijection onto V(H) (both sides count m1 + m2 - 3).
  if (lb.graph.vertex_count() != h.graph.vertex_count()) return false;
  std::vector<char> used(h.graph.vertex_count(), 0);
  std::vector<VertexId> to_h(lb.graph.vertex_count());
  for (int i = 0; i < lb.graph.vertex_count(); ++i) {
    const VertexId hv = locate(lb.vertex_edges[i]);
    if (hv < 0 || used[hv]) return false;
    used[hv] = 1;
    to_h[i] = hv;
  }
  for (const Edge& e : lb.graph.edges()) {
    if (!h.graph.has_edge(to_h[e.u], to_h[e.v])) return false;
  }
  return lb.graph.edge_count() < h.graph.edge_count();
}

ExtremalTwBound extremal_tw_bound(const Graph& g, int budget) {
  ExtremalTwBound out;
  out.treewidth = treewidth_exact(g, budget).value;
  out.within_bound = out.treewidth <= 13;
  return out;
}

std::string decomposition_to_text(const TreeDecomposition& td) {
  if (td.bags.empty()) {
    throw std::invalid_argument("decomposition_to_text: empty decomposition");
  }
  std::size_t biggest = 0;
  VertexId maxv = -1;
  for (const auto& bag : td.bags) {
    biggest = std::max(biggest, bag.size());
    for (VertexId v : bag) maxv = std::max(maxv, v);
  }
  std::ostringstream out;
  out << "s td " << td.node_count() << " " << biggest << " " << maxv + 1
      << "\n";
  for (int i = 0; i < td.node_count(); ++i) {
    out << "b " << i + 1;
    for (VertexId v : td.bags[i]) out << " " << v + 1;
    out << "\n";
  }
  for (const auto& [a, b] : td.tree_edges) {
    out << a + 1 << " " << b + 1 << "\n";
  }
  return out.str();
}

std::string decomposition_to_json(const TreeDecomposition& td) {
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  j["bags"] = nlohmann::json::object();
  for (int i = 0; i < td.node_count(); ++i) {
    j["nodes"].push_back(i);
    j["bags"][std::to_string(i)] = td.bags[i];
  }
  j["tree_edges"] = nlohmann::json::array();
  for (const auto& [a, b] : td.tree_edges) {
    j["tree_edges"].push_back({a, b});
  }
  return j.dump();
}

TreeDecomposition decomposition_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("decomposition_from_json: ") +
                                e.what());
  }
  TreeDecomposition td;
  try {
    const auto nodes = j.at("nodes").get<std::vector<int>>();
    td.bags.resize(nodes.size());
    for (int i : nodes) {
      if (i < 0 || i >= static_cast<int>(nodes.size())) {
        throw std::invalid_argument(
            "decomposition_from_json: node id out of range");
      }
      td.bags[i] =
          j.at("bags").at(std::to_string(i)).get<std::vector<VertexId>>();
    }
    for (const auto& pair : j.at("tree_edges")) {
      td.tree_edges.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("decomposition_from_json: ") +
                                e.what());
  }
  return td;
}

}  // namespace uniconn
