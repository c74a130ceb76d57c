#include "uniconn/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "uniconn/errors.hpp"
#include "uniconn/graph6.hpp"

namespace uniconn {

namespace {

// Iterated neighbor-color refinement.  Color values are ranks of sorted
// signatures, so they depend only on the isomorphism type, never on labels.
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  {
    std::vector<int> uniq(color);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), color[v]) - uniq.begin());
    }
  }
  int classes = n == 0 ? 0 : 1 + *std::max_element(color.begin(), color.end());
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sigs(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      sig.push_back(color[v]);
      for (VertexId w : g.neighbors(v)) sig.push_back(color[w]);
      std::sort(sig.begin() + 1, sig.end());
      sigs[v] = {std::move(sig), v};
    }
    std::vector<std::vector<int>> uniq;
    uniq.reserve(n);
    for (const auto& [sig, v] : sigs) uniq.push_back(sig);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (const auto& [sig, v] : sigs) {
      color[v] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sig) - uniq.begin());
    }
    const int now = static_cast<int>(uniq.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

struct Search {
  int n;
  std::vector<char> adj;       // n*n matrix
  std::vector<int> pos_color;  // required color class per slot
  std::vector<char> placed;
  std::vector<VertexId> cur;
  std::vector<VertexId> by_color;  // vertices sorted by (color, id)
  std::vector<int> color;
  std::vector<std::uint8_t> best;  // packed upper triangle, column-major
  std::vector<VertexId> best_ordering;

  bool edge(VertexId a, VertexId b) const { return adj[a * n + b]; }

  void dfs(int depth) {
    if (depth == n) {
      best_ordering = cur;
      return;
    }
    const int off = depth * (depth - 1) / 2;
    struct Cand {
      std::vector<std::uint8_t> col;
      VertexId v;
    };
    std::vector<Cand> cands;
    for (VertexId v : by_color) {
      if (placed[v] || color[v] != pos_color[depth]) continue;
      Cand c;
      c.v = v;
      c.col.resize(depth);
      for (int i = 0; i < depth; ++i) c.col[i] = edge(v, cur[i]) ? 1 : 0;
      cands.push_back(std::move(c));
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return a.col < b.col; });
    for (const Cand& c : cands) {
      int cmp = 0;
      for (int i = 0; i < depth; ++i) {
        if (c.col[i] != best[off + i]) {
          cmp = c.col[i] < best[off + i] ? -1 : 1;
          break;
        }
      }
      if (cmp > 0) continue;
      if (cmp < 0) {
        // Everything below this branch beats the incumbent; re-tighten the
        // bound so sibling branches keep pruning correctly.
        std::copy(c.col.begin(), c.col.end(), best.begin() + off);
        std::fill(best.begin() + off + depth, best.end(), 1);
      }
      placed[c.v] = 1;
      cur.push_back(c.v);
      dfs(depth + 1);
      cur.pop_back();
      placed[c.v] = 0;
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, int budget) {
  const int n = g.vertex_count();
  if (n > budget) {
    throw BudgetError("canonical_form: n=" + std::to_string(n) +
                      " exceeds budget " + std::to_string(budget));
  }
  std::vector<VertexId> ordering(n);
  std::iota(ordering.begin(), ordering.end(), 0);

  const int complete_m = n * (n - 1) / 2;
  if (g.edge_count() != 0 && g.edge_count() != complete_m) {
    std::vector<int> color = refine_colors(g);
    std::vector<VertexId> by_color(n);
    std::iota(by_color.begin(), by_color.end(), 0);
    std::sort(by_color.begin(), by_color.end(), [&](VertexId a, VertexId b) {
      return std::pair(color[a], a) < std::pair(color[b], b);
    });
    bool forced = true;
    for (int i = 0; i + 1 < n; ++i) {
      if (color[by_color[i]] == color[by_color[i + 1]]) {
        forced = false;
        break;
      }
    }
    if (forced) {
      ordering = by_color;
    } else {
      Search s;
      s.n = n;
      s.adj.assign(static_cast<std::size_t>(n) * n, 0);
      for (const Edge& e : g.edges()) {
        s.adj[e.u * n + e.v] = 1;
        s.adj[e.v * n + e.u] = 1;
      }
      s.color = color;
      s.by_color = by_color;
      s.pos_color.resize(n);
      for (int i = 0; i < n; ++i) s.pos_color[i] = color[by_color[i]];
      s.placed.assign(n, 0);
      s.best.assign(complete_m, 1);
      s.dfs(0);
      ordering = s.best_ordering;
    }
  }
  Graph canon = relabel(g, ordering);
  std::string text = graph6_encode(canon);
  return {std::move(ordering), std::move(canon), std::move(text)};
}

std::string canonical_graph6(const Graph& g, int budget) {
  return canonical_form(g, budget).graph6;
}

bool are_isomorphic(const Graph& a, const Graph& b, int budget) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<int> da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_graph6(a, budget) == canonical_graph6(b, budget);
}

}  // namespace uniconn
