#include "uniconn/constructions.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "uniconn/connectivity.hpp"
#include "uniconn/graph6.hpp"

namespace uniconn {

OperationProfile make_profile(int n, int j, int t, int p, int s) {
  OperationProfile prof;
  prof.n = n;
  prof.ell = (n + 1) % 3 - 1;
  prof.k = (n - prof.ell) / 3;
  prof.j = j;
  prof.t = t;
  prof.p = p;
  prof.s = s;
  return prof;
}

namespace {

std::array<VertexId, 3> neighbor_triple(const Graph& g, VertexId v,
                                        const char* op) {
  if (!g.has_vertex(v)) {
    throw std::invalid_argument(std::string(op) + ": vertex out of range");
  }
  if (g.degree(v) != 3) {
    throw std::invalid_argument(std::string(op) + ": vertex " +
                                std::to_string(v) + " has degree " +
                                std::to_string(g.degree(v)) + ", need 3");
  }
  auto nb = g.neighbors(v);
  return {nb[0], nb[1], nb[2]};
}

void require_uniform3(const Graph& g, const char* op, const char* side) {
  if (!is_uniformly_k_connected(g, 3)) {
    throw std::invalid_argument(std::string(op) + ": " + side +
                                " input is not uniformly 3-connected");
  }
}

}  // namespace

BridgeMatching matching_from_images(const Graph& g1, VertexId v1,
                                    const std::array<VertexId, 3>& images) {
  auto nb = neighbor_triple(g1, v1, "matching_from_images");
  BridgeMatching m;
  for (int i = 0; i < 3; ++i) m.pairs[i] = {nb[i], images[i]};
  return m;
}

std::vector<BridgeMatching> all_matchings(const Graph& g1, VertexId v1,
                                          const Graph& g2, VertexId v2) {
  neighbor_triple(g1, v1, "all_matchings");
  auto images = neighbor_triple(g2, v2, "all_matchings");
  std::sort(images.begin(), images.end());
  std::vector<BridgeMatching> out;
  do {
    out.push_back(matching_from_images(g1, v1, images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

BridgeResult bridge(const Graph& g1, VertexId v1, const Graph& g2,
                    VertexId v2, const BridgeMatching& m,
                    bool verify_membership) {
  auto nb1 = neighbor_triple(g1, v1, "bridge");
  auto nb2 = neighbor_triple(g2, v2, "bridge");
  std::array<VertexId, 3> from{}, to{};
  for (int i = 0; i < 3; ++i) {
    from[i] = m.pairs[i].first;
    to[i] = m.pairs[i].second;
  }
  std::sort(from.begin(), from.end());
  std::sort(to.begin(), to.end());
  if (from != nb1 || to != nb2) {
    throw std::invalid_argument(
        "bridge: matching is not a bijection between the neighborhoods");
  }
  if (verify_membership) {
    require_uniform3(g1, "bridge", "left");
    require_uniform3(g2, "bridge", "right");
  }

  VertexDeletion d1 = delete_vertex(g1, v1);
  VertexDeletion d2 = delete_vertex(g2, v2);
  const int offset = d1.graph.vertex_count();
  std::vector<Edge> edges = d1.graph.edges();
  for (const Edge& e : d2.graph.edges()) {
    edges.emplace_back(e.u + offset, e.v + offset);
  }
  for (const auto& [a, b] : m.pairs) {
    edges.emplace_back(d1.old_to_new[a], d2.old_to_new[b] + offset);
  }
  std::vector<VertexId> map2 = d2.old_to_new;
  for (VertexId& x : map2) {
    if (x >= 0) x += offset;
  }
  Graph out(offset + d2.graph.vertex_count(), edges);
  return {std::move(out), std::move(d1.old_to_new), std::move(map2)};
}

SpokeResult spoke(const Graph& g, VertexId v, VertexId w, VertexId x,
                  bool verify_membership) {
  if (!g.has_vertex(v) || !g.has_vertex(w) || !g.has_vertex(x)) {
    throw std::invalid_argument("spoke: vertex out of range");
  }
  if (x == v || x == w) {
    throw std::invalid_argument("spoke: x coincides with an endpoint of vw");
  }
  if (!g.has_edge(v, w)) {
    throw std::invalid_argument("spoke: edge vw not present");
  }
  for (VertexId z = 0; z < g.vertex_count(); ++z) {
    if (z != x && g.degree(z) != 3) {
      throw std::invalid_argument("spoke: vertex " + std::to_string(z) +
                                  " outside {x} has degree " +
                                  std::to_string(g.degree(z)) + ", need 3");
    }
  }
  if (verify_membership) require_uniform3(g, "spoke", "the");

  const OperationKind kind = g.degree(x) == 3 ? OperationKind::PrimarySpoke
                                              : OperationKind::SecondarySpoke;
  const VertexId y = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + 2);
  const Edge vw(v, w);
  for (const Edge& e : g.edges()) {
    if (e != vw) edges.push_back(e);
  }
  edges.emplace_back(v, y);
  edges.emplace_back(w, y);
  edges.emplace_back(x, y);
  return {Graph(g.vertex_count() + 1, edges), kind, y};
}

Graph edge_join(const Graph& g, Edge st, Edge vw, bool verify_membership) {
  if (st == vw) throw std::invalid_argument("edge_join: identical edges");
  if (!g.has_edge(st.u, st.v) || !g.has_edge(vw.u, vw.v)) {
    throw std::invalid_argument("edge_join: edge not present");
  }
  if (!is_regular(g, 3)) {
    throw std::invalid_argument("edge_join: graph is not 3-regular");
  }
  if (verify_membership && !is_k_connected(g, 3)) {
    throw std::invalid_argument("edge_join: graph is not 3-connected");
  }
  const VertexId x = g.vertex_count();
  const VertexId y = x + 1;
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + 3);
  for (const Edge& e : g.edges()) {
    if (e != st && e != vw) edges.push_back(e);
  }
  edges.emplace_back(st.u, x);
  edges.emplace_back(st.v, x);
  edges.emplace_back(vw.u, y);
  edges.emplace_back(vw.v, y);
  edges.emplace_back(x, y);
  return Graph(g.vertex_count() + 2, edges);
}

namespace {

struct ReplayState {
  std::vector<std::optional<Graph>> threads;
  int current = -1;
  int bases = 0, j = 0, t = 0, p = 0, s = 0;
  std::vector<OperationKind> kinds;
  bool all_bases_k4 = true;

  Graph& need_current(int step) {
    if (current < 0 || !threads[current]) {
      throw std::invalid_argument("step " + std::to_string(step) +
                                  ": no current thread");
    }
    return *threads[current];
  }

  Graph take_thread(int id, int step) {
    if (id < 0 || id >= static_cast<int>(threads.size()) || !threads[id]) {
      throw std::invalid_argument("step " + std::to_string(step) +
                                  ": thread " + std::to_string(id) +
                                  " is not live");
    }
    Graph g = std::move(*threads[id]);
    threads[id].reset();
    return g;
  }
};

}  // namespace

ReplayResult replay(const Recipe& recipe, bool verify_membership) {
  ReplayState st;
  int step = 0;
  for (const RecipeStep& rs : recipe.steps) {
    ++step;
    try {
      if (const auto* base = std::get_if<BaseStep>(&rs)) {
        if (!is_regular(base->graph, 3)) {
          throw std::invalid_argument("base graph is not 3-regular");
        }
        if (verify_membership && !is_k_connected(base->graph, 3)) {
          throw std::invalid_argument("base graph is not 3-connected");
        }
        if (base->graph.vertex_count() != 4) st.all_bases_k4 = false;
        st.threads.emplace_back(base->graph);
        st.current = static_cast<int>(st.threads.size()) - 1;
        ++st.bases;
      } else if (const auto* sp = std::get_if<SpokeStep>(&rs)) {
        Graph& g = st.need_current(step);
        SpokeResult r = spoke(g, sp->v, sp->w, sp->x, verify_membership);
        (r.kind == OperationKind::PrimarySpoke ? st.p : st.s) += 1;
        st.kinds.push_back(r.kind);
        g = std::move(r.graph);
      } else if (const auto* jn = std::get_if<JoinStep>(&rs)) {
        Graph& g = st.need_current(step);
        g = edge_join(g, Edge(jn->s, jn->t), Edge(jn->v, jn->w),
                      verify_membership);
        ++st.t;
        st.kinds.push_back(OperationKind::EdgeJoin);
      } else if (const auto* br = std::get_if<BridgeStep>(&rs)) {
        if (br->left == br->right) {
          throw std::invalid_argument("bridge joins a thread with itself");
        }
        Graph left = st.take_thread(br->left, step);
        Graph right = st.take_thread(br->right, step);
        BridgeMatching m = matching_from_images(left, br->v1, br->images);
        BridgeResult r =
            bridge(left, br->v1, right, br->v2, m, verify_membership);
        st.threads.emplace_back(std::move(r.graph));
        st.current = static_cast<int>(st.threads.size()) - 1;
        ++st.j;
        st.kinds.push_back(OperationKind::Bridge);
      }
    } catch (const std::invalid_argument& e) {
      const std::string what = e.what();
      if (what.rfind("step ", 0) == 0) throw;
      throw std::invalid_argument("step " + std::to_string(step) + ": " +
                                  what);
    }
  }
  int live = 0, live_id = -1;
  for (int i = 0; i < static_cast<int>(st.threads.size()); ++i) {
    if (st.threads[i]) {
      ++live;
      live_id = i;
    }
  }
  if (live != 1) {
    throw std::invalid_argument("recipe leaves " + std::to_string(live) +
                                " live threads, expected 1");
  }
  if (st.bases != st.j + 1) {
    throw std::logic_error("replay: base count disagrees with bridge count");
  }
  const Graph& out = *st.threads[live_id];
  if (st.all_bases_k4 &&
      out.vertex_count() != 4 + 2 * st.j + 2 * st.t + st.p + st.s) {
    throw std::logic_error("replay: size identity violated");
  }
  OperationProfile prof =
      make_profile(out.vertex_count(), st.j, st.t, st.p, st.s);
  return {out, prof, std::move(st.kinds)};
}

std::string recipe_to_text(const Recipe& recipe) {
  std::ostringstream out;
  for (const RecipeStep& rs : recipe.steps) {
    if (const auto* base = std::get_if<BaseStep>(&rs)) {
      out << "BASE " << graph6_encode(base->graph) << "\n";
    } else if (const auto* sp = std::get_if<SpokeStep>(&rs)) {
      out << "SPOKE " << sp->v << " " << sp->w << " " << sp->x << "\n";
    } else if (const auto* jn = std::get_if<JoinStep>(&rs)) {
      out << "JOIN " << jn->s << " " << jn->t << " " << jn->v << " " << jn->w
          << "\n";
    } else if (const auto* br = std::get_if<BridgeStep>(&rs)) {
      out << "BRIDGE " << br->left << " " << br->v1 << " " << br->right << " "
          << br->v2 << " " << br->images[0] << " " << br->images[1] << " "
          << br->images[2] << "\n";
    }
  }
  return out.str();
}

Recipe recipe_from_stream(std::istream& in) {
  Recipe recipe;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    auto fail = [lineno](const std::string& why) -> std::invalid_argument {
      return std::invalid_argument("recipe line " + std::to_string(lineno) +
                                   ": " + why);
    };
    auto read_int = [&](VertexId& out) {
      if (!(ls >> out)) throw fail("expected integer field");
    };
    if (word == "BASE") {
      std::string g6;
      if (!(ls >> g6)) throw fail("expected graph6 text");
      try {
        recipe.steps.push_back(BaseStep{graph6_decode(g6)});
      } catch (const std::invalid_argument& e) {
        throw fail(e.what());
      }
    } else if (word == "SPOKE") {
      SpokeStep sp{};
      read_int(sp.v);
      read_int(sp.w);
      read_int(sp.x);
      recipe.steps.push_back(sp);
    } else if (word == "JOIN") {
      JoinStep jn{};
      read_int(jn.s);
      read_int(jn.t);
      read_int(jn.v);
      read_int(jn.w);
      recipe.steps.push_back(jn);
    } else if (word == "BRIDGE") {
      BridgeStep br{};
      read_int(br.left);
      read_int(br.v1);
      read_int(br.right);
      read_int(br.v2);
      for (int i = 0; i < 3; ++i) read_int(br.images[i]);
      recipe.steps.push_back(br);
    } else {
      throw fail("unknown step '" + word + "'");
    }
    std::string extra;
    if (ls >> extra) throw fail("trailing field '" + extra + "'");
  }
  if (recipe.steps.empty()) {
    throw std::invalid_argument("recipe has no steps");
  }
  return recipe;
}

Recipe recipe_from_text(const std::string& text) {
  std::istringstream in(text);
  return recipe_from_stream(in);
}

namespace {

// Uniform pick from [0, k); the tiny modulo bias is irrelevant here.
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t k) {
  return rng() % k;
}

std::vector<Edge> edges_avoiding(const Graph& g, VertexId x) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (e.u != x && e.v != x) out.push_back(e);
  }
  return out;
}

std::vector<VertexId> cubic_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 3) out.push_back(v);
  }
  return out;
}

}  // namespace

Recipe random_recipe(std::uint64_t seed, int max_n) {
  if (max_n < 4) throw std::invalid_argument("random_recipe: max_n < 4");
  std::mt19937_64 rng(seed);
  Recipe recipe;
  std::vector<std::optional<Graph>> threads;
  const Graph k4 = complete_graph(4);

  auto push_base = [&] {
    recipe.steps.push_back(BaseStep{k4});
    threads.emplace_back(k4);
  };
  auto live_ids = [&] {
    std::vector<int> ids;
    for (int i = 0; i < static_cast<int>(threads.size()); ++i) {
      if (threads[i]) ids.push_back(i);
    }
    return ids;
  };
  auto merged_size = [&](const std::vector<int>& ids) {
    int total = 0;
    for (int id : ids) total += threads[id]->vertex_count();
    return total - 2 * (static_cast<int>(ids.size()) - 1);
  };
  auto do_bridge = [&](const std::vector<int>& ids) {
    const int a = ids[pick(rng, ids.size())];
    int b = a;
    while (b == a) b = ids[pick(rng, ids.size())];
    const Graph& gl = *threads[a];
    const Graph& gr = *threads[b];
    std::vector<VertexId> c1 = cubic_vertices(gl);
    std::vector<VertexId> c2 = cubic_vertices(gr);
    const VertexId v1 = c1[pick(rng, c1.size())];
    const VertexId v2 = c2[pick(rng, c2.size())];
    auto nb2 = gr.neighbors(v2);
    std::array<VertexId, 3> images{nb2[0], nb2[1], nb2[2]};
    for (int i = 2; i > 0; --i) {
      std::swap(images[i], images[pick(rng, i + 1)]);
    }
    recipe.steps.push_back(BridgeStep{a, b, v1, v2, images});
    BridgeResult r = bridge(gl, v1, gr, v2,
                            matching_from_images(gl, v1, images), false);
    threads[a].reset();
    threads[b].reset();
    threads.emplace_back(std::move(r.graph));
  };

  push_base();
  const int target = 4 + static_cast<int>(pick(rng, max_n - 4 + 1));
  for (int guard = 0; guard < 200; ++guard) {
    std::vector<int> ids = live_ids();
    const int size_now = merged_size(ids);
    const int current = ids.back();  // newest live thread
    Graph& cur = *threads[current];

    if (static_cast<int>(ids.size()) == 1 && size_now >= target) break;
    if (static_cast<int>(ids.size()) == 1 && pick(rng, 100) < 12) break;

    enum class Op { Base, Join, Spoke, Bridge };
    std::vector<Op> options;
    if (size_now + 2 <= target) {
      options.push_back(Op::Base);
      if (is_regular(cur, 3)) options.push_back(Op::Join);
    }
    std::vector<VertexId> noncubic;
    for (VertexId v = 0; v < cur.vertex_count(); ++v) {
      if (cur.degree(v) != 3) noncubic.push_back(v);
    }
    if (size_now + 1 <= target && noncubic.size() <= 1) {
      options.push_back(Op::Spoke);
    }
    if (ids.size() >= 2) options.push_back(Op::Bridge);
    if (options.empty()) break;

    switch (options[pick(rng, options.size())]) {
      case Op::Base:
        push_base();
        break;
      case Op::Join: {
        const auto& es = cur.edges();
        const int i = static_cast<int>(pick(rng, es.size()));
        int k = i;
        while (k == i) k = static_cast<int>(pick(rng, es.size()));
        recipe.steps.push_back(JoinStep{es[i].u, es[i].v, es[k].u, es[k].v});
        cur = edge_join(cur, es[i], es[k], false);
        break;
      }
      case Op::Spoke: {
        const VertexId x = noncubic.empty()
                               ? static_cast<VertexId>(
                                     pick(rng, cur.vertex_count()))
                               : noncubic[0];
        std::vector<Edge> es = edges_avoiding(cur, x);
        if (es.empty()) break;
        const Edge e = es[pick(rng, es.size())];
        recipe.steps.push_back(SpokeStep{e.u, e.v, x});
        cur = spoke(cur, e.u, e.v, x, false).graph;
        break;
      }
      case Op::Bridge:
        do_bridge(ids);
        break;
    }
  }
  for (std::vector<int> ids = live_ids(); ids.size() > 1; ids = live_ids()) {
    do_bridge(ids);
  }
  return recipe;
}

}  // namespace uniconn
