#include "uniconn/extremal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "uniconn/canonical.hpp"
#include "uniconn/connectivity.hpp"
#include "uniconn/errors.hpp"

namespace uniconn {

int extremal_bound(int n) {
  if (n < 4) throw std::invalid_argument("extremal_bound: need n >= 4");
  return (2 * n + 4) / 3;  // ceil((2n + 2) / 3)
}

int mader_bound(int n, int k) {
  if (k < 1) throw std::invalid_argument("mader_bound: need k >= 1");
  if (n < k + 1) throw std::invalid_argument("mader_bound: need n >= k + 1");
  const int num = (k - 1) * n + 2 * k;
  const int den = 2 * k - 1;
  return (num + den - 1) / den;
}

bool is_extremal(const Graph& g) {
  if (!is_uniformly_k_connected(g, 3)) {
    throw std::invalid_argument("is_extremal: graph is not uniformly "
                                "3-connected");
  }
  return nu(g) == extremal_bound(g.vertex_count());
}

std::vector<OperationProfile> feasible_profiles(int n) {
  if (n < 5) throw std::invalid_argument("feasible_profiles: need n >= 5");
  const int ell = (n + 1) % 3 - 1;
  const int k = (n - ell) / 3;
  std::vector<OperationProfile> out;
  auto add = [&](int j, int t, int p, int s) {
    out.push_back(make_profile(n, j, t, p, s));
  };
  // Every profile has p = k - 1 primary spokes; the remainder
  // 2(k - j - t) + ell - 3 must be a nonnegative secondary spoke count.
  switch (ell) {
    case -1:
      add(k - 2, 0, k - 1, 0);
      break;
    case 0:
      add(k - 2, 0, k - 1, 1);
      break;
    default:
      add(k - 1, 0, k - 1, 0);
      add(k - 2, 1, k - 1, 0);
      add(k - 2, 0, k - 1, 2);
      break;
  }
  return out;
}

namespace {

std::string profile_counters(const OperationProfile& p) {
  std::ostringstream s;
  s << "j=" << p.j << ",t=" << p.t << ",p=" << p.p << ",s=" << p.s;
  return s.str();
}

std::vector<VertexId> cubic_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 3) out.push_back(v);
  }
  return out;
}

// Grows a recipe piece by piece.  Spokes and joins always hit the newest
// thread, matching replay semantics.
struct Builder {
  std::mt19937_64 rng;
  Recipe recipe;
  std::vector<std::optional<Graph>> threads;

  explicit Builder(std::uint64_t seed) : rng(seed) {}

  std::size_t pick(std::size_t k) { return rng() % k; }

  Graph& current() { return *threads.back(); }

  void new_base() {
    recipe.steps.push_back(BaseStep{complete_graph(4)});
    threads.emplace_back(complete_graph(4));
  }

  Edge random_edge_avoiding(VertexId x) {
    std::vector<Edge> es;
    for (const Edge& e : current().edges()) {
      if (e.u != x && e.v != x) es.push_back(e);
    }
    return es[pick(es.size())];
  }

  void spoke_primary() {
    const Graph& g = current();
    const VertexId x = static_cast<VertexId>(pick(g.vertex_count()));
    const Edge e = random_edge_avoiding(x);
    recipe.steps.push_back(SpokeStep{e.u, e.v, x});
    current() = spoke(g, e.u, e.v, x, false).graph;
  }

  void spoke_secondary() {
    const Graph& g = current();
    VertexId x = -1;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 3) x = v;
    }
    const Edge e = random_edge_avoiding(x);
    recipe.steps.push_back(SpokeStep{e.u, e.v, x});
    current() = spoke(g, e.u, e.v, x, false).graph;
  }

  void join_random() {
    const Graph& g = current();
    const auto& es = g.edges();
    const std::size_t i = pick(es.size());
    std::size_t k = i;
    while (k == i) k = pick(es.size());
    recipe.steps.push_back(JoinStep{es[i].u, es[i].v, es[k].u, es[k].v});
    current() = edge_join(g, es[i], es[k], false);
  }

  void build_wheel(int size) {
    new_base();
    if (size >= 5) spoke_primary();
    for (int m = 6; m <= size; ++m) spoke_secondary();
  }

  // 7-vertex piece with one edge join and one primary spoke.
  void build_join_piece() {
    new_base();
    join_random();
    spoke_primary();
  }

  void merge_all() {
    while (true) {
      std::vector<int> ids;
      for (int i = 0; i < static_cast<int>(threads.size()); ++i) {
        if (threads[i]) ids.push_back(i);
      }
      if (ids.size() <= 1) return;
      const int a = ids[pick(ids.size())];
      int b = a;
      while (b == a) b = ids[pick(ids.size())];
      const Graph& gl = *threads[a];
      const Graph& gr = *threads[b];
      std::vector<VertexId> c1 = cubic_vertices(gl);
      std::vector<VertexId> c2 = cubic_vertices(gr);
      const VertexId v1 = c1[pick(c1.size())];
      const VertexId v2 = c2[pick(c2.size())];
      auto nb2 = gr.neighbors(v2);
      std::array<VertexId, 3> images{nb2[0], nb2[1], nb2[2]};
      for (int i = 2; i > 0; --i) {
        std::swap(images[i], images[pick(i + 1)]);
      }
      recipe.steps.push_back(BridgeStep{a, b, v1, v2, images});
      BridgeResult r =
          bridge(gl, v1, gr, v2, matching_from_images(gl, v1, images), false);
      threads[a].reset();
      threads[b].reset();
      threads.emplace_back(std::move(r.graph));
    }
  }
};

}  // namespace

GeneratedExtremal generate_extremal(int n, std::uint64_t seed,
                                    std::optional<OperationProfile> want) {
  if (n < 4) throw std::invalid_argument("generate_extremal: need n >= 4");
  Builder b(seed);
  OperationProfile target;
  if (n == 4) {
    target = make_profile(4, 0, 0, 0, 0);
    if (want && std::tie(want->j, want->t, want->p, want->s) !=
                    std::tie(target.j, target.t, target.p, target.s)) {
      throw std::invalid_argument(
          "generate_extremal: profile " + profile_counters(*want) +
          " infeasible for n=4; feasible: " + profile_counters(target));
    }
    b.new_base();
  } else {
    const std::vector<OperationProfile> profs = feasible_profiles(n);
    if (want) {
      auto it = std::find_if(profs.begin(), profs.end(),
                             [&](const OperationProfile& p) {
                               return std::tie(p.j, p.t, p.p, p.s) ==
                                      std::tie(want->j, want->t, want->p,
                                               want->s);
                             });
      if (it == profs.end()) {
        std::ostringstream msg;
        msg << "generate_extremal: profile " << profile_counters(*want)
            << " infeasible for n=" << n << "; feasible:";
        for (const auto& p : profs) msg << " (" << profile_counters(p) << ")";
        throw std::invalid_argument(msg.str());
      }
      target = *it;
    } else {
      target = profs[b.pick(profs.size())];
    }

    const int k = target.k;
    std::vector<int> pieces;  // wheel sizes; 0 marks the edge-join piece
    if (target.ell == -1) {
      pieces.assign(k - 1, 5);
    } else if (target.ell == 0) {
      pieces.assign(k - 2, 5);
      pieces.push_back(6);
    } else if (target.t == 1) {
      pieces.assign(k - 2, 5);
      pieces.push_back(0);
    } else if (target.s == 0) {
      pieces.assign(k - 1, 5);
      pieces.push_back(4);
    } else if (k == 2 || b.pick(2) == 0) {
      pieces.assign(k - 2, 5);
      pieces.push_back(7);
    } else {
      pieces.assign(k - 3, 5);
      pieces.push_back(6);
      pieces.push_back(6);
    }
    for (std::size_t i = pieces.size() - 1; i > 0; --i) {
      std::swap(pieces[i], pieces[b.pick(i + 1)]);
    }
    for (int piece : pieces) {
      if (piece == 0) {
        b.build_join_piece();
      } else {
        b.build_wheel(piece);
      }
    }
    b.merge_all();
  }

  ReplayResult rep = replay(b.recipe, false);
  if (std::tie(rep.profile.j, rep.profile.t, rep.profile.p, rep.profile.s) !=
          std::tie(target.j, target.t, target.p, target.s) ||
      rep.profile.n != n) {
    throw std::logic_error("generate_extremal: built profile disagrees with "
                           "the requested one");
  }
  return {std::move(rep.graph), std::move(b.recipe), rep.profile};
}

namespace {

struct EnumKey {
  int j, t, p, s;
  friend auto operator<=>(const EnumKey&, const EnumKey&) = default;
};

using ClassMap = std::map<std::string, Graph>;

// Memoized reachability by exact operation counts.  All sweeps run over
// canonical representatives; closure of the class under the operations makes
// membership re-checks unnecessary.
class Enumerator {
 public:
  const ClassMap& reach(const EnumKey& key) {
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ClassMap out;
    if (key == EnumKey{0, 0, 0, 0}) {
      insert(out, complete_graph(4));
    } else {
      expand_spokes(key, out);
      expand_joins(key, out);
      expand_bridges(key, out);
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::map<EnumKey, ClassMap> memo_;

  void insert(ClassMap& into, const Graph& g) {
    CanonicalForm cf = canonical_form(g);
    into.emplace(std::move(cf.graph6), std::move(cf.graph));
  }

  void expand_spokes(const EnumKey& key, ClassMap& out) {
    if (key.p >= 1) {
      for (const auto& [g6, parent] :
           reach({key.j, key.t, key.p - 1, key.s})) {
        if (!is_regular(parent, 3)) continue;
        for (const Edge& e : parent.edges()) {
          for (VertexId x = 0; x < parent.vertex_count(); ++x) {
            if (x == e.u || x == e.v) continue;
            insert(out, spoke(parent, e.u, e.v, x, false).graph);
          }
        }
      }
    }
    if (key.s >= 1) {
      for (const auto& [g6, parent] :
           reach({key.j, key.t, key.p, key.s - 1})) {
        VertexId x = -1;
        int noncubic = 0;
        for (VertexId v = 0; v < parent.vertex_count(); ++v) {
          if (parent.degree(v) != 3) {
            x = v;
            ++noncubic;
          }
        }
        if (noncubic != 1) continue;
        for (const Edge& e : parent.edges()) {
          if (e.u == x || e.v == x) continue;
          insert(out, spoke(parent, e.u, e.v, x, false).graph);
        }
      }
    }
  }

  void expand_joins(const EnumKey& key, ClassMap& out) {
    if (key.t < 1) return;
    for (const auto& [g6, parent] : reach({key.j, key.t - 1, key.p, key.s})) {
      if (!is_regular(parent, 3)) continue;
      const auto& es = parent.edges();
      for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t k = i + 1; k < es.size(); ++k) {
          insert(out, edge_join(parent, es[i], es[k], false));
        }
      }
    }
  }

  void expand_bridges(const EnumKey& key, ClassMap& out) {
    if (key.j < 1) return;
    for (int j1 = 0; j1 <= key.j - 1; ++j1) {
      for (int t1 = 0; t1 <= key.t; ++t1) {
        for (int p1 = 0; p1 <= key.p; ++p1) {
          for (int s1 = 0; s1 <= key.s; ++s1) {
            const EnumKey a{j1, t1, p1, s1};
            const EnumKey b{key.j - 1 - j1, key.t - t1, key.p - p1,
                            key.s - s1};
            if (b < a) continue;  // bridge is symmetric in its inputs
            const ClassMap& left = reach(a);
            if (left.empty()) continue;
            const ClassMap& right = reach(b);
            if (right.empty()) continue;
            for (auto la = left.begin(); la != left.end(); ++la) {
              auto rb = (a == b) ? la : right.begin();
              for (; rb != right.end(); ++rb) {
                sweep_bridge(la->second, rb->second, out);
              }
            }
          }
        }
      }
    }
  }

  void sweep_bridge(const Graph& ga, const Graph& gb, ClassMap& out) {
    const std::vector<VertexId> c1 = cubic_vertices(ga);
    const std::vector<VertexId> c2 = cubic_vertices(gb);
    for (VertexId v1 : c1) {
      for (VertexId v2 : c2) {
        for (const BridgeMatching& m : all_matchings(ga, v1, gb, v2)) {
          insert(out, bridge(ga, v1, gb, v2, m, false).graph);
        }
      }
    }
  }
};

std::mutex enum_mutex;
Enumerator shared_enumerator;

}  // namespace

Enumeration enumerate_extremal(int n) {
  if (n < 4) throw std::invalid_argument("enumerate_extremal: need n >= 4");
  if (n > kEnumerationBudget) {
    throw BudgetError("enumerate_extremal: n=" + std::to_string(n) +
                      " exceeds budget " + std::to_string(kEnumerationBudget));
  }
  std::lock_guard<std::mutex> lock(enum_mutex);
  Enumeration result;
  result.n = n;
  result.bound = extremal_bound(n);
  std::set<std::string> all;
  auto add_profile = [&](const OperationProfile& prof) {
    const ClassMap& cm =
        shared_enumerator.reach({prof.j, prof.t, prof.p, prof.s});
    ProfileClasses pc;
    pc.profile = prof;
    for (const auto& [g6, g] : cm) {
      pc.graphs.push_back(g6);
      all.insert(g6);
    }
    result.by_profile.push_back(std::move(pc));
  };
  if (n == 4) {
    add_profile(make_profile(4, 0, 0, 0, 0));
  } else {
    for (const OperationProfile& prof : feasible_profiles(n)) {
      add_profile(prof);
    }
  }
  result.all.assign(all.begin(), all.end());
  return result;
}

}  // namespace uniconn
