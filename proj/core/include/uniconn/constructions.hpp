#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "uniconn/graph.hpp"

namespace uniconn {

enum class OperationKind { Bridge, PrimarySpoke, SecondarySpoke, EdgeJoin };

// Operation counts of a construction together with the derived size data:
// n = 4 + 2j + 2t + p + s over K4 bases, and n = 3k + ell with
// ell in {-1, 0, 1}.
struct OperationProfile {
  int n = 0;
  int k = 0;
  int ell = 0;
  int j = 0;  // bridges
  int t = 0;  // edge joins
  int p = 0;  // primary spokes
  int s = 0;  // secondary spokes

  friend auto operator<=>(const OperationProfile&,
                          const OperationProfile&) = default;
};

OperationProfile make_profile(int n, int j, int t, int p, int s);

// Bijection from the three neighbors of the deleted vertex on the left side
// to the three on the right side.
struct BridgeMatching {
  std::array<std::pair<VertexId, VertexId>, 3> pairs;
};

// Matching that sends the i-th smallest neighbor of v1 to images[i].
BridgeMatching matching_from_images(const Graph& g1, VertexId v1,
                                    const std::array<VertexId, 3>& images);

// All six matchings between the neighborhoods, in a fixed order.
std::vector<BridgeMatching> all_matchings(const Graph& g1, VertexId v1,
                                          const Graph& g2, VertexId v2);

struct BridgeResult {
  Graph graph;
  std::vector<VertexId> map1;  // old ids of g1 - v1 to bridged ids
  std::vector<VertexId> map2;
};

// Deletes degree-3 vertices v1 of g1 and v2 of g2 and joins the neighbor
// triples by the matching.  With verify_membership both inputs are checked
// to be uniformly 3-connected; callers that construct inputs inside the
// class may skip that check.
BridgeResult bridge(const Graph& g1, VertexId v1, const Graph& g2,
                    VertexId v2, const BridgeMatching& m,
                    bool verify_membership = true);

struct SpokeResult {
  Graph graph;
  OperationKind kind;   // PrimarySpoke iff deg(x) was 3
  VertexId new_vertex;  // always the last vertex of the result
};

// Replaces edge vw by the path v, y, w and adds the chord xy.  Every vertex
// other than x must have degree 3; the spoke is primary when x is cubic as
// well and secondary otherwise.
SpokeResult spoke(const Graph& g, VertexId v, VertexId w, VertexId x,
                  bool verify_membership = true);

// Subdivides the distinct edges st and vw with new vertices x and y and adds
// xy.  Defined on 3-regular 3-connected graphs.
Graph edge_join(const Graph& g, Edge st, Edge vw,
                bool verify_membership = true);

// Recipe steps.  BASE opens a new thread which becomes current; SPOKE and
// JOIN apply to the current thread; BRIDGE consumes two live threads (by
// creation order id) and its result becomes the current thread.
struct BaseStep {
  Graph graph;
};
struct SpokeStep {
  VertexId v, w, x;
};
struct JoinStep {
  VertexId s, t, v, w;  // edges st and vw
};
struct BridgeStep {
  int left, right;  // thread ids
  VertexId v1, v2;
  std::array<VertexId, 3> images;  // matching images of sorted N(v1)
};
using RecipeStep = std::variant<BaseStep, SpokeStep, JoinStep, BridgeStep>;

struct Recipe {
  std::vector<RecipeStep> steps;
};

struct ReplayResult {
  Graph graph;
  OperationProfile profile;
  // Classification of each step; BaseStep entries are not operations and
  // carry no kind, so this indexes operation steps in order.
  std::vector<OperationKind> operation_kinds;
};

// Runs the recipe, enforcing every step precondition at its application
// point.  Errors mention the failing step index.  The counters are recomputed
// from the trace and n = 4 + 2j + 2t + p + s is asserted when all bases are
// K4-sized.
ReplayResult replay(const Recipe& recipe, bool verify_membership = true);

// Line-oriented text form.  Lines: "BASE <graph6>", "SPOKE v w x",
// "JOIN s t v w", "BRIDGE i v1 j v2 m0 m1 m2".  Blank lines and lines
// starting with '#' are ignored.
std::string recipe_to_text(const Recipe& recipe);
Recipe recipe_from_text(const std::string& text);
Recipe recipe_from_stream(std::istream& in);

// Seeded random walk over valid construction steps with all K4 bases.  The
// result replays to a graph with at most max_n vertices.
Recipe random_recipe(std::uint64_t seed, int max_n = 14);

}  // namespace uniconn
