#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "uniconn/constructions.hpp"
#include "uniconn/graph.hpp"

namespace uniconn {

enum class CrossingKind { Planar, OneCrossing, AtLeastTwo };

struct KuratowskiWitness {
  std::vector<Edge> edges;  // edge set of a K5 or K3,3 subdivision in g
  bool is_k5 = false;
};

struct PlanarityResult {
  bool planar = false;
  std::optional<KuratowskiWitness> witness;  // present iff not planar
};

// Face-by-face path addition over the biconnected blocks; on failure the
// witness is an edge-minimal nonplanar subgraph, which is always a K5 or
// K3,3 subdivision.
PlanarityResult check_planar(const Graph& g);
bool is_planar(const Graph& g);

// The single-crossing sweep planarizes one independent edge pair at a time,
// which is quadratic in the edge count; the budget keeps that honest.
inline constexpr int kDefaultCrossingBudget = 40;

struct CrossingCertificate {
  CrossingKind kind = CrossingKind::Planar;
  // For OneCrossing: the lexicographically first independent edge pair whose
  // shared planarization is planar.
  std::optional<std::pair<Edge, Edge>> pair;
};

// Classifies the crossing number as 0, 1, or >= 2.
CrossingCertificate crossing_le_one(const Graph& g,
                                    int budget = kDefaultCrossingBudget);

enum class Subadditivity { Holds, Violated, Indeterminate };

// Tests cr(bridge(G1, v1, G2, v2, m)) <= cr(G1) + cr(G2) as far as the
// 0/1/>=2 classification can resolve it.  Indeterminate means some side
// classified as >= 2 and the inequality is not decidable at this precision.
Subadditivity check_bridge_crossing_subadditivity(const Graph& g1,
                                                  VertexId v1, const Graph& g2,
                                                  VertexId v2,
                                                  const BridgeMatching& m);

}  // namespace uniconn
