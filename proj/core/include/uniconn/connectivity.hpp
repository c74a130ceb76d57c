#pragma once

#include <optional>
#include <utility>

#include "uniconn/graph.hpp"

namespace uniconn {

// Maximum number of internally disjoint u-v paths, computed as max flow in
// the standard vertex-split network.  Adjacent pairs are handled by the same
// network (the direct edge contributes one path).  Requires u != v.
int local_connectivity(const Graph& g, VertexId u, VertexId v);

struct ConnectivityProfile {
  int min_value = 0;
  int max_value = 0;
  std::pair<VertexId, VertexId> min_pair{-1, -1};
  std::pair<VertexId, VertexId> max_pair{-1, -1};
};

// Scans all vertex pairs; requires n >= 2.
ConnectivityProfile connectivity_profile(const Graph& g);

struct UniformityResult {
  bool uniform = false;
  // First pair found whose local connectivity differs from k, with its value.
  VertexId u = -1;
  VertexId v = -1;
  int value = -1;
};

// True iff n >= 2 and every pair has local connectivity exactly k.  Stops at
// the first deviating pair.  Requires k >= 1.
UniformityResult check_uniformly_k_connected(const Graph& g, int k);
bool is_uniformly_k_connected(const Graph& g, int k);

// n > k and every pair has local connectivity >= k.  Requires k >= 1.
bool is_k_connected(const Graph& g, int k);

bool is_regular(const Graph& g, int d);

// Number of minimum-degree vertices.  Requires a nonempty graph.
int nu(const Graph& g);

}  // namespace uniconn
