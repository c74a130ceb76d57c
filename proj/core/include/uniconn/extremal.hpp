#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uniconn/constructions.hpp"

namespace uniconn {

// Exhaustive enumeration canonicalizes every candidate; past this size the
// class counts and the per-graph cost both stop being desk-scale.
inline constexpr int kEnumerationBudget = 13;

// Minimum count of degree-3 vertices in a uniformly 3-connected graph on n
// vertices: ceil((2n + 2) / 3).  Requires n >= 4.
int extremal_bound(int n);

// The general-k lower bound ceil(((k-1)n + 2k) / (2k-1)) this improves on
// for k = 3.  Requires k >= 1 and n >= k + 1.
int mader_bound(int n, int k);

// True iff nu(g) == extremal_bound(n).  Requires g uniformly 3-connected.
bool is_extremal(const Graph& g);

// All operation profiles (j, t, p, s) a uniformly 3-connected graph on n
// vertices meeting the bound with equality can be built with.  Requires
// n >= 5.
std::vector<OperationProfile> feasible_profiles(int n);

struct GeneratedExtremal {
  Graph graph;
  Recipe recipe;
  OperationProfile profile;
};

// Builds a random extremal graph on n vertices (n >= 4).  When `want` is
// set, its (j, t, p, s) must be feasible for n; otherwise a feasible profile
// is picked at random.
GeneratedExtremal generate_extremal(
    int n, std::uint64_t seed,
    std::optional<OperationProfile> want = std::nullopt);

struct ProfileClasses {
  OperationProfile profile;
  std::vector<std::string> graphs;  // canonical graph6, sorted
};

struct Enumeration {
  int n = 0;
  int bound = 0;
  std::vector<ProfileClasses> by_profile;
  std::vector<std::string> all;  // union over profiles, sorted
};

// Every extremal graph on n vertices up to isomorphism, grouped by feasible
// profile.  Classes reachable through several profiles appear under each and
// once in `all`.  Requires 4 <= n <= kEnumerationBudget.
Enumeration enumerate_extremal(int n);

}  // namespace uniconn
