#pragma once

#include <string>
#include <vector>

#include "uniconn/graph.hpp"

namespace uniconn {

// Exact canonicalization explores orderings and is exponential in the worst
// case; the default budget keeps it to graphs this project actually handles.
inline constexpr int kDefaultCanonicalBudget = 16;

struct CanonicalForm {
  std::vector<VertexId> ordering;  // ordering[i] = original vertex at slot i
  Graph graph;                     // relabel(input, ordering)
  std::string graph6;              // graph6 of the canonical graph
};

// Minimizes the adjacency bit string over all vertex orderings compatible
// with an iterated degree refinement, so isomorphic graphs map to the same
// text.  Throws BudgetError when n exceeds the budget.
CanonicalForm canonical_form(const Graph& g,
                             int budget = kDefaultCanonicalBudget);

std::string canonical_graph6(const Graph& g,
                             int budget = kDefaultCanonicalBudget);

bool are_isomorphic(const Graph& a, const Graph& b,
                    int budget = kDefaultCanonicalBudget);

}  // namespace uniconn
