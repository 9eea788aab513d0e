#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynmpc/graph.hpp"

namespace dynmpc::oracle {

struct Verdict {
  bool ok = true;
  std::string reason;
  std::vector<Word> witness; // vertices or an edge, depending on the check
  explicit operator bool() const { return ok; }
};

// Matching is a subset of the graph, vertex-disjoint, and no graph edge has
// two free endpoints. Witness: the offending edge.
Verdict check_maximal(const Graph& g, const Matching& m);

// No augmenting path of length 1 or 3 with respect to m. Witness: the path.
Verdict check_no_short_augmenting(const Graph& g, const Matching& m);

// Exact maximum matching cardinality by branch and bound; |E| <= 24.
int max_matching_exhaustive(const Graph& g);

// Union-find recompute: component label per vertex (smallest vertex in the
// component).
std::vector<Word> components_oracle(const Graph& g);

// Exact minimum spanning forest weight.
long long mst_weight_kruskal(const Graph& g);
long long mst_weight_prim(const Graph& g);

// Spanning-forest shape check: tree edges exist in g, are acyclic, and the
// forest has exactly (vertices - components) edges.
Verdict check_spanning_forest(const Graph& g, const Matching& tree_edges);

} // namespace dynmpc::oracle
