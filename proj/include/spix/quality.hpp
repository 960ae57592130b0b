#pragma once

#include <vector>

#include "spix/community.hpp"
#include "spix/graph.hpp"

namespace spix {

// alpha[c][k] is the membership of node cover[c].nodes[k] in community c.
// Nodes outside c have membership 0 and are not stored.
struct MembershipWeights {
  std::vector<std::vector<double>> alpha;

  // Membership of node v in community c (0 when v is not a member).
  double of(const CommunityCover& cover, std::size_t c, NodeId v) const;
};

// Mean over communities of the largest fraction of the community shared with
// any other community. Requires at least two communities.
double cluster_stability_index(const CommunityCover& cover);

// alpha_ci = s_ci / sum_c' s_c'i, with s_ci the strength of i inside c. A node
// with zero in-community strength everywhere gets uniform membership.
MembershipWeights membership_weights(const WeightedGraph& g, const CommunityCover& cover);

// (1/S) sum_c sum_{i,j} alpha_ci alpha_cj (a_ij - s_i s_j / S), where S counts
// each edge weight in both directions and the i = j terms are included.
// Throws UndefinedIndexError when S = 0.
double overlapping_modularity(const WeightedGraph& g, const CommunityCover& cover);

}  // namespace spix
