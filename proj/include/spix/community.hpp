#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spix/graph.hpp"

namespace spix {

enum class CommunityOrigin {
  SplitStar,     // "split-L": a star fused with a regular component
  SplitRegular,  // "split-C": a regular component no star attached to
  Merged,        // "merged": produced by a final-tuning merge
  LeftoverStar,  // "leftover-L": a star with no connectable component
};

std::string_view to_string(CommunityOrigin o) noexcept;

struct Community {
  NodeSet nodes;
  CommunityOrigin origin = CommunityOrigin::SplitRegular;

  std::size_t size() const noexcept { return nodes.size(); }
};

struct CommunityCover {
  std::vector<Community> communities;

  std::size_t size() const noexcept { return communities.size(); }
  bool empty() const noexcept { return communities.empty(); }
};

enum class OverlapDenominator { Min, Max, Union };

std::string_view to_string(OverlapDenominator d) noexcept;

struct DetectionConfig {
  // Merge two communities once |A ∩ B| / denominator(A, B) >= merge_threshold.
  double merge_threshold = 0.5;
  // Below this strength sparsity (T1 = n s_max) detection still runs but warns.
  double min_strength_sparsity = 0.5;
  OverlapDenominator denominator = OverlapDenominator::Min;
  // When false the overlap-merge step is skipped and the cover is the
  // cleaned candidate list.
  bool merge_overlaps = true;
};

// Star extraction output. `stars` keeps extraction order; `centers[i]` is the
// node stars[i] was built around.
struct SplitResult {
  std::vector<NodeSet> stars;
  std::vector<NodeId> centers;
  std::vector<NodeSet> regular;
};

// Human-readable notes on every tie the pipeline had to break.
using TieLog = std::vector<std::string>;

// Repeatedly takes the node of highest strength in the residual graph (ties:
// higher clustering coefficient, then smaller id), records the induced
// subgraph on it and its residual neighbors as a star, and deletes the node.
// Regular residual components (isolated nodes included) are moved to the
// regular list. A graph that is regular on entry becomes a single regular
// component. Requires a connected graph with n >= 1.
SplitResult split(const WeightedGraph& g, TieLog* ties = nullptr);

// Fuses each star, first in first out, with the connectable regular
// component whose union has the lowest edge-weight sparsity (ties: fewer
// edges, then smaller node id). Stars with no connectable component are kept.
CommunityCover reconstruct(const WeightedGraph& g, const SplitResult& parts, TieLog* ties = nullptr);

// Steps 1-3 of final tuning: drop proper subsets (and duplicates), fold
// small candidates into larger overlapping ones, drop redundant candidates.
CommunityCover clean_candidates(const WeightedGraph& g, CommunityCover candidates,
                                TieLog* ties = nullptr);

// Step 4 plus a closing subset sweep: merges pairs whose overlap fraction
// reaches the threshold until none remain.
CommunityCover merge_overlapping(CommunityCover cover, const DetectionConfig& cfg);

// clean_candidates followed by merge_overlapping (unless cfg.merge_overlaps is false).
CommunityCover final_tune(const WeightedGraph& g, CommunityCover candidates,
                          const DetectionConfig& cfg, TieLog* ties = nullptr);

struct DetectionResult {
  SplitResult parts;
  CommunityCover reconstructed;  // raw reconstruction output
  CommunityCover candidates;     // after clean_candidates
  CommunityCover cover;          // final communities
  double strength_sparsity = 0.0;
  std::vector<std::string> warnings;
  TieLog ties;
};

// Full pipeline on a connected graph. Deterministic for a fixed graph and config.
DetectionResult detect(const WeightedGraph& g, const DetectionConfig& cfg = {});

double overlap_fraction(const NodeSet& a, const NodeSet& b, OverlapDenominator d);

}  // namespace spix
