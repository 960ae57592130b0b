#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "spix/community.hpp"
#include "spix/graph.hpp"
#include "spix/sparsity.hpp"

namespace spix {

inline constexpr const char* kToolVersion = "0.3.0";

using Json = nlohmann::ordered_json;

// x rounded to 6 significant digits, the precision every report carries.
double round6(double x);

// Detection over every connected component, covers concatenated in component
// order and mapped back to g's ids.
struct CommunityRun {
  CommunityCover candidates;
  CommunityCover cover;
  std::size_t components = 0;
  double strength_sparsity = 0.0;  // of the whole graph
  std::vector<std::string> warnings;
  TieLog ties;
};

CommunityRun run_communities(const WeightedGraph& g, const DetectionConfig& cfg);

Json graph_summary(const WeightedGraph& g);
Json to_json(const SparsityReport& r);

// Degree and strength indices under `basis` and under the observed total,
// plus the edge-weight index.
Json stats_report(const WeightedGraph& g, Basis basis);

Json cover_json(const WeightedGraph& g, const CommunityCover& cover);

// Count, Q_o and CSI (null below two communities).
Json cover_metrics(const WeightedGraph& g, const CommunityCover& cover);

Json bounds_report(int n);
Json bounds_report(int n, std::int64_t m);

struct BoundCheck {
  std::string name;
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool holds = true;
};

// Every closed-form bound applicable to g: the degree brackets need a connected
// graph with n >= 3; the edge-weight ones depend on the weight pattern
// (single weight, all distinct, or a two-weight complete graph split evenly).
std::vector<BoundCheck> check_bounds(const WeightedGraph& g);

}  // namespace spix
