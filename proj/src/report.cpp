#include "spix/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "spix/bounds.hpp"
#include "spix/error.hpp"
#include "spix/quality.hpp"

namespace spix {

double round6(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return std::strtod(buf, nullptr);
}

CommunityRun run_communities(const WeightedGraph& g, const DetectionConfig& cfg) {
  if (g.empty()) throw DomainError("community detection requires a non-empty graph");
  CommunityRun run;
  if (g.edge_count() > 0) {
    run.strength_sparsity = sparsity_index_strengths(g).value;
    if (run.strength_sparsity < cfg.min_strength_sparsity) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "strength sparsity %.6g is below the threshold %.6g; communities may be weak",
                    run.strength_sparsity, cfg.min_strength_sparsity);
      run.warnings.emplace_back(buf);
    }
  }

  DetectionConfig per_component = cfg;
  per_component.min_strength_sparsity = 0.0;
  const auto comps = connected_components(g);
  run.components = comps.size();
  if (comps.size() > 1) {
    run.warnings.push_back("graph has " + std::to_string(comps.size()) +
                           " connected components; detection ran on each and the covers were concatenated");
  }
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& nodes = comps[ci].nodes;
    const WeightedGraph sub = comps.size() == 1 ? g : to_graph(comps[ci]);
    DetectionResult r = detect(sub, per_component);
    auto lift = [&](CommunityCover cover, CommunityCover& into) {
      for (auto& c : cover.communities) {
        for (auto& v : c.nodes) v = nodes[v];
        into.communities.push_back(std::move(c));
      }
    };
    lift(std::move(r.candidates), run.candidates);
    lift(std::move(r.cover), run.cover);
    for (auto& t : r.ties) run.ties.push_back(comps.size() == 1 ? std::move(t) : "component " + std::to_string(ci) + ": " + t);
  }
  return run;
}

Json graph_summary(const WeightedGraph& g) {
  Json j;
  j["nodes"] = g.node_count();
  j["edges"] = g.edge_count();
  const auto pairs = pair_count(g.node_count());
  j["density"] = pairs == 0 ? 0.0 : round6(static_cast<double>(g.edge_count()) / static_cast<double>(pairs));
  j["total_weight"] = round6(g.total_weight());
  j["connected_components"] = connected_components(g).size();
  return j;
}

Json to_json(const SparsityReport& r) {
  Json j;
  j["quantity"] = to_string(r.quantity);
  j["basis"] = to_string(r.basis);
  j["t1"] = round6(r.t1);
  j["value"] = round6(r.value);
  return j;
}

Json stats_report(const WeightedGraph& g, Basis basis) {
  if (g.edge_count() == 0) throw UndefinedIndexError("indices are undefined on a graph without edges");
  Json j;
  j["graph"] = graph_summary(g);
  Json indices = Json::array();
  indices.push_back(to_json(sparsity_index_degrees(g, Basis::ObservedTotal)));
  if (basis != Basis::ObservedTotal) indices.push_back(to_json(sparsity_index_degrees(g, basis)));
  indices.push_back(to_json(sparsity_index_strengths(g, Basis::ObservedTotal)));
  if (basis != Basis::ObservedTotal) indices.push_back(to_json(sparsity_index_strengths(g, basis)));
  indices.push_back(to_json(sparsity_index_edge_weights(weight_frequency_table(g))));
  j["indices"] = std::move(indices);
  return j;
}

Json cover_json(const WeightedGraph& g, const CommunityCover& cover) {
  Json arr = Json::array();
  for (const auto& c : cover.communities) {
    Json members = Json::array();
    for (NodeId v : c.nodes) members.push_back(g.label(v));
    Json j;
    j["origin"] = to_string(c.origin);
    j["size"] = c.size();
    j["members"] = std::move(members);
    arr.push_back(std::move(j));
  }
  return arr;
}

Json cover_metrics(const WeightedGraph& g, const CommunityCover& cover) {
  Json j;
  j["count"] = cover.size();
  j["overlapping_modularity"] = g.edge_count() > 0 ? Json(round6(overlapping_modularity(g, cover))) : Json();
  j["cluster_stability_index"] = cover.size() >= 2 ? Json(round6(cluster_stability_index(cover))) : Json();
  std::size_t most = 0;
  std::vector<std::size_t> memberships(g.node_count(), 0);
  for (const auto& c : cover.communities) {
    for (NodeId v : c.nodes) most = std::max(most, ++memberships[v]);
  }
  j["max_memberships_per_node"] = most;
  return j;
}

namespace {

Json band_json(const EdgeCountInterval& band) {
  Json j;
  j["k"] = band.k;
  j["edges_lo"] = band.lo;
  j["edges_hi"] = band.hi;
  const auto seq = max_sparsity_degree_sequence(band.n, band.k);
  Json degrees = Json::array();
  for (double d : seq.values()) degrees.push_back(static_cast<int>(d));
  j["extremal_degree_sequence"] = std::move(degrees);
  j["max_sparsity"] = round6(max_sparsity_value(band.n, band.k));
  return j;
}

Json extremes_json(int n) {
  Json j;
  j["star_si"] = round6(star_si(n));
  j["path_si"] = round6(path_si(n));
  return j;
}

}  // namespace

Json bounds_report(int n) {
  Json j;
  j["nodes"] = n;
  j["tree_extremes"] = extremes_json(n);
  Json bands = Json::array();
  for (int k = 1; k <= n - 1; ++k) bands.push_back(band_json(edge_count_interval(n, k)));
  j["bands"] = std::move(bands);
  return j;
}

Json bounds_report(int n, std::int64_t m) {
  Json j;
  j["nodes"] = n;
  j["edges"] = m;
  j["tree_extremes"] = extremes_json(n);
  const auto band = interval_for_edges(n, m);
  const auto bracket = degree_sparsity_bracket(n, m);
  j["band"] = band_json(band);
  Json b;
  b["lower"] = round6(bracket.lower);
  b["upper"] = round6(bracket.upper);
  j["bracket"] = std::move(b);
  return j;
}

std::vector<BoundCheck> check_bounds(const WeightedGraph& g) {
  constexpr double kSlack = 1e-12;
  std::vector<BoundCheck> out;
  const int n = static_cast<int>(g.node_count());
  const auto m = static_cast<std::int64_t>(g.edge_count());
  if (m == 0) return out;

  if (n >= 3 && is_connected(g)) {
    const double si = gini_index(degree_sequence(g));
    const auto bracket = degree_sparsity_bracket(n, m);
    out.push_back({"degree-sparsity-upper-bound", si, 0.0, bracket.upper, si <= bracket.upper + kSlack});
    if (m == n - 1) {
      const double lo = path_si(n);
      const double hi = star_si(n);
      out.push_back({"tree-degree-sparsity-range", si, lo, hi, si >= lo - kSlack && si <= hi + kSlack});
    }
  }

  const auto table = weight_frequency_table(g);
  const double si_w = sparsity_index_edge_weights(table).value;
  const auto pairs = static_cast<double>(pair_count(g.node_count()));
  const double p = 1.0 - static_cast<double>(m) / pairs;
  const auto rows = table.rows();
  const std::size_t distinct = table.positive_count() == 0 ? 0 : rows.size() - (rows.front().weight == 0.0 ? 1 : 0);

  if (distinct == 1) {
    out.push_back({"single-weight-sparsity", si_w, p, p, std::abs(si_w - p) <= kSlack});
  } else if (distinct == static_cast<std::size_t>(m) && n > 2) {
    const auto b = distinct_weight_bounds(n, p);
    out.push_back({"distinct-weight-sparsity-range", si_w, b.lower, b.upper,
                   si_w >= b.lower - kSlack && si_w <= b.upper + kSlack});
  }
  if (distinct == 2 && m == static_cast<std::int64_t>(pairs) && rows[0].frequency == rows[1].frequency) {
    const double expected = two_weight_complete_si(rows[0].weight, rows[1].weight);
    out.push_back({"two-weight-complete-sparsity", si_w, expected, expected, std::abs(si_w - expected) <= 1e-10});
  }
  return out;
}

}  // namespace spix
