#include "spix/community.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>

#include "spix/error.hpp"
#include "spix/sparsity.hpp"

namespace spix {

std::string_view to_string(CommunityOrigin o) noexcept {
  switch (o) {
    case CommunityOrigin::SplitStar: return "split-L";
    case CommunityOrigin::SplitRegular: return "split-C";
    case CommunityOrigin::Merged: return "merged";
    case CommunityOrigin::LeftoverStar: return "leftover-L";
  }
  return "unknown";
}

std::string_view to_string(OverlapDenominator d) noexcept {
  switch (d) {
    case OverlapDenominator::Min: return "min";
    case OverlapDenominator::Max: return "max";
    case OverlapDenominator::Union: return "union";
  }
  return "unknown";
}

namespace {

constexpr double kTieTolerance = 1e-12;

bool near(double a, double b) {
  return std::abs(a - b) <= kTieTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

std::size_t intersection_size(const NodeSet& a, const NodeSet& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool proper_subset(const NodeSet& a, const NodeSet& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string describe(const WeightedGraph& g, const NodeSet& nodes) {
  std::string s = "{";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) s += ", ";
    if (i == 4 && nodes.size() > 5) {
      s += "... " + std::to_string(nodes.size() - 4) + " more";
      break;
    }
    s += g.label(nodes[i]);
  }
  return s + "}";
}

void note(TieLog* ties, std::string message) {
  if (ties != nullptr) ties->push_back(std::move(message));
}

// Residual graph view: the parent graph restricted to the alive nodes.
class Residual {
 public:
  explicit Residual(const WeightedGraph& g) : g_(g), alive_(g.node_count(), true), left_(g.node_count()) {}

  bool empty() const { return left_ == 0; }
  bool alive(NodeId v) const { return alive_[v]; }

  void remove(NodeId v) {
    if (alive_[v]) {
      alive_[v] = false;
      --left_;
    }
  }

  double strength(NodeId v) const {
    double s = 0.0;
    for (const auto& nb : g_.neighbors(v)) {
      if (alive_[nb.node]) s += nb.weight;
    }
    return s;
  }

  NodeSet neighbors(NodeId v) const {
    NodeSet out;
    for (const auto& nb : g_.neighbors(v)) {
      if (alive_[nb.node]) out.push_back(nb.node);
    }
    return out;
  }

  double clustering(NodeId v) const {
    const NodeSet nb = neighbors(v);
    if (nb.size() < 2) return 0.0;
    std::size_t closed = 0;
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g_.has_edge(nb[a], nb[b])) ++closed;
      }
    }
    return static_cast<double>(closed) / (static_cast<double>(nb.size()) * (nb.size() - 1) / 2.0);
  }

  std::vector<NodeSet> components() const {
    std::vector<NodeSet> out;
    std::vector<bool> seen(g_.node_count(), false);
    for (NodeId s = 0; s < g_.node_count(); ++s) {
      if (!alive_[s] || seen[s]) continue;
      NodeSet comp{s};
      seen[s] = true;
      for (std::size_t head = 0; head < comp.size(); ++head) {
        for (const auto& nb : g_.neighbors(comp[head])) {
          if (alive_[nb.node] && !seen[nb.node]) {
            seen[nb.node] = true;
            comp.push_back(nb.node);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  bool regular(const NodeSet& comp) const {
    const std::size_t d0 = neighbors(comp.front()).size();
    return std::all_of(comp.begin(), comp.end(), [&](NodeId v) { return neighbors(v).size() == d0; });
  }

 private:
  const WeightedGraph& g_;
  std::vector<bool> alive_;
  std::size_t left_;
};

bool induced_connected(const WeightedGraph& g, const NodeSet& nodes) {
  if (nodes.empty()) return false;
  std::vector<NodeId> stack{nodes.front()};
  std::vector<bool> seen(nodes.size(), false);
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (const auto& nb : g.neighbors(v)) {
      auto it = std::lower_bound(nodes.begin(), nodes.end(), nb.node);
      if (it == nodes.end() || *it != nb.node) continue;
      const auto idx = static_cast<std::size_t>(it - nodes.begin());
      if (seen[idx]) continue;
      seen[idx] = true;
      ++reached;
      stack.push_back(nb.node);
    }
  }
  return reached == nodes.size();
}

void check_graph(const WeightedGraph& g) {
  if (g.empty()) throw DomainError("community detection requires a non-empty graph");
  if (!is_connected(g)) throw DomainError("community detection requires a connected graph");
}

// Drops proper subsets and later duplicates; survivors keep their order.
CommunityCover drop_subsets(const CommunityCover& cover) {
  CommunityCover out;
  const auto& cs = cover.communities;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cs.size() && !dominated; ++j) {
      if (j == i) continue;
      dominated = proper_subset(cs[i].nodes, cs[j].nodes) || (j < i && cs[i].nodes == cs[j].nodes);
    }
    if (!dominated) out.communities.push_back(cs[i]);
  }
  return out;
}

// Folds size-2 and size-3 candidates into the largest larger candidate they
// touch, restarting after every fold.
void fold_small(const WeightedGraph& g, CommunityCover& cover, TieLog* ties) {
  auto& cs = cover.communities;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < cs.size() && !changed; ++i) {
      if (cs[i].size() < 2 || cs[i].size() > 3) continue;
      std::size_t best = cs.size();
      std::size_t rivals = 0;
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (j == i || cs[j].size() <= cs[i].size()) continue;
        if (intersection_size(cs[i].nodes, cs[j].nodes) == 0) continue;
        if (best == cs.size() || cs[j].size() > cs[best].size()) {
          best = j;
          rivals = 1;
        } else if (cs[j].size() == cs[best].size()) {
          ++rivals;
          if (cs[j].nodes.front() < cs[best].nodes.front()) best = j;
        }
      }
      if (best == cs.size()) continue;
      if (rivals > 1) {
        note(ties, "tune: " + describe(g, cs[i].nodes) + " had " + std::to_string(rivals) +
                       " equally large hosts; folded into the one with the smallest node id");
      }
      cs[best].nodes = set_union(cs[best].nodes, cs[i].nodes);
      cs[best].origin = CommunityOrigin::Merged;
      cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
    }
  }
}

// Size-1 candidates join the community holding their heaviest neighbor.
void attach_singletons(const WeightedGraph& g, CommunityCover& cover, TieLog* ties) {
  auto& cs = cover.communities;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < cs.size() && !changed; ++i) {
      if (cs[i].size() != 1) continue;
      const NodeId v = cs[i].nodes.front();
      const auto nbs = g.neighbors(v);
      if (nbs.empty()) continue;
      const Neighbor* heaviest = &nbs.front();
      for (const auto& nb : nbs) {
        if (nb.weight > heaviest->weight) heaviest = &nb;
      }
      std::size_t host = cs.size();
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (j == i || !std::binary_search(cs[j].nodes.begin(), cs[j].nodes.end(), heaviest->node)) continue;
        if (host == cs.size() || cs[j].size() > cs[host].size()) host = j;
      }
      if (host == cs.size()) continue;
      note(ties, "tune: singleton " + g.label(v) + " attached through its heaviest edge to " + g.label(heaviest->node));
      cs[host].nodes = set_union(cs[host].nodes, cs[i].nodes);
      cs[host].origin = CommunityOrigin::Merged;
      cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
    }
  }
}

// Drops, smallest first, any candidate the others already cover entirely.
void drop_redundant(const WeightedGraph& g, CommunityCover& cover) {
  auto& cs = cover.communities;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::size_t> order(cs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (cs[a].size() != cs[b].size()) return cs[a].size() < cs[b].size();
      return cs[a].nodes.front() < cs[b].nodes.front();
    });
    for (std::size_t i : order) {
      std::vector<int> covered(g.node_count(), 0);
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (j == i) continue;
        for (NodeId v : cs[j].nodes) covered[v] = 1;
      }
      if (std::all_of(covered.begin(), covered.end(), [](int c) { return c != 0; })) {
        cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
}

}  // namespace

double overlap_fraction(const NodeSet& a, const NodeSet& b, OverlapDenominator d) {
  if (a.empty() || b.empty()) throw DomainError("overlap fraction of an empty set");
  const auto common = static_cast<double>(intersection_size(a, b));
  switch (d) {
    case OverlapDenominator::Min: return common / static_cast<double>(std::min(a.size(), b.size()));
    case OverlapDenominator::Max: return common / static_cast<double>(std::max(a.size(), b.size()));
    case OverlapDenominator::Union:
      return common / (static_cast<double>(a.size() + b.size()) - common);
  }
  return 0.0;
}

SplitResult split(const WeightedGraph& g, TieLog* ties) {
  check_graph(g);
  SplitResult out;
  Residual res(g);
  {
    NodeSet all(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) all[v] = v;
    if (res.regular(all)) {
      out.regular.push_back(std::move(all));
      return out;
    }
  }

  while (!res.empty()) {
    std::vector<NodeId> top;
    double best = -1.0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (!res.alive(v)) continue;
      const double s = res.strength(v);
      if (top.empty() || (s > best && !near(s, best))) {
        best = s;
        top.assign(1, v);
      } else if (near(s, best)) {
        top.push_back(v);
      }
    }
    NodeId center = top.front();
    if (top.size() > 1) {
      double best_cc = -1.0;
      std::size_t cc_ties = 0;
      for (NodeId v : top) {
        const double cc = res.clustering(v);
        if (cc > best_cc && !near(cc, best_cc)) {
          best_cc = cc;
          center = v;
          cc_ties = 1;
        } else if (near(cc, best_cc)) {
          ++cc_ties;
        }
      }
      NodeSet tied(top.begin(), top.end());
      note(ties, "split: strength tie among " + describe(g, tied) + " resolved " +
                     (cc_ties > 1 ? "by smallest node id" : "by clustering coefficient") + ", chose " +
                     g.label(center));
    }

    NodeSet star = res.neighbors(center);
    star.insert(std::upper_bound(star.begin(), star.end(), center), center);
    out.stars.push_back(std::move(star));
    out.centers.push_back(center);
    res.remove(center);

    for (auto& comp : res.components()) {
      if (!res.regular(comp)) continue;
      for (NodeId v : comp) res.remove(v);
      out.regular.push_back(std::move(comp));
    }
  }
  return out;
}

CommunityCover reconstruct(const WeightedGraph& g, const SplitResult& parts, TieLog* ties) {
  CommunityCover regular;
  for (const auto& c : parts.regular) regular.communities.push_back({c, CommunityOrigin::SplitRegular});
  std::vector<Community> leftover;

  for (const auto& star : parts.stars) {
    struct Option {
      double si;
      std::size_t edges;
      NodeId first;
      std::size_t index;
    };
    std::vector<Option> options;
    for (std::size_t i = 0; i < regular.size(); ++i) {
      NodeSet u = set_union(star, regular.communities[i].nodes);
      if (!induced_connected(g, u)) continue;
      const Subgraph sg = induced_subgraph(g, u);
      const double si = sparsity_index_edge_weights(weight_frequency_table(sg)).value;
      options.push_back({si, sg.edges.size(), u.front(), i});
    }
    if (options.empty()) {
      leftover.push_back({star, CommunityOrigin::LeftoverStar});
      continue;
    }
    auto better = [](const Option& a, const Option& b) {
      if (!near(a.si, b.si)) return a.si < b.si;
      if (a.edges != b.edges) return a.edges < b.edges;
      if (a.first != b.first) return a.first < b.first;
      return a.index < b.index;
    };
    const Option best = *std::min_element(options.begin(), options.end(), better);
    const auto same_si = std::count_if(options.begin(), options.end(),
                                       [&](const Option& o) { return near(o.si, best.si); });
    if (same_si > 1) {
      const auto same_edges = std::count_if(options.begin(), options.end(), [&](const Option& o) {
        return near(o.si, best.si) && o.edges == best.edges;
      });
      note(ties, "reconstruct: star " + describe(g, star) + " had " + std::to_string(same_si) +
                     " unions of equal sparsity; resolved by " +
                     (same_edges > 1 ? "smallest node id" : "fewer edges"));
    }
    auto& target = regular.communities[best.index];
    target.nodes = set_union(star, target.nodes);
    target.origin = CommunityOrigin::SplitStar;
  }

  for (auto& c : leftover) regular.communities.push_back(std::move(c));
  return regular;
}

CommunityCover clean_candidates(const WeightedGraph& g, CommunityCover candidates, TieLog* ties) {
  CommunityCover cover = drop_subsets(candidates);
  fold_small(g, cover, ties);
  attach_singletons(g, cover, ties);
  cover = drop_subsets(cover);
  drop_redundant(g, cover);
  return cover;
}

CommunityCover merge_overlapping(CommunityCover cover, const DetectionConfig& cfg) {
  if (!(cfg.merge_threshold > 0.0 && cfg.merge_threshold <= 1.0)) {
    throw DomainError("merge threshold must lie in (0, 1]");
  }
  auto& cs = cover.communities;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < cs.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < cs.size() && !changed; ++j) {
        if (overlap_fraction(cs[i].nodes, cs[j].nodes, cfg.denominator) < cfg.merge_threshold) continue;
        cs[i].nodes = set_union(cs[i].nodes, cs[j].nodes);
        cs[i].origin = CommunityOrigin::Merged;
        cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
    }
  }
  return drop_subsets(cover);
}

CommunityCover final_tune(const WeightedGraph& g, CommunityCover candidates, const DetectionConfig& cfg,
                          TieLog* ties) {
  if (candidates.empty()) throw DomainError("final tuning requires at least one candidate");
  CommunityCover cover = clean_candidates(g, std::move(candidates), ties);
  if (!cfg.merge_overlaps) return cover;
  return merge_overlapping(std::move(cover), cfg);
}

DetectionResult detect(const WeightedGraph& g, const DetectionConfig& cfg) {
  check_graph(g);
  if (!(cfg.min_strength_sparsity >= 0.0 && cfg.min_strength_sparsity < 1.0)) {
    throw DomainError("minimum strength sparsity must lie in [0, 1)");
  }
  DetectionResult r;
  if (g.edge_count() > 0) {
    r.strength_sparsity = sparsity_index_strengths(g).value;
    if (r.strength_sparsity < cfg.min_strength_sparsity) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "strength sparsity %.6g is below the threshold %.6g; communities may be weak",
                    r.strength_sparsity, cfg.min_strength_sparsity);
      r.warnings.emplace_back(buf);
    }
  }
  r.parts = split(g, &r.ties);
  r.reconstructed = reconstruct(g, r.parts, &r.ties);
  r.candidates = clean_candidates(g, r.reconstructed, &r.ties);
  r.cover = cfg.merge_overlaps ? merge_overlapping(r.candidates, cfg) : r.candidates;
  return r;
}

}  // namespace spix
