#include "spix/quality.hpp"

#include <algorithm>

#include "spix/error.hpp"
#include "spix/kernels.hpp"

namespace spix {

namespace {

std::size_t common_count(const NodeSet& a, const NodeSet& b) {
  std::size_t n = 0;
  for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n, ++i, ++j;
    }
  }
  return n;
}

}  // namespace

double MembershipWeights::of(const CommunityCover& cover, std::size_t c, NodeId v) const {
  const auto& nodes = cover.communities.at(c).nodes;
  auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
  if (it == nodes.end() || *it != v) return 0.0;
  return alpha.at(c)[static_cast<std::size_t>(it - nodes.begin())];
}

double cluster_stability_index(const CommunityCover& cover) {
  const auto& cs = cover.communities;
  if (cs.size() < 2) throw DomainError("cluster stability index requires at least two communities");
  double sum = 0.0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].nodes.empty()) throw DomainError("empty community in cover");
    double best = 0.0;
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (j == i) continue;
      const auto common = static_cast<double>(common_count(cs[i].nodes, cs[j].nodes));
      best = std::max(best, common / static_cast<double>(cs[i].size()));
    }
    sum += best;
  }
  return sum / static_cast<double>(cs.size());
}

MembershipWeights membership_weights(const WeightedGraph& g, const CommunityCover& cover) {
  MembershipWeights w;
  w.alpha.resize(cover.size());
  std::vector<double> total(g.node_count(), 0.0);
  std::vector<int> count(g.node_count(), 0);
  for (std::size_t c = 0; c < cover.size(); ++c) {
    const auto& nodes = cover.communities[c].nodes;
    if (nodes.empty()) throw DomainError("empty community in cover");
    auto& a = w.alpha[c];
    a.resize(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (nodes[k] >= g.node_count()) throw DomainError("community node outside the graph");
      double s = 0.0;
      for (const auto& nb : g.neighbors(nodes[k])) {
        if (std::binary_search(nodes.begin(), nodes.end(), nb.node)) s += nb.weight;
      }
      a[k] = s;
      total[nodes[k]] += s;
      ++count[nodes[k]];
    }
  }
  for (std::size_t c = 0; c < cover.size(); ++c) {
    const auto& nodes = cover.communities[c].nodes;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const NodeId v = nodes[k];
      w.alpha[c][k] = total[v] > 0.0 ? w.alpha[c][k] / total[v] : 1.0 / count[v];
    }
  }
  return w;
}

double overlapping_modularity(const WeightedGraph& g, const CommunityCover& cover) {
  return kernels::overlapping_modularity(g, cover, membership_weights(g, cover));
}

}  // namespace spix
