#include "spix/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spix/error.hpp"
#include "spix/summation.hpp"

namespace spix {

OrderedSequence::OrderedSequence(std::vector<double> values) : values_(std::move(values)) {
  for (double x : values_) {
    if (!std::isfinite(x) || x < 0.0) {
      throw DomainError("ordered sequence values must be finite and non-negative");
    }
  }
  std::sort(values_.begin(), values_.end());
  total_ = compensated_sum(values_);
}

WeightFrequencyTable::WeightFrequencyTable(std::vector<WeightRow> rows, std::uint64_t pair_total)
    : rows_(std::move(rows)), pair_total_(pair_total) {
  std::uint64_t freq_sum = 0;
  CompensatedSum total;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (!std::isfinite(r.weight) || r.weight < 0.0) {
      throw DomainError("weight table: weights must be finite and non-negative");
    }
    if (r.frequency == 0) throw DomainError("weight table: frequencies must be positive");
    if (i > 0 && !(rows_[i - 1].weight < r.weight)) {
      throw DomainError("weight table: weights must be strictly increasing");
    }
    freq_sum += r.frequency;
    total += r.weight * static_cast<double>(r.frequency);
  }
  if (freq_sum != pair_total_) {
    throw DomainError("weight table: frequencies must sum to the pair total");
  }
  weighted_total_ = total.value();
}

std::uint64_t WeightFrequencyTable::positive_count() const noexcept {
  std::uint64_t c = 0;
  for (const auto& r : rows_) {
    if (r.weight > 0.0) c += r.frequency;
  }
  return c;
}

std::uint64_t pair_count(std::uint64_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

WeightedGraph::WeightedGraph(std::size_t node_count, std::vector<Edge> edges,
                             std::vector<std::string> labels)
    : edges_(std::move(edges)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != node_count) {
    throw DomainError("label count does not match node count");
  }
  for (auto& e : edges_) {
    if (e.u == e.v) throw DomainError("self-loop on node " + std::to_string(e.u));
    if (e.u >= node_count || e.v >= node_count) throw DomainError("edge endpoint out of range");
    if (!std::isfinite(e.weight) || e.weight <= 0.0) {
      throw DomainError("edge weights must be finite and strictly positive");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw DomainError("duplicate edge {" + std::to_string(edges_[i].u) + ", " +
                        std::to_string(edges_[i].v) + "}");
    }
  }

  offsets_.assign(node_count + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  CompensatedSum total;
  for (const auto& e : edges_) {
    adjacency_[cursor[e.u]++] = {e.v, e.weight};
    adjacency_[cursor[e.v]++] = {e.u, e.weight};
    total += e.weight;
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
  total_weight_ = total.value();
}

std::span<const Neighbor> WeightedGraph::neighbors(NodeId v) const {
  if (v >= node_count()) throw DomainError("node id out of range");
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

double WeightedGraph::strength(NodeId v) const {
  CompensatedSum s;
  for (const auto& nb : neighbors(v)) s += nb.weight;
  return s.value();
}

double WeightedGraph::weight(NodeId u, NodeId v) const {
  const auto nbs = neighbors(u);
  auto it = std::lower_bound(nbs.begin(), nbs.end(), v,
                             [](const Neighbor& a, NodeId x) { return a.node < x; });
  return (it != nbs.end() && it->node == v) ? it->weight : 0.0;
}

bool Subgraph::contains(NodeId v) const { return std::binary_search(nodes.begin(), nodes.end(), v); }

std::size_t Subgraph::degree(NodeId v) const {
  std::size_t d = 0;
  for (const auto& e : edges) d += (e.u == v) + (e.v == v);
  return d;
}

OrderedSequence degree_sequence(const WeightedGraph& g) {
  std::vector<double> d(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) d[v] = static_cast<double>(g.degree(v));
  return OrderedSequence(std::move(d));
}

OrderedSequence strength_sequence(const WeightedGraph& g) {
  std::vector<double> s(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) s[v] = g.strength(v);
  return OrderedSequence(std::move(s));
}

double clustering_coefficient(const WeightedGraph& g, NodeId v) {
  const auto nbs = g.neighbors(v);
  const std::size_t k = nbs.size();
  if (k < 2) return 0.0;
  std::size_t closed = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (g.has_edge(nbs[i].node, nbs[j].node)) ++closed;
    }
  }
  return static_cast<double>(closed) / (static_cast<double>(k * (k - 1)) / 2.0);
}

Subgraph induced_subgraph(const WeightedGraph& g, NodeSet nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (!nodes.empty() && nodes.back() >= g.node_count()) throw DomainError("node id out of range");
  Subgraph sg{&g, std::move(nodes), {}};
  for (NodeId u : sg.nodes) {
    for (const auto& nb : g.neighbors(u)) {
      if (u < nb.node && sg.contains(nb.node)) sg.edges.push_back({u, nb.node, nb.weight});
    }
  }
  return sg;
}

Subgraph star_subgraph(const WeightedGraph& g, NodeId v) {
  NodeSet nodes{v};
  for (const auto& nb : g.neighbors(v)) nodes.push_back(nb.node);
  return induced_subgraph(g, std::move(nodes));
}

WeightedGraph remove_nodes(const WeightedGraph& g, std::span<const NodeId> removed) {
  std::vector<bool> gone(g.node_count(), false);
  for (NodeId v : removed) {
    if (v >= g.node_count()) throw DomainError("node id out of range");
    gone[v] = true;
  }
  constexpr NodeId kNone = ~NodeId{0};
  std::vector<NodeId> remap(g.node_count(), kNone);
  std::vector<std::string> labels;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!gone[v]) {
      remap[v] = static_cast<NodeId>(labels.size());
      labels.push_back(g.label(v));
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (!gone[e.u] && !gone[e.v]) edges.push_back({remap[e.u], remap[e.v], e.weight});
  }
  const std::size_t n = labels.size();
  return WeightedGraph(n, std::move(edges), std::move(labels));
}

std::vector<Subgraph> connected_components(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<bool> seen(n, false);
  std::vector<Subgraph> out;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    NodeSet comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (const auto& nb : g.neighbors(u)) {
        if (!seen[nb.node]) {
          seen[nb.node] = true;
          stack.push_back(nb.node);
        }
      }
    }
    out.push_back(induced_subgraph(g, std::move(comp)));
  }
  return out;
}

bool is_connected(const WeightedGraph& g) {
  return g.node_count() <= 1 || connected_components(g).size() == 1;
}

bool is_regular(const Subgraph& sg) {
  if (sg.nodes.empty()) return true;
  std::vector<std::size_t> deg(sg.nodes.size(), 0);
  auto index_of = [&](NodeId v) {
    return static_cast<std::size_t>(std::lower_bound(sg.nodes.begin(), sg.nodes.end(), v) -
                                    sg.nodes.begin());
  };
  for (const auto& e : sg.edges) {
    ++deg[index_of(e.u)];
    ++deg[index_of(e.v)];
  }
  return std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) == deg.end();
}

WeightedGraph to_graph(const Subgraph& sg) {
  std::vector<std::string> labels;
  labels.reserve(sg.nodes.size());
  for (NodeId v : sg.nodes) labels.push_back(sg.parent ? sg.parent->label(v) : std::to_string(v));
  auto local = [&](NodeId v) {
    return static_cast<NodeId>(std::lower_bound(sg.nodes.begin(), sg.nodes.end(), v) -
                               sg.nodes.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(sg.edges.size());
  for (const auto& e : sg.edges) edges.push_back({local(e.u), local(e.v), e.weight});
  return WeightedGraph(sg.nodes.size(), std::move(edges), std::move(labels));
}

namespace {

WeightFrequencyTable table_from_weights(std::vector<double> weights, std::uint64_t pairs,
                                        double bin_epsilon) {
  if (weights.size() > pairs) throw DomainError("more edges than node pairs");
  std::sort(weights.begin(), weights.end());
  std::vector<WeightRow> rows;
  if (weights.size() < pairs) rows.push_back({0.0, pairs - weights.size()});
  for (double w : weights) {
    if (!rows.empty() && rows.back().weight > 0.0 &&
        (w == rows.back().weight || (bin_epsilon > 0.0 && w - rows.back().weight <= bin_epsilon))) {
      ++rows.back().frequency;
    } else {
      rows.push_back({w, 1});
    }
  }
  return WeightFrequencyTable(std::move(rows), pairs);
}

}  // namespace

WeightFrequencyTable weight_frequency_table(const WeightedGraph& g, double bin_epsilon) {
  if (g.node_count() < 2) throw DomainError("weight frequency table needs at least 2 nodes");
  std::vector<double> w;
  w.reserve(g.edge_count());
  for (const auto& e : g.edges()) w.push_back(e.weight);
  return table_from_weights(std::move(w), pair_count(g.node_count()), bin_epsilon);
}

WeightFrequencyTable weight_frequency_table(const Subgraph& sg, double bin_epsilon) {
  if (sg.size() < 2) throw DomainError("weight frequency table needs at least 2 nodes");
  std::vector<double> w;
  w.reserve(sg.edges.size());
  for (const auto& e : sg.edges) w.push_back(e.weight);
  return table_from_weights(std::move(w), pair_count(sg.size()), bin_epsilon);
}

}  // namespace spix
