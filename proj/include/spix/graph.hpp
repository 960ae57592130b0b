#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spix/sequence.hpp"
#include "spix/weight_table.hpp"

namespace spix {

using NodeId = std::uint32_t;

// Sorted, duplicate-free list of node ids.
using NodeSet = std::vector<NodeId>;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node = 0;
  double weight = 0.0;
};

// Undirected simple graph with strictly positive edge weights over the dense
// id space 0..n-1. Immutable once built; absent pairs have weight zero.
class WeightedGraph {
 public:
  // The empty graph (n = 0). Only produced by remove_nodes; analysis entry
  // points reject it.
  WeightedGraph() = default;

  // Normalizes every edge to u < v and sorts the list. Throws DomainError on
  // self-loops, duplicate pairs, endpoints >= n, or weights that are not
  // finite and > 0. `labels` may be empty (ids are used) or hold n entries.
  WeightedGraph(std::size_t node_count, std::vector<Edge> edges,
                std::vector<std::string> labels = {});

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  // Edges with u < v, ordered by (u, v).
  std::span<const Edge> edges() const noexcept { return edges_; }
  // Neighbors of v ordered by id.
  std::span<const Neighbor> neighbors(NodeId v) const;

  std::size_t degree(NodeId v) const { return neighbors(v).size(); }
  double strength(NodeId v) const;
  // Weight of {u, v}; 0 when the pair is not an edge.
  double weight(NodeId u, NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const { return weight(u, v) > 0.0; }
  // Sum of all edge weights, each edge counted once.
  double total_weight() const noexcept { return total_weight_; }

  const std::string& label(NodeId v) const { return labels_.at(v); }
  std::span<const std::string> labels() const noexcept { return labels_; }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  double total_weight_ = 0.0;
};

// Induced subgraph of a parent graph, expressed in parent ids. Holds a
// non-owning pointer; the parent must outlive it.
struct Subgraph {
  const WeightedGraph* parent = nullptr;
  NodeSet nodes;
  std::vector<Edge> edges;

  std::size_t size() const noexcept { return nodes.size(); }
  bool contains(NodeId v) const;
  // Degree of parent node v counted inside the subgraph.
  std::size_t degree(NodeId v) const;
};

OrderedSequence degree_sequence(const WeightedGraph& g);
OrderedSequence strength_sequence(const WeightedGraph& g);

// Watts-Strogatz local clustering: closed triplets over all triplets at v,
// ignoring weights. Zero when deg(v) < 2.
double clustering_coefficient(const WeightedGraph& g, NodeId v);

// Induced subgraph on an arbitrary node set (sorted internally).
Subgraph induced_subgraph(const WeightedGraph& g, NodeSet nodes);

// Induced subgraph on {v} plus N(v), edges among neighbors included.
Subgraph star_subgraph(const WeightedGraph& g, NodeId v);

// Graph on the complement of `removed`. Surviving nodes keep their relative
// order and labels, so id i of the result is the i-th surviving parent id.
WeightedGraph remove_nodes(const WeightedGraph& g, std::span<const NodeId> removed);

// Maximal connected subgraphs, ordered by their smallest node id.
std::vector<Subgraph> connected_components(const WeightedGraph& g);

bool is_connected(const WeightedGraph& g);

// True iff every node of the subgraph has the same in-subgraph degree.
bool is_regular(const Subgraph& sg);

// Subgraph re-expressed as a standalone graph with dense ids and the parent's labels.
WeightedGraph to_graph(const Subgraph& sg);

// Weights are grouped by exact equality unless `bin_epsilon` > 0, in which
// case a weight within `bin_epsilon` of the current row's first weight joins it.
WeightFrequencyTable weight_frequency_table(const WeightedGraph& g, double bin_epsilon = 0.0);

// Table for the induced subgraph, padded over C(|nodes|, 2) pairs.
WeightFrequencyTable weight_frequency_table(const Subgraph& sg, double bin_epsilon = 0.0);

std::uint64_t pair_count(std::uint64_t n) noexcept;

}  // namespace spix
