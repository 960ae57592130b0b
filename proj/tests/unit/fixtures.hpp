#pragma once

#include <string>
#include <vector>

#include "spix/graph.hpp"

namespace fixtures {

using spix::Edge;
using spix::NodeId;
using spix::WeightedGraph;

inline WeightedGraph star(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.push_back({0, static_cast<NodeId>(v), 1.0});
  return WeightedGraph(static_cast<std::size_t>(n), e);
}

inline WeightedGraph path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({static_cast<NodeId>(v), static_cast<NodeId>(v + 1), 1.0});
  return WeightedGraph(static_cast<std::size_t>(n), e);
}

inline WeightedGraph cycle(int n) {
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.push_back({static_cast<NodeId>(v), static_cast<NodeId>((v + 1) % n), 1.0});
  return WeightedGraph(static_cast<std::size_t>(n), e);
}

inline WeightedGraph complete(int n, double w = 1.0) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
  }
  return WeightedGraph(static_cast<std::size_t>(n), e);
}

inline WeightedGraph triangle(double a, double b, double c) {
  return WeightedGraph(3, {{0, 1, a}, {1, 2, b}, {0, 2, c}});
}

}  // namespace fixtures
