#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial reference that
// takes an independent route to the same number; the tests and the benchmark
// compare the two.

#include <cstdint>
#include <vector>

#include "spix/community.hpp"
#include "spix/graph.hpp"
#include "spix/quality.hpp"

namespace spix::kernels {

// Degree sparsity (T1 = T) over every labeled connected graph with n nodes
// and m edges.
struct DegreeSurvey {
  std::uint64_t graphs = 0;
  double min_si = 0.0;
  double max_si = 0.0;
  // Distinct ascending degree sequences attaining min_si / max_si (to 1e-12),
  // lexicographically sorted.
  std::vector<std::vector<int>> argmin;
  std::vector<std::vector<int>> argmax;
};

// OpenMP over edge-mask chunks, degree sparsity evaluated inline.
DegreeSurvey survey_connected_graphs(int n, int m);

// Reference: enumerate_connected_graphs + degree_sequence + gini_index.
DegreeSurvey survey_connected_graphs_serial(int n, int m);

// Q_o via the per-community factorization
//   sum_{i,j in c} alpha_i alpha_j a_ij - (sum_{i in c} alpha_i s_i)^2 / S,
// communities processed in parallel and reduced in index order.
double overlapping_modularity(const WeightedGraph& g, const CommunityCover& cover,
                              const MembershipWeights& weights);

// Reference: the literal double sum over ordered node pairs of each community.
double overlapping_modularity_serial(const WeightedGraph& g, const CommunityCover& cover,
                                     const MembershipWeights& weights);

}  // namespace spix::kernels
