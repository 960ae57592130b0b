#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "spix/graph.hpp"
#include "spix/sequence.hpp"

namespace spix {

// Degree sparsity (T1 = T) of the star K_{1,n-1}: (n-2)/(2n). The largest
// value over connected graphs with n-1 edges. Requires n >= 3.
double star_si(int n);

// Degree sparsity (T1 = T) of the Hamiltonian path: (n-2)/(n(n-1)). The
// smallest value over connected graphs with n-1 edges. Requires n >= 3.
double path_si(int n);

// Edge-count band k (1 <= k <= n-1):
//   lo = (n-1) + (n-2) + ... + (n-k) = k(2n-k-1)/2,  hi = lo + (n-k-1).
// Consecutive bands share endpoints; band n-1 is the single point C(n,2).
struct EdgeCountInterval {
  int n = 0;
  int k = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

EdgeCountInterval edge_count_interval(int n, int k);

// Band holding m. On a shared endpoint the later band is chosen, since its
// upper value is the tight one there.
EdgeCountInterval interval_for_edges(int n, std::int64_t m);

// {k repeated n-k times, n-1 repeated k times}: the degree sequence with the
// highest sparsity among connected graphs with lo(k) edges.
OrderedSequence max_sparsity_degree_sequence(int n, int k);

// (n-k)(n-k-1) / (n(2n-k-1)), the sparsity of the sequence above under T1 = k(2n-k-1).
double max_sparsity_value(int n, int k);

struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
};

// For n-1 <= m <= C(n,2), k is the largest band with lo(k) <= m and
// upper = max_sparsity_value(n, k), attained at m = lo(k). It is meant as a
// ceiling on the degree sparsity of connected graphs with m edges but is not
// one everywhere: at n = 6, m = 9 degrees 1,2,3,3,4,5 reach 0.2407 > 2/9.
// lower = max_sparsity_value(n, k+1) is the highest sparsity reachable at the
// band's far end hi(k). It is not a lower bound on every graph in the band:
// the Hamiltonian path at m = n-1 falls below it.
BoundPair degree_sparsity_bracket(int n, std::int64_t m);

// Sparsity of a {0,1}-weighted graph realizing a fraction 1-p of all pairs: p.
double binary_weight_si(double p);

// For n > 2 and pairwise distinct positive weights on a fraction 1-p of the
// pairs: p <= SI <= 1 - 2/(n(n-1)). C(n,2)(1-p) must be a positive integer
// (within 1e-9).
BoundPair distinct_weight_bounds(int n, double p);

// Complete graph with half the edges at w1 and half at w2 (0 < w1 < w2):
// (w2 - w1) / (2 (w1 + w2)).
double two_weight_complete_si(double w1, double w2);

// Largest n accepted by the exhaustive enumerators (C(7,2) = 21 edge slots).
inline constexpr int kMaxEnumerationNodes = 7;

// Calls `visit` once for every labeled connected simple graph on n nodes with
// exactly m unit-weight edges. Edge slots are bits of a mask in (u, v)
// lexicographic order; masks are visited in increasing order. With
// chunk_count > 1 only masks in the chunk_index-th of chunk_count contiguous
// mask ranges are visited, so workers can take disjoint chunks.
// Requires 3 <= n <= kMaxEnumerationNodes.
void enumerate_connected_graphs(int n, int m, const std::function<void(const WeightedGraph&)>& visit,
                                std::size_t chunk_index = 0, std::size_t chunk_count = 1);

}  // namespace spix
