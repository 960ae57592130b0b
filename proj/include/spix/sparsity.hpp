#pragma once

#include <string_view>
#include <vector>

#include "spix/graph.hpp"
#include "spix/sequence.hpp"
#include "spix/weight_table.hpp"

namespace spix {

// Reference total T1 against which a sparsity index is measured. Never
// inferred: degree, strength, and edge-weight indices use different
// conventions and the caller picks one explicitly.
enum class Basis {
  ObservedTotal,    // T1 = T, the index is the Gini index
  PotentialDegree,  // T1 = n(n-1) for degrees; n(n-1) * w_max for strengths
  NodeMaximum,      // T1 = n * max value (n * s_max for strengths)
  EdgeMaxWeight,    // T1 = |E| * w_max, edge weights only
};

enum class Quantity { Degree, Strength, EdgeWeight };

std::string_view to_string(Basis b) noexcept;
std::string_view to_string(Quantity q) noexcept;

struct SparsityReport {
  double value = 0.0;
  Basis basis = Basis::ObservedTotal;
  Quantity quantity = Quantity::Degree;
  double t1 = 0.0;
};

struct LorenzPoint {
  double x = 0.0;
  double y = 0.0;
};

// Piecewise-linear Lorenz curve starting at (0, 0). The last point has x = 1
// and y = observed total / t1.
struct LorenzCurve {
  std::vector<LorenzPoint> points;
};

// n+1 points, point i at (i/n, c_i / t1).
LorenzCurve lorenz_curve(const OrderedSequence& seq, double t1);

// One breakpoint per table row: x = cumulative frequency / C(n,2).
LorenzCurve lorenz_curve(const WeightFrequencyTable& table, double t1);

// 1 - 2/(n t1) * sum_i (n - i + 1/2) d_i over the ascending sequence.
// Throws BasisTooSmallError when t1 < total, DomainError when empty or t1 <= 0.
double sparsity_index(const OrderedSequence& seq, double t1);

// sparsity_index(seq, seq.total()). UndefinedIndexError on an all-zero sequence.
double gini_index(const OrderedSequence& seq);

// T1 for a per-node sequence of g under `basis`.
double resolve_t1(const WeightedGraph& g, Quantity q, Basis basis);

SparsityReport sparsity_index_degrees(const WeightedGraph& g, Basis basis);
SparsityReport sparsity_index_strengths(const WeightedGraph& g, Basis basis = Basis::NodeMaximum);

// Edge-weight sparsity over the zero-padded table:
//   1 - 1/(C(n,2) T1) * sum_j w_j f_j (f_j + 2 sum_{l>j} f_l).
// With the default basis T1 is the observed weighted total and the result is
// the Gini index of the edge weights. EdgeMaxWeight uses T1 = |E| * w_max.
SparsityReport sparsity_index_edge_weights(const WeightFrequencyTable& table,
                                           Basis basis = Basis::ObservedTotal);

// Area under the edge-weight Lorenz curve (T1 = weighted total), summed as a
// leading triangle plus one trapezium per further row.
double lorenz_area(const WeightFrequencyTable& table);

}  // namespace spix
