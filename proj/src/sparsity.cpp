#include "spix/sparsity.hpp"

#include <cmath>

#include "spix/error.hpp"
#include "spix/summation.hpp"

namespace spix {

namespace {

// Slack for comparing a resolved T1 with an observed total that was summed
// in a different order.
constexpr double kBasisSlack = 1e-12;

void check_basis(double total, double t1) {
  if (!(t1 > 0.0) || !std::isfinite(t1)) throw DomainError("t1 must be positive and finite");
  if (t1 < total * (1.0 - kBasisSlack)) {
    throw BasisTooSmallError("t1 is smaller than the observed total");
  }
}

}  // namespace

std::string_view to_string(Basis b) noexcept {
  switch (b) {
    case Basis::ObservedTotal: return "observed-total";
    case Basis::PotentialDegree: return "potential-degree";
    case Basis::NodeMaximum: return "node-maximum";
    case Basis::EdgeMaxWeight: return "edge-max-weight";
  }
  return "unknown";
}

std::string_view to_string(Quantity q) noexcept {
  switch (q) {
    case Quantity::Degree: return "degree";
    case Quantity::Strength: return "strength";
    case Quantity::EdgeWeight: return "edge-weight";
  }
  return "unknown";
}

LorenzCurve lorenz_curve(const OrderedSequence& seq, double t1) {
  if (seq.empty()) throw DomainError("lorenz curve of an empty sequence");
  check_basis(seq.total(), t1);
  const auto n = static_cast<double>(seq.size());
  LorenzCurve curve;
  curve.points.reserve(seq.size() + 1);
  curve.points.push_back({0.0, 0.0});
  CompensatedSum cum;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    cum += seq[i];
    curve.points.push_back({static_cast<double>(i + 1) / n, cum.value() / t1});
  }
  curve.points.back().x = 1.0;
  return curve;
}

LorenzCurve lorenz_curve(const WeightFrequencyTable& table, double t1) {
  if (table.pair_total() == 0) throw DomainError("lorenz curve of an empty table");
  check_basis(table.weighted_total(), t1);
  const auto pairs = static_cast<double>(table.pair_total());
  LorenzCurve curve;
  curve.points.push_back({0.0, 0.0});
  std::uint64_t cum_f = 0;
  CompensatedSum cum_w;
  for (const auto& row : table.rows()) {
    cum_f += row.frequency;
    cum_w += row.weight * static_cast<double>(row.frequency);
    curve.points.push_back({static_cast<double>(cum_f) / pairs, cum_w.value() / t1});
  }
  curve.points.back().x = 1.0;
  return curve;
}

double sparsity_index(const OrderedSequence& seq, double t1) {
  if (seq.empty()) throw DomainError("sparsity index of an empty sequence");
  check_basis(seq.total(), t1);
  const auto n = static_cast<double>(seq.size());
  CompensatedSum acc;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    // 1-based rank r = i + 1, coefficient n - r + 1/2
    acc += (n - static_cast<double>(i) - 0.5) * seq[i];
  }
  return 1.0 - 2.0 / (n * t1) * acc.value();
}

double gini_index(const OrderedSequence& seq) {
  if (seq.empty()) throw DomainError("gini index of an empty sequence");
  if (!(seq.total() > 0.0)) throw UndefinedIndexError("gini index undefined: total mass is zero");
  return sparsity_index(seq, seq.total());
}

double resolve_t1(const WeightedGraph& g, Quantity q, Basis basis) {
  const auto n = static_cast<double>(g.node_count());
  switch (q) {
    case Quantity::Degree: {
      switch (basis) {
        case Basis::ObservedTotal: return 2.0 * static_cast<double>(g.edge_count());
        case Basis::PotentialDegree: return n * (n - 1.0);
        case Basis::NodeMaximum: return n * degree_sequence(g).max();
        case Basis::EdgeMaxWeight: break;
      }
      break;
    }
    case Quantity::Strength: {
      switch (basis) {
        case Basis::ObservedTotal: return strength_sequence(g).total();
        case Basis::PotentialDegree: {
          double w_max = 0.0;
          for (const auto& e : g.edges()) w_max = std::max(w_max, e.weight);
          return n * (n - 1.0) * w_max;
        }
        case Basis::NodeMaximum: return n * strength_sequence(g).max();
        case Basis::EdgeMaxWeight: break;
      }
      break;
    }
    case Quantity::EdgeWeight: {
      double w_max = 0.0;
      for (const auto& e : g.edges()) w_max = std::max(w_max, e.weight);
      switch (basis) {
        case Basis::ObservedTotal: return g.total_weight();
        case Basis::EdgeMaxWeight: return static_cast<double>(g.edge_count()) * w_max;
        case Basis::PotentialDegree:
        case Basis::NodeMaximum: break;
      }
      break;
    }
  }
  throw DomainError(std::string("basis ") + std::string(to_string(basis)) + " does not apply to " +
                    std::string(to_string(q)) + " sequences");
}

SparsityReport sparsity_index_degrees(const WeightedGraph& g, Basis basis) {
  if (g.node_count() < 2) throw DomainError("degree sparsity needs at least 2 nodes");
  const double t1 = resolve_t1(g, Quantity::Degree, basis);
  const auto seq = degree_sequence(g);
  if (basis == Basis::ObservedTotal && !(seq.total() > 0.0)) {
    throw UndefinedIndexError("degree gini undefined: graph has no edges");
  }
  if (!(t1 > 0.0)) throw UndefinedIndexError("degree sparsity undefined: graph has no edges");
  return {sparsity_index(seq, t1), basis, Quantity::Degree, t1};
}

SparsityReport sparsity_index_strengths(const WeightedGraph& g, Basis basis) {
  if (g.edge_count() == 0) throw DomainError("strength sparsity needs at least one edge");
  const double t1 = resolve_t1(g, Quantity::Strength, basis);
  return {sparsity_index(strength_sequence(g), t1), basis, Quantity::Strength, t1};
}

SparsityReport sparsity_index_edge_weights(const WeightFrequencyTable& table, Basis basis) {
  if (!(table.weighted_total() > 0.0)) {
    throw UndefinedIndexError("edge-weight sparsity undefined: total weight is zero");
  }
  double t1 = 0.0;
  switch (basis) {
    case Basis::ObservedTotal: t1 = table.weighted_total(); break;
    case Basis::EdgeMaxWeight:
      t1 = static_cast<double>(table.positive_count()) * table.max_weight();
      break;
    case Basis::PotentialDegree:
    case Basis::NodeMaximum:
      throw DomainError("edge-weight sparsity supports observed-total and edge-max-weight bases");
  }
  check_basis(table.weighted_total(), t1);

  const auto rows = table.rows();
  std::uint64_t above = 0;  // sum of f_l over l > j
  CompensatedSum acc;
  for (std::size_t j = rows.size(); j-- > 0;) {
    const auto f = static_cast<double>(rows[j].frequency);
    acc += rows[j].weight * f * (f + 2.0 * static_cast<double>(above));
    above += rows[j].frequency;
  }
  const double value = 1.0 - acc.value() / (static_cast<double>(table.pair_total()) * t1);
  return {value, basis, Quantity::EdgeWeight, t1};
}

double lorenz_area(const WeightFrequencyTable& table) {
  const double total = table.weighted_total();
  if (!(total > 0.0)) throw UndefinedIndexError("lorenz area undefined: total weight is zero");
  const auto pairs = static_cast<double>(table.pair_total());
  CompensatedSum area;
  CompensatedSum below;  // sum of w_j f_j over rows already passed
  for (const auto& row : table.rows()) {
    const auto f = static_cast<double>(row.frequency);
    const double mass = row.weight * f;
    // The first row is a triangle (below == 0), later rows are trapezia.
    area += 0.5 * (f / pairs) * ((2.0 * below.value() + mass) / total);
    below += mass;
  }
  return area.value();
}

}  // namespace spix
