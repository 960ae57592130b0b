#include "spix/bounds.hpp"

#include <bit>
#include <cmath>
#include <utility>
#include <vector>

#include "spix/error.hpp"

namespace spix {

double star_si(int n) {
  if (n < 3) throw DomainError("star_si requires n >= 3");
  return static_cast<double>(n - 2) / (2.0 * n);
}

double path_si(int n) {
  if (n < 3) throw DomainError("path_si requires n >= 3");
  return static_cast<double>(n - 2) / (static_cast<double>(n) * (n - 1));
}

EdgeCountInterval edge_count_interval(int n, int k) {
  if (n < 3) throw DomainError("edge-count bands require n >= 3");
  if (k < 1 || k > n - 1) throw DomainError("band index k must satisfy 1 <= k <= n-1");
  const std::int64_t lo = static_cast<std::int64_t>(k) * (2 * n - k - 1) / 2;
  return {n, k, lo, lo + (n - k - 1)};
}

EdgeCountInterval interval_for_edges(int n, std::int64_t m) {
  if (n < 3) throw DomainError("edge-count bands require n >= 3");
  const auto pairs = static_cast<std::int64_t>(pair_count(static_cast<std::uint64_t>(n)));
  if (m < n - 1 || m > pairs) {
    throw DomainError("edge count of a connected graph must lie in [n-1, C(n,2)]");
  }
  for (int k = n - 1; k >= 1; --k) {
    auto band = edge_count_interval(n, k);
    if (band.lo <= m) return band;
  }
  return edge_count_interval(n, 1);  // unreachable: lo(1) = n-1 <= m
}

OrderedSequence max_sparsity_degree_sequence(int n, int k) {
  if (n < 3) throw DomainError("max_sparsity_degree_sequence requires n >= 3");
  if (k < 1 || k > n - 1) throw DomainError("max_sparsity_degree_sequence requires 1 <= k <= n-1");
  std::vector<double> d;
  d.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n - k; ++i) d.push_back(k);
  for (int i = 0; i < k; ++i) d.push_back(n - 1);
  return OrderedSequence(std::move(d));
}

double max_sparsity_value(int n, int k) {
  if (n < 3) throw DomainError("max_sparsity_value requires n >= 3");
  if (k < 1 || k > n) throw DomainError("max_sparsity_value requires 1 <= k <= n");
  const double nn = n;
  return (nn - k) * (nn - k - 1.0) / (nn * (2.0 * nn - k - 1.0));
}

BoundPair degree_sparsity_bracket(int n, std::int64_t m) {
  const auto band = interval_for_edges(n, m);
  return {max_sparsity_value(n, band.k + 1), max_sparsity_value(n, band.k)};
}

double binary_weight_si(double p) {
  if (!(p >= 0.0 && p < 1.0)) throw DomainError("binary_weight_si requires 0 <= p < 1");
  return p;
}

BoundPair distinct_weight_bounds(int n, double p) {
  if (n <= 2) throw DomainError("distinct_weight_bounds requires n > 2");
  if (!(p >= 0.0 && p < 1.0)) throw DomainError("distinct_weight_bounds requires 0 <= p < 1");
  const double distinct = static_cast<double>(pair_count(static_cast<std::uint64_t>(n))) * (1.0 - p);
  if (std::abs(distinct - std::round(distinct)) > 1e-9 || std::round(distinct) < 1.0) {
    throw DomainError("C(n,2)(1-p) must be a positive integer");
  }
  const double nn = n;
  return {p, 1.0 - 2.0 / (nn * (nn - 1.0))};
}

double two_weight_complete_si(double w1, double w2) {
  if (!(w1 > 0.0 && w2 > w1) || !std::isfinite(w2)) {
    throw DomainError("two_weight_complete_si requires 0 < w1 < w2");
  }
  return (w2 - w1) / (2.0 * (w1 + w2));
}

void enumerate_connected_graphs(int n, int m, const std::function<void(const WeightedGraph&)>& visit,
                                std::size_t chunk_index, std::size_t chunk_count) {
  if (n < 3) throw DomainError("enumeration requires n >= 3");
  if (n > kMaxEnumerationNodes) {
    throw DomainError("enumeration refused for n > " + std::to_string(kMaxEnumerationNodes));
  }
  if (chunk_count == 0 || chunk_index >= chunk_count) throw DomainError("bad enumeration chunk");
  const int slots = n * (n - 1) / 2;
  if (m < n - 1 || m > slots) return;

  std::vector<std::pair<NodeId, NodeId>> slot_pair;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slot_pair.emplace_back(u, v);
  }

  const std::uint64_t limit = std::uint64_t{1} << slots;
  const std::uint64_t begin = limit / chunk_count * chunk_index;
  const std::uint64_t end = chunk_index + 1 == chunk_count ? limit : limit / chunk_count * (chunk_index + 1);

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  std::vector<Edge> edges;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    if (std::popcount(mask) != m) continue;
    std::fill(adj.begin(), adj.end(), 0u);
    for (int s = 0; s < slots; ++s) {
      if (mask >> s & 1u) {
        adj[slot_pair[s].first] |= 1u << slot_pair[s].second;
        adj[slot_pair[s].second] |= 1u << slot_pair[s].first;
      }
    }
    std::uint32_t reached = 1u;
    std::uint32_t frontier = 1u;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & ~reached;
      reached |= next;
    }
    if (reached != (1u << n) - 1u) continue;

    edges.clear();
    for (int s = 0; s < slots; ++s) {
      if (mask >> s & 1u) edges.push_back({slot_pair[s].first, slot_pair[s].second, 1.0});
    }
    visit(WeightedGraph(static_cast<std::size_t>(n), edges));
  }
}

}  // namespace spix
