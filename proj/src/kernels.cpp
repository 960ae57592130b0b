#include "spix/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "spix/bounds.hpp"
#include "spix/error.hpp"
#include "spix/sparsity.hpp"
#include "spix/summation.hpp"

namespace spix::kernels {

namespace {

constexpr double kTieTolerance = 1e-12;

DegreeSurvey empty_survey() {
  DegreeSurvey s;
  s.min_si = std::numeric_limits<double>::infinity();
  s.max_si = -std::numeric_limits<double>::infinity();
  return s;
}

void observe(DegreeSurvey& s, double si, const std::vector<int>& degrees) {
  ++s.graphs;
  if (si < s.min_si - kTieTolerance) {
    s.min_si = si;
    s.argmin.assign(1, degrees);
  } else if (std::abs(si - s.min_si) <= kTieTolerance) {
    s.min_si = std::min(s.min_si, si);
    if (std::find(s.argmin.begin(), s.argmin.end(), degrees) == s.argmin.end()) s.argmin.push_back(degrees);
  }
  if (si > s.max_si + kTieTolerance) {
    s.max_si = si;
    s.argmax.assign(1, degrees);
  } else if (std::abs(si - s.max_si) <= kTieTolerance) {
    s.max_si = std::max(s.max_si, si);
    if (std::find(s.argmax.begin(), s.argmax.end(), degrees) == s.argmax.end()) s.argmax.push_back(degrees);
  }
}

void merge_extreme(double& best, std::vector<std::vector<int>>& args, double other,
                   const std::vector<std::vector<int>>& other_args, bool minimize) {
  if (other_args.empty()) return;
  const bool better = minimize ? other < best - kTieTolerance : other > best + kTieTolerance;
  if (args.empty() || better) {
    best = other;
    args = other_args;
  } else if (std::abs(other - best) <= kTieTolerance) {
    best = minimize ? std::min(best, other) : std::max(best, other);
    for (const auto& a : other_args) {
      if (std::find(args.begin(), args.end(), a) == args.end()) args.push_back(a);
    }
  }
}

void finish(DegreeSurvey& s) {
  std::sort(s.argmin.begin(), s.argmin.end());
  std::sort(s.argmax.begin(), s.argmax.end());
  if (s.graphs == 0) s.min_si = s.max_si = 0.0;
}

void check_survey_args(int n, int m) {
  if (n < 3 || n > kMaxEnumerationNodes) throw DomainError("survey requires 3 <= n <= 7");
  if (m < n - 1 || m > n * (n - 1) / 2) throw DomainError("survey requires n-1 <= m <= C(n,2)");
}

}  // namespace

DegreeSurvey survey_connected_graphs(int n, int m) {
  check_survey_args(n, m);
  const int slots = n * (n - 1) / 2;
  int slot_u[32];
  int slot_v[32];
  for (int u = 0, s = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++s) {
      slot_u[s] = u;
      slot_v[s] = v;
    }
  }
  const std::uint64_t limit = std::uint64_t{1} << slots;
  constexpr std::int64_t kChunks = 256;
  std::vector<DegreeSurvey> partial(kChunks, empty_survey());

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t chunk = 0; chunk < kChunks; ++chunk) {
    const std::uint64_t begin = limit / kChunks * static_cast<std::uint64_t>(chunk);
    const std::uint64_t end =
        chunk + 1 == kChunks ? limit : limit / kChunks * static_cast<std::uint64_t>(chunk + 1);
    DegreeSurvey& local = partial[static_cast<std::size_t>(chunk)];
    std::uint32_t adj[kMaxEnumerationNodes];
    std::vector<int> degrees(static_cast<std::size_t>(n));
    const double total = 2.0 * m;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      if (std::popcount(mask) != m) continue;
      std::fill(adj, adj + n, 0u);
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        const int s = std::countr_zero(bits);
        adj[slot_u[s]] |= 1u << slot_v[s];
        adj[slot_v[s]] |= 1u << slot_u[s];
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
      for (int v = 0; v < n; ++v) degrees[static_cast<std::size_t>(v)] = std::popcount(adj[v]);
      std::sort(degrees.begin(), degrees.end());
      double acc = 0.0;  // integer-valued, exact
      for (int i = 0; i < n; ++i) acc += (2.0 * (n - i) - 1.0) * degrees[static_cast<std::size_t>(i)];
      observe(local, 1.0 - acc / (n * total), degrees);
    }
  }

  DegreeSurvey out = empty_survey();
  for (const auto& p : partial) {
    out.graphs += p.graphs;
    merge_extreme(out.min_si, out.argmin, p.min_si, p.argmin, true);
    merge_extreme(out.max_si, out.argmax, p.max_si, p.argmax, false);
  }
  finish(out);
  return out;
}

DegreeSurvey survey_connected_graphs_serial(int n, int m) {
  check_survey_args(n, m);
  DegreeSurvey out = empty_survey();
  enumerate_connected_graphs(n, m, [&](const WeightedGraph& g) {
    const auto seq = degree_sequence(g);
    std::vector<int> degrees;
    for (double d : seq.values()) degrees.push_back(static_cast<int>(d));
    observe(out, gini_index(seq), degrees);
  });
  finish(out);
  return out;
}

namespace {

double total_both_directions(const WeightedGraph& g) {
  const double s = 2.0 * g.total_weight();
  if (!(s > 0.0)) throw UndefinedIndexError("overlapping modularity undefined: graph has no edge weight");
  return s;
}

void check_weights(const CommunityCover& cover, const MembershipWeights& w) {
  if (w.alpha.size() != cover.size()) throw DomainError("membership weights do not match the cover");
  for (std::size_t c = 0; c < cover.size(); ++c) {
    if (w.alpha[c].size() != cover.communities[c].nodes.size()) {
      throw DomainError("membership weights do not match the cover");
    }
  }
}

}  // namespace

double overlapping_modularity(const WeightedGraph& g, const CommunityCover& cover,
                              const MembershipWeights& weights) {
  const double total = total_both_directions(g);
  check_weights(cover, weights);
  std::vector<double> strength(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) strength[v] = g.strength(v);

  const auto k = static_cast<std::int64_t>(cover.size());
  std::vector<double> partial(cover.size(), 0.0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < k; ++c) {
    const auto& nodes = cover.communities[static_cast<std::size_t>(c)].nodes;
    const auto& alpha = weights.alpha[static_cast<std::size_t>(c)];
    CompensatedSum inside;
    CompensatedSum expected;
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      const NodeId i = nodes[a];
      for (const auto& nb : g.neighbors(i)) {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), nb.node);
        if (it == nodes.end() || *it != nb.node) continue;
        inside += alpha[a] * alpha[static_cast<std::size_t>(it - nodes.begin())] * nb.weight;
      }
      expected += alpha[a] * strength[i];
    }
    const double e = expected.value();
    partial[static_cast<std::size_t>(c)] = inside.value() - e * e / total;
  }
  return compensated_sum(partial) / total;
}

double overlapping_modularity_serial(const WeightedGraph& g, const CommunityCover& cover,
                                     const MembershipWeights& weights) {
  const double total = total_both_directions(g);
  check_weights(cover, weights);
  CompensatedSum q;
  for (std::size_t c = 0; c < cover.size(); ++c) {
    const auto& nodes = cover.communities[c].nodes;
    const auto& alpha = weights.alpha[c];
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      for (std::size_t b = 0; b < nodes.size(); ++b) {
        const double aij = g.weight(nodes[a], nodes[b]) * (a != b);
        q += alpha[a] * alpha[b] * (aij - g.strength(nodes[a]) * g.strength(nodes[b]) / total);
      }
    }
  }
  return q.value() / total;
}

}  // namespace spix::kernels
