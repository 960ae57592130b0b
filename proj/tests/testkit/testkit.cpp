#include "testkit.hpp"

#include <algorithm>
#include <cmath>

#include "spix/error.hpp"

namespace spix::testkit {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double gini_pairwise(std::span<const double> values) {
  if (values.empty()) throw DomainError("gini of an empty sequence");
  double sum = 0.0;
  for (double x : values) sum += x;
  if (!(sum > 0.0)) throw UndefinedIndexError("gini of an all-zero sequence");
  const auto n = static_cast<double>(values.size());
  double diff = 0.0;
  for (double a : values) {
    for (double b : values) diff += std::abs(a - b);
  }
  return diff / (2.0 * n * n * (sum / n));
}

double lorenz_area_numeric(const WeightFrequencyTable& table, std::size_t samples) {
  // Breakpoints of the exact curve.
  std::vector<double> xs{0.0};
  std::vector<double> ys{0.0};
  double mass = 0.0;
  std::uint64_t count = 0;
  for (const auto& row : table.rows()) {
    count += row.frequency;
    mass += row.weight * static_cast<double>(row.frequency);
    xs.push_back(static_cast<double>(count));
    ys.push_back(mass);
  }
  if (!(mass > 0.0)) throw UndefinedIndexError("lorenz area with zero mass");
  for (auto& x : xs) x /= static_cast<double>(count);
  for (auto& y : ys) y /= mass;

  auto curve = [&](double x) {
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    if (it == xs.end()) return ys.back();
    const auto k = static_cast<std::size_t>(it - xs.begin());
    const double t = (x - xs[k - 1]) / (xs[k] - xs[k - 1]);
    return ys[k - 1] + t * (ys[k] - ys[k - 1]);
  };

  const double h = 1.0 / static_cast<double>(samples);
  double area = 0.5 * (curve(0.0) + curve(1.0));
  for (std::size_t i = 1; i < samples; ++i) area += curve(static_cast<double>(i) * h);
  return area * h;
}

double newman_modularity(const WeightedGraph& g, std::span<const int> community) {
  const std::size_t n = g.node_count();
  std::vector<double> k(n, 0.0);
  double two_m = 0.0;
  for (const auto& e : g.edges()) {
    k[e.u] += e.weight;
    k[e.v] += e.weight;
    two_m += 2.0 * e.weight;
  }
  double q = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      if (community[i] != community[j]) continue;
      const double a = i == j ? 0.0 : g.weight(i, j);
      q += a - k[i] * k[j] / two_m;
    }
  }
  return q / two_m;
}

namespace {

std::uint64_t integral_count(double x, const char* what) {
  const double r = std::round(x);
  if (std::abs(x - r) > 1e-9 || r < 0.0) throw DomainError(std::string(what) + " is not a whole number");
  return static_cast<std::uint64_t>(r);
}

}  // namespace

WeightedGraph random_graph_with_weight_scheme(int n, const WeightScheme& scheme, std::uint64_t seed) {
  if (n < 2) throw DomainError("random graphs need n >= 2");
  Rng rng(seed);
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), 1.0});
  }
  rng.shuffle(pairs);
  const auto total = static_cast<double>(pairs.size());

  switch (scheme.kind) {
    case WeightScheme::Binary:
    case WeightScheme::AllDistinct: {
      if (!(scheme.p >= 0.0 && scheme.p < 1.0)) throw DomainError("p must lie in [0, 1)");
      const auto m = integral_count(total * (1.0 - scheme.p), "C(n,2)(1-p)");
      if (m == 0) throw DomainError("scheme leaves no edge");
      pairs.resize(m);
      if (scheme.kind == WeightScheme::AllDistinct) {
        std::vector<double> w(m);
        for (std::size_t i = 0; i < m; ++i) w[i] = static_cast<double>(i + 1) + 0.9 * rng.unit();
        rng.shuffle(w);
        for (std::size_t i = 0; i < m; ++i) pairs[i].weight = w[i];
      }
      break;
    }
    case WeightScheme::TwoWeight: {
      if (!(scheme.w1 > 0.0 && scheme.w2 > scheme.w1)) throw DomainError("two-weight scheme needs 0 < w1 < w2");
      if (pairs.size() % 2 != 0) throw DomainError("C(n,2) is odd; cannot split the pairs evenly");
      for (std::size_t i = 0; i < pairs.size(); ++i) pairs[i].weight = i < pairs.size() / 2 ? scheme.w1 : scheme.w2;
      break;
    }
  }
  return WeightedGraph(static_cast<std::size_t>(n), std::move(pairs));
}

std::vector<double> random_values(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) {
    switch (rng.below(4)) {
      case 0: x = 0.0; break;
      case 1: x = static_cast<double>(rng.between(1, 20)); break;
      case 2: x = 100.0 * rng.unit(); break;
      default: x = std::exp(8.0 * rng.unit()); break;
    }
  }
  v[rng.below(n)] += 1.0;
  return v;
}

WeightFrequencyTable random_table(Rng& rng) {
  double w = rng.below(2) == 0 ? 0.0 : rng.unit() + 0.01;
  const auto rows = static_cast<std::size_t>(rng.between(w == 0.0 ? 2 : 1, 25));
  std::vector<WeightRow> out;
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::uint64_t f = rng.below(3) == 0 ? static_cast<std::uint64_t>(rng.between(100, 5000))
                                              : static_cast<std::uint64_t>(rng.between(1, 40));
    out.push_back({w, f});
    pairs += f;
    w += rng.below(5) == 0 ? std::exp(6.0 * rng.unit()) : rng.unit() + 0.01;
  }
  return WeightFrequencyTable(std::move(out), pairs);
}

}  // namespace spix::testkit
