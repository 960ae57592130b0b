#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "spix/error.hpp"
#include "spix/io.hpp"
#include "spix/kernels.hpp"
#include "spix/quality.hpp"
#include "testkit.hpp"

using namespace spix;
using doctest::Approx;

namespace {

CommunityCover cover_of(std::vector<NodeSet> sets) {
  CommunityCover c;
  for (auto& s : sets) c.communities.push_back({std::move(s), CommunityOrigin::SplitRegular});
  return c;
}

WeightedGraph random_graph(testkit::Rng& rng, int n, double density, bool unit) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.unit() < density) e.push_back({NodeId(u), NodeId(v), unit ? 1.0 : 0.1 + 9.0 * rng.unit()});
    }
  }
  if (e.empty()) e.push_back({0, 1, 1.0});
  return WeightedGraph(std::size_t(n), e);
}

CommunityCover random_cover(testkit::Rng& rng, int n) {
  const auto k = rng.between(1, 6);
  std::vector<NodeSet> sets(static_cast<std::size_t>(k));
  for (int v = 0; v < n; ++v) {
    sets[rng.below(std::uint64_t(k))].push_back(NodeId(v));
    if (rng.unit() < 0.2) sets[rng.below(std::uint64_t(k))].push_back(NodeId(v));
  }
  std::vector<NodeSet> out;
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty()) out.push_back(s);
  }
  return cover_of(out);
}

}  // namespace

TEST_CASE("cluster_stability_index") {
  CHECK(cluster_stability_index(cover_of({{0, 1, 2}, {0, 1, 2}})) == 1.0);
  CHECK(cluster_stability_index(cover_of({{0, 1}, {2, 3}, {4}})) == 0.0);
  // {0,1,2,3} shares half with {2,3,4,5,6,7}; that one shares a third back.
  CHECK(cluster_stability_index(cover_of({{0, 1, 2, 3}, {2, 3, 4, 5, 6, 7}})) == Approx((0.5 + 2.0 / 6.0) / 2));
  CHECK_THROWS_AS(cluster_stability_index(cover_of({{0, 1}})), DomainError);

  testkit::Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    auto c = random_cover(rng, 30);
    if (c.size() < 2) continue;
    const double csi = cluster_stability_index(c);
    CHECK(csi >= 0.0);
    CHECK(csi <= 1.0);
    auto shuffled = c;
    rng.shuffle(shuffled.communities);
    CHECK(cluster_stability_index(shuffled) == Approx(csi).epsilon(1e-14));
  }
}

TEST_CASE("membership_weights") {
  WeightedGraph g(3, {{0, 1, 3.0}, {0, 2, 1.0}});
  auto cover = cover_of({{0, 1}, {0, 2}});
  auto w = membership_weights(g, cover);
  CHECK(w.of(cover, 0, 0) == 0.75);
  CHECK(w.of(cover, 1, 0) == 0.25);
  CHECK(w.of(cover, 0, 1) == 1.0);
  CHECK(w.of(cover, 0, 2) == 0.0);

  auto sym = cover_of({{0, 1}, {0, 2}});
  auto ws = membership_weights(fixtures::star(3), sym);
  CHECK(ws.of(sym, 0, 0) == 0.5);

  // Zero in-community strength everywhere: uniform split.
  auto lonely = cover_of({{0, 1}, {2}, {0, 2}});
  auto wl = membership_weights(WeightedGraph(3, {{0, 1}}), lonely);
  CHECK(wl.of(lonely, 1, 2) == 0.5);
  CHECK(wl.of(lonely, 2, 2) == 0.5);

  testkit::Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    auto h = random_graph(rng, 25, 0.3, false);
    auto c = random_cover(rng, 25);
    auto a = membership_weights(h, c);
    for (NodeId v = 0; v < 25; ++v) {
      double sum = 0.0;
      bool member = false;
      for (std::size_t k = 0; k < c.size(); ++k) {
        const double x = a.of(c, k, v);
        CHECK(x >= 0.0);
        CHECK(x <= 1.0);
        sum += x;
        member = member || std::binary_search(c.communities[k].nodes.begin(), c.communities[k].nodes.end(), v);
      }
      if (member) CHECK(sum == Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("overlapping_modularity of the whole-graph cover is zero") {
  testkit::Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const int n = int(rng.between(2, 40));
    auto g = random_graph(rng, n, rng.unit(), false);
    NodeSet all;
    for (int v = 0; v < n; ++v) all.push_back(NodeId(v));
    CHECK(std::abs(overlapping_modularity(g, cover_of({all}))) <= 1e-12);
  }
}

TEST_CASE("overlapping_modularity reduces to standard modularity on partitions") {
  testkit::Rng rng(34);
  for (int t = 0; t < 100; ++t) {
    const int n = int(rng.between(2, 40));
    auto g = random_graph(rng, n, rng.unit(), true);
    const auto k = int(rng.between(1, 5));
    std::vector<int> label(static_cast<std::size_t>(n));
    std::vector<NodeSet> sets(static_cast<std::size_t>(k));
    for (int v = 0; v < n; ++v) {
      label[std::size_t(v)] = int(rng.below(std::uint64_t(k)));
      sets[std::size_t(label[std::size_t(v)])].push_back(NodeId(v));
    }
    std::vector<NodeSet> nonempty;
    for (auto& s : sets) {
      if (!s.empty()) nonempty.push_back(s);
    }
    const double q = overlapping_modularity(g, cover_of(nonempty));
    CHECK(std::abs(q - testkit::newman_modularity(g, label)) <= 1e-10);
    CHECK(q <= 1.0);
  }
  CHECK_THROWS_AS(overlapping_modularity(WeightedGraph(2, {}), cover_of({{0, 1}})), UndefinedIndexError);
}

TEST_CASE("modularity kernels agree") {
  testkit::Rng rng(55);
  for (int t = 0; t < 100; ++t) {
    const int n = int(rng.between(2, 60));
    auto g = random_graph(rng, n, rng.unit(), false);
    auto c = random_cover(rng, n);
    auto w = membership_weights(g, c);
    const double parallel = kernels::overlapping_modularity(g, c, w);
    const double serial = kernels::overlapping_modularity_serial(g, c, w);
    CHECK(std::abs(parallel - serial) <= 1e-12);
  }
}

TEST_CASE("Les Miserables quality values") {
  auto g = load_graph(SPIX_TEST_DATA_DIR "/lesmis.gml", GraphFormat::Gml);
  auto r = detect(g);
  CHECK(cluster_stability_index(r.cover) == Approx(0.36).epsilon(0.05 / 0.36));
  // Regression pins for the literal double sum.
  CHECK(overlapping_modularity(g, r.cover) == Approx(0.254045).epsilon(1e-5));
  CHECK(overlapping_modularity(g, r.candidates) == Approx(0.192557).epsilon(1e-5));
}
