#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "spix/community.hpp"
#include "spix/error.hpp"
#include "spix/io.hpp"
#include "testkit.hpp"

using namespace spix;

namespace {

CommunityCover cover_of(std::vector<NodeSet> sets) {
  CommunityCover c;
  for (auto& s : sets) c.communities.push_back({std::move(s), CommunityOrigin::SplitRegular});
  return c;
}

std::vector<NodeSet> sets_of(const CommunityCover& c) {
  std::vector<NodeSet> out;
  for (const auto& x : c.communities) out.push_back(x.nodes);
  return out;
}

// Connected random graph: a random spanning tree plus extra edges.
WeightedGraph random_connected(testkit::Rng& rng, int n, double extra) {
  std::vector<Edge> e;
  std::set<std::pair<NodeId, NodeId>> seen;
  auto add = [&](NodeId u, NodeId v) {
    if (u == v || !seen.insert(std::minmax(u, v)).second) return;
    e.push_back({u, v, double(rng.between(1, 6))});
  };
  for (int v = 1; v < n; ++v) add(NodeId(rng.below(std::uint64_t(v))), NodeId(v));
  const auto more = std::size_t(extra * n);
  for (std::size_t i = 0; i < more; ++i) add(NodeId(rng.below(std::uint64_t(n))), NodeId(rng.below(std::uint64_t(n))));
  return WeightedGraph(std::size_t(n), e);
}

bool induced_connected(const WeightedGraph& g, const NodeSet& nodes) {
  return is_connected(to_graph(induced_subgraph(g, nodes)));
}

}  // namespace

TEST_CASE("split on a star takes the center first") {
  auto parts = split(fixtures::star(6));
  REQUIRE(parts.stars.size() == 1);
  CHECK(parts.stars[0] == NodeSet{0, 1, 2, 3, 4, 5});
  CHECK(parts.centers[0] == 0);
  // Deleting only the center leaves five isolated leaves, each regular.
  CHECK(parts.regular.size() == 5);

  auto r = detect(fixtures::star(6));
  REQUIRE(r.cover.size() == 1);
  CHECK(r.cover.communities[0].nodes == NodeSet{0, 1, 2, 3, 4, 5});
}

TEST_CASE("split picks the heavy bridge endpoint") {
  WeightedGraph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3, 10.0}});
  TieLog ties;
  auto parts = split(g, &ties);
  REQUIRE_FALSE(parts.centers.empty());
  CHECK(parts.centers[0] == 2);
  CHECK(parts.stars[0] == NodeSet{0, 1, 2, 3});
  REQUIRE_FALSE(ties.empty());
  CHECK(ties[0].find("smallest node id") != std::string::npos);
}

TEST_CASE("split prefers the higher clustering coefficient on a strength tie") {
  // Nodes 0 and 4 both have strength 3; only 4 has a linked pair of neighbors.
  WeightedGraph g(8, {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 6}, {4, 7}, {5, 6, 0.5}, {3, 5}});
  TieLog ties;
  auto parts = split(g, &ties);
  CHECK(parts.centers[0] == 4);
  REQUIRE_FALSE(ties.empty());
  CHECK(ties[0].find("clustering coefficient") != std::string::npos);
}

TEST_CASE("a graph regular on entry is one regular component") {
  auto parts = split(fixtures::cycle(7));
  CHECK(parts.stars.empty());
  REQUIRE(parts.regular.size() == 1);
  CHECK(parts.regular[0].size() == 7);
  auto r = detect(fixtures::cycle(7));
  REQUIRE(r.cover.size() == 1);
  CHECK(r.cover.communities[0].origin == CommunityOrigin::SplitRegular);
  CHECK(detect(WeightedGraph(1, {})).cover.size() == 1);
}

TEST_CASE("split preconditions") {
  CHECK_THROWS_AS(split(WeightedGraph(3, {{0, 1}})), DomainError);
  CHECK_THROWS_AS(detect(WeightedGraph()), DomainError);
}

TEST_CASE("reconstruct") {
  SUBCASE("no regular components keeps the stars") {
    auto g = fixtures::path(5);
    SplitResult parts{{{0, 1, 2}, {2, 3, 4}}, {1, 3}, {}};
    auto c = reconstruct(g, parts);
    CHECK(sets_of(c) == std::vector<NodeSet>{{0, 1, 2}, {2, 3, 4}});
    for (const auto& x : c.communities) CHECK(x.origin == CommunityOrigin::LeftoverStar);
  }
  SUBCASE("a single connectable component is absorbed") {
    auto g = fixtures::path(5);
    SplitResult parts{{{0, 1, 2}}, {1}, {{3, 4}}};
    auto c = reconstruct(g, parts);
    REQUIRE(c.size() == 1);
    CHECK(c.communities[0].nodes == NodeSet{0, 1, 2, 3, 4});
    CHECK(c.communities[0].origin == CommunityOrigin::SplitStar);
  }
  SUBCASE("the more even union wins") {
    WeightedGraph g(7, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6, 20.0}});
    SplitResult parts{{{0, 1, 4}}, {0}, {{2, 3}, {5, 6}}};
    auto c = reconstruct(g, parts);
    CHECK(sets_of(c) == std::vector<NodeSet>{{0, 1, 2, 3, 4}, {5, 6}});
  }
  SUBCASE("mirror-image unions fall back to node ids") {
    WeightedGraph g(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}});
    SplitResult parts{{{0, 1, 2}}, {0}, {{3}, {4}}};
    TieLog ties;
    auto c = reconstruct(g, parts, &ties);
    CHECK(sets_of(c) == std::vector<NodeSet>{{0, 1, 2, 3}, {4}});
    REQUIRE(ties.size() == 1);
    CHECK(ties[0].find("smallest node id") != std::string::npos);
  }
}

TEST_CASE("clean_candidates") {
  auto g = fixtures::path(6);
  SUBCASE("disjoint full cover is untouched") {
    auto c = clean_candidates(g, cover_of({{0, 1, 2, 3}, {4, 5}}));
    // {4,5} touches nothing larger, so it survives the small-candidate fold.
    CHECK(sets_of(c) == std::vector<NodeSet>{{0, 1, 2, 3}, {4, 5}});
  }
  SUBCASE("proper subsets and duplicates go") {
    auto c = clean_candidates(g, cover_of({{1, 2, 3}, {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}}));
    CHECK(sets_of(c) == std::vector<NodeSet>{{0, 1, 2, 3, 4, 5}});
  }
  SUBCASE("small overlapping candidates fold into the largest host") {
    auto c = clean_candidates(g, cover_of({{0, 1, 2, 3}, {3, 4}, {4, 5}}));
    CHECK(sets_of(c) == std::vector<NodeSet>{{0, 1, 2, 3, 4, 5}});
    CHECK(c.communities[0].origin == CommunityOrigin::Merged);
  }
  SUBCASE("singletons follow their heaviest edge") {
    WeightedGraph h(4, {{0, 1}, {1, 2}, {2, 3, 5.0}});
    auto c = clean_candidates(h, cover_of({{0, 1, 2}, {3}}));
    CHECK(sets_of(c) == std::vector<NodeSet>{{0, 1, 2, 3}});
  }
  SUBCASE("redundant candidates are dropped smallest first") {
    WeightedGraph h(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
    auto c = clean_candidates(h, cover_of({{0, 1, 2, 3, 4}, {3, 4, 5, 6}, {4, 5, 6, 7}}));
    CHECK(sets_of(c) == std::vector<NodeSet>{{0, 1, 2, 3, 4}, {4, 5, 6, 7}});
  }
}

TEST_CASE("overlap_fraction denominators") {
  NodeSet a{0, 1, 2, 3};
  NodeSet b{2, 3, 4, 5, 6, 7};
  CHECK(overlap_fraction(a, b, OverlapDenominator::Min) == 0.5);
  CHECK(overlap_fraction(a, b, OverlapDenominator::Max) == doctest::Approx(2.0 / 6.0));
  CHECK(overlap_fraction(a, b, OverlapDenominator::Union) == doctest::Approx(2.0 / 8.0));
  CHECK_THROWS_AS(overlap_fraction({}, b, OverlapDenominator::Min), DomainError);
}

TEST_CASE("merge_overlapping") {
  DetectionConfig cfg;
  cfg.merge_threshold = 0.5;
  auto merged = merge_overlapping(cover_of({{0, 1, 2, 3}, {2, 3, 4, 5, 6, 7}, {8, 9}}), cfg);
  CHECK(sets_of(merged) == std::vector<NodeSet>{{0, 1, 2, 3, 4, 5, 6, 7}, {8, 9}});

  cfg.denominator = OverlapDenominator::Union;
  auto kept = merge_overlapping(cover_of({{0, 1, 2, 3}, {2, 3, 4, 5, 6, 7}}), cfg);
  CHECK(kept.size() == 2);

  cfg.merge_threshold = 0.0;
  CHECK_THROWS_AS(merge_overlapping(cover_of({{0}}), cfg), DomainError);
}

TEST_CASE("final_tune without merging stops after cleaning") {
  auto g = fixtures::path(8);
  auto candidates = cover_of({{0, 1, 2, 3, 4}, {3, 4, 5, 6, 7}});
  DetectionConfig cfg;
  cfg.merge_overlaps = false;
  CHECK(final_tune(g, candidates, cfg).size() == 2);
  cfg.merge_overlaps = true;
  cfg.merge_threshold = 0.4;
  CHECK(final_tune(g, candidates, cfg).size() == 1);
  CHECK_THROWS_AS(final_tune(g, CommunityCover{}, cfg), DomainError);
}

TEST_CASE("detection invariants on random connected graphs") {
  testkit::Rng rng(2024);
  for (int t = 0; t < 60; ++t) {
    const int n = int(rng.between(2, 60));
    auto g = random_connected(rng, n, 2.0 * rng.unit());
    DetectionConfig cfg;
    cfg.merge_threshold = 0.2 + 0.8 * rng.unit();
    auto r = detect(g, cfg);

    std::vector<int> seen(std::size_t(n), 0);
    for (const auto& s : r.parts.stars) {
      for (NodeId v : s) seen[v] = 1;
    }
    for (const auto& s : r.parts.regular) {
      for (NodeId v : s) seen[v] = 1;
    }
    CHECK(std::count(seen.begin(), seen.end(), 1) == n);
    CHECK(r.parts.centers.size() <= std::size_t(n));

    for (const auto& c : r.reconstructed.communities) CHECK(induced_connected(g, c.nodes));

    std::fill(seen.begin(), seen.end(), 0);
    for (const auto& c : r.cover.communities) {
      for (NodeId v : c.nodes) seen[v] = 1;
    }
    CHECK(std::count(seen.begin(), seen.end(), 1) == n);

    const auto& cs = r.cover.communities;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (i == j) continue;
        CHECK_FALSE(std::includes(cs[j].nodes.begin(), cs[j].nodes.end(), cs[i].nodes.begin(), cs[i].nodes.end()));
      }
    }

    auto again = detect(g, cfg);
    CHECK(sets_of(again.cover) == sets_of(r.cover));
    CHECK(again.ties == r.ties);
  }
}

TEST_CASE("low strength sparsity warns but still detects") {
  DetectionConfig cfg;
  cfg.min_strength_sparsity = 0.9;
  auto r = detect(fixtures::path(6), cfg);
  REQUIRE(r.warnings.size() == 1);
  CHECK_FALSE(r.cover.empty());
}

TEST_CASE("Les Miserables cover") {
  auto g = load_graph(SPIX_TEST_DATA_DIR "/lesmis.gml", GraphFormat::Gml);
  auto r = detect(g);
  CHECK(r.candidates.size() == 9);
  REQUIRE(r.cover.size() == 5);
  const auto largest = std::max_element(r.cover.communities.begin(), r.cover.communities.end(),
                                        [](const Community& a, const Community& b) { return a.size() < b.size(); });
  std::vector<std::string> names;
  for (NodeId v : largest->nodes) names.push_back(g.label(v));
  CHECK(std::find(names.begin(), names.end(), "Valjean") != names.end());
  CHECK(std::find(names.begin(), names.end(), "Javert") != names.end());
}
