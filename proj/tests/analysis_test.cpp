#include <cmath>

#include <gtest/gtest.h>

#include "distrecon/analysis.hpp"
#include "distrecon/generators.hpp"
#include "test_support.hpp"

namespace distrecon {
namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::bad_config;
}

// Signature-distinctness from Floyd-Warshall rows, independent of analysis.hpp.
bool resolves_by_signature(const std::vector<std::vector<Distance>>& d, const std::vector<Vertex>& subset) {
  std::set<std::vector<Distance>> seen;
  for (std::size_t v = 0; v < d.size(); ++v) {
    std::vector<Distance> sig;
    for (Vertex u : subset) sig.push_back(d[u][v]);
    if (!seen.insert(sig).second) return false;
  }
  return true;
}

std::size_t brute_metric_dimension(const Graph& g) {
  const auto d = testing::floyd_warshall(g);
  const std::size_t n = g.vertex_count();
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1u) subset.push_back(v);
    }
    if (subset.size() < best && resolves_by_signature(d, subset)) best = subset.size();
  }
  return best;
}

TEST(Distinguishers, RingOfSix) {
  const auto c6 = ring(6);
  EXPECT_EQ(distinguishers(c6, 0, 3), (std::vector<Vertex>{0, 3}));
  EXPECT_EQ(distinguishers(c6, 0, 2), (std::vector<Vertex>{0, 2, 3, 5}));
  EXPECT_EQ(code_of([&] { distinguishers(c6, 1, 1); }), Errc::contract_violation);
}

TEST(Distinguishers, EdgesHaveNone) {
  SplitMix64 rng(80);
  for (const auto& g : {random_regular(30, 3, rng), complete_binary_tree(4), ring(11)}) {
    for (const auto& e : g.edges()) EXPECT_TRUE(distinguishers(g, e.first, e.second).empty());
  }
}

TEST(BadPairs, LargeRingIsEmpty) {
  const auto g = ring(512);
  EXPECT_TRUE(bad_pairs(g, compute_s(SPolicy::log2_squared(), 512)).empty());
}

TEST(BadPairs, SmallCases) {
  // Threshold 3*6*log2(6)/36 ~ 1.29 while every non-adjacent pair of C6 has |D| >= 2.
  EXPECT_TRUE(bad_pairs(ring(6), 36).empty());
  EXPECT_TRUE(bad_pairs(testing::triangle(), 1).empty());
  // With s = 1 the threshold exceeds n, so every non-adjacent pair is bad.
  EXPECT_EQ(bad_pairs(ring(6), 1).size(), 9u);
}

TEST(BadPairs, ConsistentWithNeighborhoods) {
  SplitMix64 rng(81);
  std::vector<Graph> graphs = {complete_binary_tree(5), random_regular(40, 3, rng), ring(30), testing::star(8)};
  for (const auto& g : graphs) {
    const DistanceMatrix dist(g);
    for (std::size_t s : {2, 5, 9}) {
      const auto bad = bad_pairs(g, s, dist);
      std::vector<std::vector<Vertex>> hood;
      for (Vertex a = 0; a < g.vertex_count(); ++a) hood.push_back(bad_neighborhood(g, a, s, dist));
      for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (Vertex b = 0; b < g.vertex_count(); ++b) {
          if (a == b) continue;
          const bool in_a = std::binary_search(hood[a].begin(), hood[a].end(), b);
          const bool in_b = std::binary_search(hood[b].begin(), hood[b].end(), a);
          EXPECT_EQ(bad.contains(a, b), in_a);
          EXPECT_EQ(in_a, in_b);
        }
      }
    }
  }
}

TEST(BadNeighborhood, TriangleEmptyAndTreeBound) {
  EXPECT_TRUE(bad_neighborhood(testing::triangle(), 0, 3).empty());
  const auto tree = complete_binary_tree(6);
  const std::size_t n = tree.vertex_count();
  const std::size_t s = compute_s(SPolicy::two_thirds(), n);
  EXPECT_EQ(s, 26u);
  const auto hood = bad_neighborhood(tree, 0, s);
  EXPECT_LE(static_cast<double>(hood.size()), bad_neighborhood_bound(n, 3, s));
  EXPECT_DOUBLE_EQ(bad_neighborhood_bound(n, 3, s), 9.0 * 27 * n * n * std::log2(n) * std::log2(n) / (s * s));
}

TEST(CandidatesVersusBadPairs, SurvivorsAvoidEveryDistinguisher) {
  SplitMix64 rng(82);
  std::vector<Graph> graphs = {complete_binary_tree(5), random_regular(64, 3, rng), ring(64)};
  for (const auto& g : graphs) {
    const std::size_t n = g.vertex_count();
    for (std::size_t s : {1, 3, 6}) {
      const auto sample = draw_sample(n, s, rng);
      std::vector<DistanceVector> rows;
      for (Vertex u : sample) rows.push_back(bfs_distances(g, u));
      const auto cand = candidate_set(rows, n);
      const auto edges = g.edges();
      for (const auto& p : cand) {
        if (edges.contains(p.first, p.second)) continue;
        for (Vertex u : distinguishers(g, p.first, p.second)) {
          EXPECT_EQ(std::find(sample.begin(), sample.end(), u), sample.end());
        }
      }
    }
  }
}

TEST(ResolvingSet, RingOfSix) {
  const auto c6 = ring(6);
  EXPECT_TRUE(is_resolving_set(c6, std::vector<Vertex>{0, 1}));
  EXPECT_FALSE(is_resolving_set(c6, std::vector<Vertex>{0}));
  EXPECT_TRUE(is_resolving_set(c6, std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
  EXPECT_FALSE(is_resolving_set(c6, std::vector<Vertex>{}));
  EXPECT_TRUE(is_resolving_set(complete_binary_tree(0), std::vector<Vertex>{}));
}

TEST(ResolvingSet, AgreesWithSignatureCheckerAndIsUpwardClosed) {
  SplitMix64 rng(83);
  std::vector<Graph> graphs = {random_regular(20, 3, rng), complete_binary_tree(3), ring(9), testing::prism()};
  for (const auto& g : graphs) {
    const auto d = testing::floyd_warshall(g);
    const std::size_t n = g.vertex_count();
    for (int rep = 0; rep < 60; ++rep) {
      auto subset = draw_sample(n, 1 + rng.below(4), rng);
      const bool resolves = is_resolving_set(g, subset);
      EXPECT_EQ(resolves, resolves_by_signature(d, subset));
      if (resolves) {
        subset.push_back(static_cast<Vertex>(rng.below(n)));
        EXPECT_TRUE(is_resolving_set(g, subset));
      }
    }
  }
}

TEST(MetricDimension, KnownValues) {
  EXPECT_EQ(metric_dimension_exact(testing::path(4)), 1u);
  EXPECT_EQ(metric_dimension_exact(ring(6)), 2u);
  EXPECT_EQ(metric_dimension_exact(testing::complete(4)), 3u);
  EXPECT_EQ(metric_dimension_exact(complete_binary_tree(0)), 0u);
}

TEST(MetricDimension, CompleteGraphsNeedNMinusOne) {
  for (std::size_t n : {3, 4, 5}) EXPECT_EQ(metric_dimension_exact(testing::complete(n)), n - 1);
}

TEST(MetricDimension, MatchesIndependentBruteForce) {
  SplitMix64 rng(84);
  std::vector<Graph> graphs = {testing::prism(), complete_binary_tree(2), ring(7), testing::star(5),
                               random_regular(10, 3, rng), random_regular(12, 4, rng)};
  for (const auto& g : graphs) {
    const auto md = metric_dimension_exact(g);
    EXPECT_EQ(md, brute_metric_dimension(g));
    EXPECT_LE(md, g.vertex_count() - 1);
  }
}

TEST(MetricDimension, GuardRefusesLargeGraphs) {
  EXPECT_EQ(code_of([] { metric_dimension_exact(ring(17)); }), Errc::too_large);
}

TEST(ResolvingSample, Examples) {
  const auto c6 = ring(6);
  SplitMix64 rng(85);
  for (int i = 0; i < 50; ++i) EXPECT_FALSE(resolving_sample_trial(c6, 1, rng));
  // Every single vertex fails on C6 (checked exhaustively).
  for (Vertex v = 0; v < 6; ++v) EXPECT_FALSE(is_resolving_set(c6, std::vector<Vertex>{v}));

  // s = n: whenever the support is all of V the sample resolves.
  SplitMix64 gen(86);
  const auto g = random_regular(8, 3, gen);
  for (int i = 0; i < 200; ++i) {
    SplitMix64 probe(1000 + i);
    auto sample = draw_sample(8, 8, probe);
    std::sort(sample.begin(), sample.end());
    sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
    SplitMix64 replay(1000 + i);
    const bool resolved = resolving_sample_trial(g, 8, replay);
    if (sample.size() == 8) {
      EXPECT_TRUE(resolved);
    }
  }
}

TEST(StructuralProbe, TriangleHasNoPairs) {
  SplitMix64 rng(87);
  EXPECT_EQ(code_of([&] { structural_probe(testing::triangle(), 10, rng); }), Errc::no_non_adjacent_pairs);
}

TEST(StructuralProbe, RingOfSixFullEnumeration) {
  SplitMix64 rng(88);
  const auto report = structural_probe(ring(6), 100, rng);
  EXPECT_EQ(report.sampled_pairs, 9u);
  EXPECT_EQ(report.min_distinguishers, 2u);
  EXPECT_NEAR(report.threshold, 18.0 / std::log2(6.0), 1e-12);
  EXPECT_DOUBLE_EQ(report.fraction_below, 1.0);
  EXPECT_EQ(report.delta, 2u);
}

TEST(StructuralProbe, SampledPairsAreNonAdjacent) {
  SplitMix64 rng(89);
  const auto g = random_regular(200, 3, rng);
  const auto report = structural_probe(g, 50, rng);
  EXPECT_EQ(report.sampled_pairs, 50u);
  EXPECT_GE(report.fraction_below, 0.0);
  EXPECT_LE(report.fraction_below, 1.0);
  EXPECT_LE(report.min_distinguishers, 200u);
  EXPECT_GT(report.min_distinguishers, 0u);
}

}  // namespace
}  // namespace distrecon
