#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "declutter/clutter_weighting.h"
#include "declutter/error.h"
#include "declutter/generators.h"

namespace declutter {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

Footprint Fp(std::vector<int> lengths) {
  Footprint f;
  f.u = 0;
  f.v = 1;
  f.lengths = std::move(lengths);
  return f;
}

Graph Complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.AddEdge(i, j);
  }
  return g;
}

// |union| - |intersection| of open neighborhoods, counted by brute force.
double NeighborhoodOracle(const Graph& g, NodeId u, NodeId v) {
  int either = 0;
  int both = 0;
  for (NodeId x = 0; x < g.num_nodes(); ++x) {
    const bool in_u = g.HasEdge(u, x);
    const bool in_v = g.HasEdge(v, x);
    either += in_u || in_v;
    both += in_u && in_v;
  }
  return either - both;
}

TEST(AggregateTest, Values) {
  EXPECT_EQ(ApplyAggregate(Fp({2, 2, 6, 6}), Aggregate::kMin), 2.0);
  EXPECT_EQ(ApplyAggregate(Fp({7, 8, 8, 12}), Aggregate::kMax), 12.0);
  EXPECT_DOUBLE_EQ(ApplyAggregate(Fp({7, 8, 8, 12}), Aggregate::kMean), 8.75);
  EXPECT_EQ(CodeOf([] { ApplyAggregate(Fp({}), Aggregate::kMin); }),
            ErrorCode::kEmptyFootprint);
  EXPECT_EQ(ParseAggregate(AggregateName(Aggregate::kMean)), Aggregate::kMean);
}

TEST(NormalizeFootprintTest, Examples) {
  EXPECT_EQ(NormalizeFootprint(Fp({2, 2, 6, 6}), 4, Aggregate::kMin),
            (FeatureRow{2, 2, 6, 6}));
  EXPECT_EQ(NormalizeFootprint(Fp({5}), 3, Aggregate::kMean),
            (FeatureRow{5, 5, 5}));
  const FeatureRow row = NormalizeFootprint(Fp({7, 8, 8, 12}), 2, Aggregate::kMean);
  ASSERT_EQ(row.size(), 2u);
  EXPECT_EQ(row[0], 7.0);
  EXPECT_DOUBLE_EQ(row[1], (8.0 + 8.0 + 12.0) / 3.0);
  EXPECT_EQ(NormalizeFootprint(Fp({3, 4}), 4, Aggregate::kMax),
            (FeatureRow{3, 4, 4, 4}));
  EXPECT_EQ(NormalizeFootprint(Fp({3, 4, 9}), 1, Aggregate::kMin),
            (FeatureRow{3}));
  EXPECT_EQ(CodeOf([] { NormalizeFootprint(Fp({}), 4, Aggregate::kMin); }),
            ErrorCode::kEmptyFootprint);
}

TEST(NormalizeFootprintTest, RandomFootprints) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> len(1, 10);
  std::uniform_int_distribution<int> val(2, 30);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> lengths(len(rng));
    for (int& x : lengths) x = val(rng);
    std::sort(lengths.begin(), lengths.end());
    const int l = static_cast<int>(lengths.size());
    const int k = 1 + trial % 8;
    const Aggregate m = static_cast<Aggregate>(trial % 3);
    const FeatureRow row = NormalizeFootprint(Fp(lengths), k, m);
    ASSERT_EQ(static_cast<int>(row.size()), k);
    if (l == k) {
      for (int i = 0; i < k; ++i) EXPECT_EQ(row[i], lengths[i]);
    }
    // Independent recomputation of each branch.
    auto aggregate = [&](int from, int to) {
      double lo = lengths[from], hi = lengths[from], sum = 0.0;
      for (int i = from; i < to; ++i) {
        lo = std::min<double>(lo, lengths[i]);
        hi = std::max<double>(hi, lengths[i]);
        sum += lengths[i];
      }
      if (m == Aggregate::kMin) return lo;
      if (m == Aggregate::kMax) return hi;
      return sum / (to - from);
    };
    for (int i = 0; i < k; ++i) {
      double want;
      if (l <= k) {
        want = i < l ? lengths[i] : aggregate(0, l);
      } else {
        want = i < k - 1 ? lengths[i] : aggregate(k - 1, l);
      }
      EXPECT_NEAR(row[i], want, 1e-12);
    }
  }
}

TEST(WeightHeuristicTest, CycleHasNoOutliers) {
  Graph g(6);
  for (int i = 0; i < 6; ++i) g.AddEdge(i, (i + 1) % 6);
  const WeightingResult r = WeightHeuristic(g, HeuristicParams{});
  EXPECT_EQ(r.num_outliers(), 0);
  for (const Edge& e : r.weighted.edges()) EXPECT_EQ(e.weight, 1.0);
}

TEST(WeightHeuristicTest, FlagsAugmentingEdgesOfGrid) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = Augment(GenerateGrid(10, 10), 0.1, seed);
    HeuristicParams params;
    params.seed = seed;
    const WeightingResult r = WeightHeuristic(g, params);
    int aug = 0;
    int flagged = 0;
    for (EdgeIndex i = 0; i < g.num_edges(); ++i) {
      if (!g.edge(i).augmenting) continue;
      ++aug;
      flagged += r.outlier[i];
    }
    EXPECT_GE(flagged, 0.6 * aug) << "seed " << seed;
  }
}

TEST(WeightHeuristicTest, WeightsFollowFootprints) {
  const Graph g = Augment(GenerateGrid(8, 9), 0.1, 3);
  for (Aggregate m : {Aggregate::kMin, Aggregate::kMax, Aggregate::kMean}) {
    HeuristicParams params;
    params.aggregate = m;
    params.seed = 11;
    const WeightingResult r = WeightHeuristic(g, params);
    ASSERT_EQ(r.weighted.num_edges(), g.num_edges());
    for (EdgeIndex i = 0; i < g.num_edges(); ++i) {
      const double w = r.weighted.edge(i).weight;
      EXPECT_GE(w, 1.0);
      if (r.outlier[i]) {
        EXPECT_EQ(w, ApplyAggregate(r.footprints[i], m));
      } else {
        EXPECT_EQ(w, 1.0);
      }
      EXPECT_EQ(r.weighted.edge(i).augmenting, g.edge(i).augmenting);
    }
  }
}

TEST(WeightHeuristicTest, BridgesKeepUnitWeight) {
  // Two triangles joined by a bridge.
  Graph g(6);
  g.AddEdge(0, 1);
  g.AddEdge(1, 2);
  g.AddEdge(0, 2);
  g.AddEdge(3, 4);
  g.AddEdge(4, 5);
  g.AddEdge(3, 5);
  const EdgeIndex bridge = g.AddEdge(2, 3);
  const WeightingResult r = WeightHeuristic(g, HeuristicParams{});
  EXPECT_TRUE(r.footprints[bridge].empty());
  EXPECT_TRUE(std::isnan(r.scores[bridge]));
  EXPECT_FALSE(r.outlier[bridge]);
  EXPECT_EQ(r.weighted.edge(bridge).weight, 1.0);
}

TEST(WeightHeuristicTest, Deterministic) {
  const Graph g = Augment(GenerateGrid(7, 7), 0.1, 9);
  HeuristicParams params;
  params.seed = 42;
  const WeightingResult a = WeightHeuristic(g, params);
  const WeightingResult b = WeightHeuristic(g, params);
  EXPECT_EQ(a.weighted, b.weighted);
  EXPECT_EQ(a.outlier, b.outlier);
}

TEST(NeighborhoodWeightTest, Examples) {
  Graph triangle = Complete(3);
  EXPECT_EQ(NeighborhoodWeight(triangle, 0, 1), 2.0);
  Graph k4 = Complete(4);
  EXPECT_EQ(NeighborhoodWeight(k4, 0, 1), 2.0);
  Graph star(4);
  for (int i = 1; i < 4; ++i) star.AddEdge(0, i);
  EXPECT_EQ(NeighborhoodWeight(star, 0, 1), 4.0);
}

TEST(NeighborhoodWeightTest, MatchesOracle) {
  const Graph g = Augment(GenerateGrid(6, 6), 0.1, 1);
  const Graph w = WeightNeighborhood(g);
  for (EdgeIndex i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    EXPECT_EQ(w.edge(i).weight, NeighborhoodOracle(g, e.u, e.v));
  }
  for (NodeId u = 0; u < 6; ++u) {
    for (NodeId v = 0; v < 6; ++v) {
      if (u != v) EXPECT_EQ(NeighborhoodWeight(g, u, v), NeighborhoodOracle(g, u, v));
    }
  }
}

TEST(WeightFixedTest, AugmentingEdgesOnly) {
  const Graph g = Augment(GenerateGrid(5, 5), 0.1, 2);
  const Graph fixed = WeightFixed(g, 0.01);
  for (EdgeIndex i = 0; i < g.num_edges(); ++i) {
    EXPECT_EQ(fixed.edge(i).weight, g.edge(i).augmenting ? 0.01 : 1.0);
  }
  EXPECT_EQ(WeightFixed(g, 1.0), g.Unweighted());
  EXPECT_EQ(CodeOf([] { WeightFixed(GenerateGrid(3, 3), 0.01); }),
            ErrorCode::kNoAugEdges);
}

}  // namespace
}  // namespace declutter
