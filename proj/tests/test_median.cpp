#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pmint/error.hpp"
#include "pmint/median.hpp"

using namespace pmint;

namespace {

MedianValue oracle_value(std::int64_t v) {
  return v >= oracles::kInf ? MedianValue::infeasible() : MedianValue(v);
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int v = 2; v <= leaves + 1; ++v) edges.push_back({1, v});
  return Graph(leaves + 1, edges);
}

}  // namespace

TEST(MedianValue, InfeasibleOrdersAboveFinite) {
  EXPECT_GT(MedianValue::infeasible(), MedianValue(1'000'000));
  EXPECT_EQ(MedianValue::infeasible(), MedianValue::infeasible());
  EXPECT_LT(MedianValue(3), MedianValue(4));
  EXPECT_EQ(MedianValue::infeasible().to_string(), "INFEASIBLE");
  EXPECT_EQ(MedianValue(12).to_string(), "12");
}

TEST(FacilitySet, SortsAndDropsDuplicates) {
  const FacilitySet x({5, 2, 9});
  EXPECT_EQ(x.vertices(), (std::vector<VertexId>{2, 5, 9}));
  EXPECT_TRUE(x.contains(5));
  EXPECT_FALSE(x.contains(3));
  EXPECT_EQ(FacilitySet({2, 2}).p(), 1);
}

TEST(Objective, Examples) {
  const Graph p7 = oracles::unit_path(7);
  EXPECT_EQ(objective(p7, FacilitySet({4})), MedianValue(12));
  EXPECT_EQ(objective(p7, FacilitySet({1, 2, 3, 4, 5, 6, 7})), MedianValue(0));
  const std::vector<EdgeId> cut{1};
  EXPECT_TRUE(objective(remove_edges(oracles::unit_path(4), cut).graph, FacilitySet({3})).is_infeasible());
  EXPECT_THROW(objective(p7, FacilitySet{}), InputError);
  EXPECT_THROW(objective(p7, FacilitySet({8})), InputError);
}

TEST(Objective, MonotoneUnderAddition) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(oracles::uniform(rng, 2, 12));
    const Graph g = oracles::random_graph(n, 2, rng, 7, 1);
    std::vector<VertexId> x{static_cast<VertexId>(oracles::uniform(rng, 1, n))};
    MedianValue previous = objective(g, FacilitySet(x));
    for (VertexId v = 1; v <= n; ++v) {
      if (std::find(x.begin(), x.end(), v) != x.end() || oracles::uniform(rng, 0, 1)) continue;
      x.push_back(v);
      const MedianValue next = objective(g, FacilitySet(x));
      EXPECT_LE(next, previous);
      previous = next;
    }
  }
}

TEST(PMedianEnum, Examples) {
  auto s = solve_p_median_enum(oracles::unit_path(7), 1);
  EXPECT_EQ(s.facilities.vertices(), (std::vector<VertexId>{4}));
  EXPECT_EQ(s.value, MedianValue(12));

  s = solve_p_median_enum(oracles::unit_path(6), 1);
  EXPECT_EQ(s.facilities.vertices(), (std::vector<VertexId>{3}));
  EXPECT_EQ(s.value, MedianValue(9));

  s = solve_p_median_enum(oracles::weighted_tree(), 1);
  EXPECT_EQ(s.facilities.vertices(), (std::vector<VertexId>{4}));
  EXPECT_EQ(s.value, MedianValue(46));

  EXPECT_THROW(solve_p_median_enum(oracles::unit_path(3), 0), InputError);
  EXPECT_THROW(solve_p_median_enum(oracles::unit_path(3), 4), InputError);
}

TEST(PMedianEnum, InfeasibleOnlyWhenComponentsOutnumberP) {
  const Graph g(4, {{1, 2}});
  EXPECT_TRUE(solve_p_median_enum(g, 2).value.is_infeasible());
  EXPECT_EQ(solve_p_median_enum(g, 3).value, MedianValue(1));
}

TEST(PMedianEnum, AllVerticesGiveZero) {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 9; ++n) {
    const Graph g = oracles::random_graph(n, 2, rng, 5, 1);
    EXPECT_EQ(solve_p_median_enum(g, n).value, MedianValue(0));
    EXPECT_EQ(solve_p_median(g, n).value, MedianValue(0));
  }
}

TEST(PMedianEnum, MatchesBitmaskOracle) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(oracles::uniform(rng, 1, 10));
    Graph g = oracles::random_graph(n, static_cast<int>(oracles::uniform(rng, 0, 4)), rng, 8, 1);
    if (oracles::uniform(rng, 0, 3) == 0 && g.edge_count() > 0) {
      const std::vector<EdgeId> cut{static_cast<EdgeId>(oracles::uniform(rng, 1, g.edge_count()))};
      g = remove_edges(g, cut).graph;
    }
    const int p = static_cast<int>(oracles::uniform(rng, 1, n));
    const auto expected = oracle_value(oracles::p_median(oracles::floyd(g), p));
    const auto parallel = solve_p_median_enum(g, p);
    const auto serial = solve_p_median_enum_serial(g, p);
    EXPECT_EQ(parallel.value, expected);
    EXPECT_EQ(serial.value, expected);
    EXPECT_EQ(parallel.facilities, serial.facilities);
    EXPECT_EQ(objective(g, parallel.facilities), parallel.value);
  }
}

TEST(PMedianForest, AgreesWithEnumerationIncludingTieBreak) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(oracles::uniform(rng, 1, 11));
    Graph forest = oracles::random_tree(n, rng, 0, 4);
    std::vector<EdgeId> cut;
    for (EdgeId e = 1; e <= forest.edge_count(); ++e)
      if (oracles::uniform(rng, 0, 3) == 0) cut.push_back(e);
    forest = remove_edges(forest, cut).graph;
    const int p = static_cast<int>(oracles::uniform(rng, 1, n));
    const auto dp = solve_p_median_forest(forest, p);
    const auto en = solve_p_median_enum_serial(forest, p);
    ASSERT_EQ(dp.value, en.value) << "trial " << trial;
    EXPECT_EQ(p_median_forest_value(forest, p), en.value);
    if (!en.value.is_infeasible()) EXPECT_EQ(dp.facilities, en.facilities) << "trial " << trial;
    EXPECT_EQ(dp.facilities.p(), p);
  }
}

TEST(PMedianForest, RejectsCycles) {
  EXPECT_THROW(solve_p_median_forest(Graph(3, {{1, 2}, {2, 3}, {1, 3}}), 1), ShapeError);
}

TEST(PMedianForest, LargerTreesAgainstEnumeration) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph tree = oracles::random_tree(16, rng, 0, 9);
    for (int p : {2, 3, 5}) {
      EXPECT_EQ(solve_p_median(tree, p).value, solve_p_median_enum(tree, p).value);
    }
  }
}

TEST(Goldman, Examples) {
  EXPECT_EQ(goldman_1_median(oracles::unit_path(7)), 4);
  EXPECT_EQ(goldman_1_median(star(4)), 1);
  EXPECT_EQ(goldman_1_median(oracles::weighted_tree()), 4);
  EXPECT_EQ(goldman_1_median(Graph(1, {})), 1);
  EXPECT_THROW(goldman_1_median(Graph(3, {{1, 2}, {2, 3}, {1, 3}})), ShapeError);
}

TEST(OneMedianTable, Examples) {
  auto t = all_vertex_1median_values(oracles::unit_path(4));
  EXPECT_EQ(t.values.values(), (std::vector<std::int64_t>{6, 4, 4, 6}));
  EXPECT_EQ(t.optimal, (std::vector<VertexId>{2, 3}));

  t = all_vertex_1median_values(star(4));
  EXPECT_EQ(t.values.values(), (std::vector<std::int64_t>{4, 7, 7, 7, 7}));
  EXPECT_EQ(t.optimal, (std::vector<VertexId>{1}));

  t = all_vertex_1median_values(oracles::weighted_tree());
  EXPECT_EQ(t.optimal, (std::vector<VertexId>{4}));
  EXPECT_EQ(t.optimum, 46);
  EXPECT_EQ(t.values[3], 47);
  EXPECT_EQ(t.values[5], 47);
}

TEST(OneMedianTable, GoldmanAndTableAgreeWithBruteForce) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(oracles::uniform(rng, 1, 12));
    const bool unit = trial % 2 == 0;
    const Graph tree = oracles::random_tree(n, rng, unit ? 1 : 0, unit ? 1 : 9);
    const auto d = oracles::floyd(tree);
    const auto table = all_vertex_1median_values(tree);
    std::int64_t best = oracles::kInf;
    for (VertexId v = 1; v <= n; ++v) {
      const auto f = oracles::objective(d, {v});
      ASSERT_EQ(table.values[v], f);
      best = std::min(best, f);
    }
    std::vector<VertexId> argmin;
    for (VertexId v = 1; v <= n; ++v)
      if (table.values[v] == best) argmin.push_back(v);
    EXPECT_EQ(table.optimal, argmin);
    EXPECT_EQ(table.optimum, best);
    if (unit) {
      const VertexId g = goldman_1_median(tree);
      EXPECT_TRUE(std::binary_search(argmin.begin(), argmin.end(), g)) << "trial " << trial;
    }
  }
}

TEST(OneMedian, NeighborSubtreesHoldAtMostHalf) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(oracles::uniform(rng, 2, 14));
    const Graph tree = oracles::random_tree(n, rng);
    const VertexId r = goldman_1_median(tree);
    const auto rooted = root_tree(tree, r);
    for (VertexId w : rooted.children(r)) EXPECT_LE(rooted.subtree_size(w), n - rooted.subtree_size(w));
  }
}

TEST(UnitPathMedian, Examples) {
  auto m = unit_path_1median(7);
  EXPECT_EQ(m.optimal, (std::vector<VertexId>{4}));
  EXPECT_EQ(m.value, 12);
  m = unit_path_1median(1);
  EXPECT_EQ(m.optimal, (std::vector<VertexId>{1}));
  EXPECT_EQ(m.value, 0);
  m = unit_path_1median(6);
  EXPECT_EQ(m.optimal, (std::vector<VertexId>{3, 4}));
  EXPECT_EQ(m.value, 9);
  m = unit_path_1median(4);
  EXPECT_EQ(m.optimal, (std::vector<VertexId>{2, 3}));
}

TEST(UnitPathMedian, MatchesTableUpTo200) {
  for (int n = 1; n <= 200; ++n) {
    const auto closed = unit_path_1median(n);
    const auto table = all_vertex_1median_values(oracles::unit_path(n));
    EXPECT_EQ(closed.value, table.optimum) << n;
    EXPECT_EQ(closed.optimal, table.optimal) << n;
  }
}
