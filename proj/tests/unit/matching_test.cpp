#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mcg/families.hpp"
#include "mcg/graph_ops.hpp"
#include "mcg/matching.hpp"
#include "oracles.hpp"

namespace mcg {
namespace {

TEST(Matching, RejectsSharedEndpoints) {
  EXPECT_THROW(Matching({{0, 1}, {1, 2}}), std::invalid_argument);
  const Matching m({{2, 3}, {0, 1}});
  EXPECT_EQ(m.size(), 2u);
  EXPECT_EQ(m.edges()[0], Edge(0, 1));
  EXPECT_EQ(m.covered(), full_set(4));
  EXPECT_EQ(m.mate(3), 2);
  EXPECT_FALSE(Matching({{0, 1}}).mate(2));
  EXPECT_TRUE(m.is_perfect_in(cycle(4)));
  EXPECT_FALSE(Matching({{0, 2}}).is_matching_of(cycle(4)));
}

TEST(Matching, MaxMatchingSizeMatchesOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 10, 0.15 + 0.1 * (trial % 6));
    const Matching m = max_matching(g);
    EXPECT_TRUE(m.is_matching_of(g));
    EXPECT_EQ(static_cast<int>(m.size()), oracle::max_matching_size(g)) << oracle::graph6(g);
  }
}

TEST(Matching, BlossomsAreHandled) {
  // two triangles joined by a path: needs blossom contraction to augment
  const Graph g(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}});
  EXPECT_EQ(max_matching(g).size(), 4u);
  EXPECT_EQ(max_matching(petersen()).size(), 5u);
  EXPECT_EQ(max_matching(cycle(9)).size(), 4u);
}

TEST(Matching, PerfectMatchingExistence) {
  EXPECT_TRUE(has_perfect_matching(Graph(0)));
  EXPECT_FALSE(has_perfect_matching(complete(5)));
  EXPECT_TRUE(has_perfect_matching(wheel(6)));
  EXPECT_FALSE(has_perfect_matching(Graph(4, {{0, 1}, {0, 2}, {0, 3}})));
}

TEST(Matching, EnumerationMatchesAllSubsetsOracle) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 * (1 + trial % 5), 0.3 + 0.1 * (trial % 5));
    const auto pms = enumerate_perfect_matchings(g);
    EXPECT_EQ(pms.size(), oracle::pm_count(g)) << oracle::graph6(g);
    EXPECT_EQ(count_perfect_matchings(g), oracle::pm_count(g));
    std::set<std::vector<Edge>> distinct;
    for (const Matching& m : pms) {
      EXPECT_TRUE(m.is_perfect_in(g));
      distinct.insert({m.edges().begin(), m.edges().end()});
    }
    EXPECT_EQ(distinct.size(), pms.size());
  }
}

TEST(Matching, KnownCounts) {
  EXPECT_EQ(count_perfect_matchings(complete(4)), 3u);
  EXPECT_EQ(count_perfect_matchings(complete(6)), 15u);
  EXPECT_EQ(count_perfect_matchings(complete(8)), 105u);
  EXPECT_EQ(count_perfect_matchings(cycle(6)), 2u);
  EXPECT_EQ(count_perfect_matchings(petersen()), 6u);
  EXPECT_EQ(count_perfect_matchings(wheel(6)), 5u);
  EXPECT_EQ(count_perfect_matchings(cycle(5)), 0u);
}

TEST(Matching, EnumerationOrderIsDeterministic) {
  const auto a = enumerate_perfect_matchings(wheel(8));
  const auto b = enumerate_perfect_matchings(wheel(8));
  EXPECT_EQ(a, b);
  ASSERT_FALSE(a.empty());
  // the lowest vertex pairs with its smallest neighbour first
  EXPECT_TRUE(a.front().contains({0, 1}));
}

TEST(Matching, ContainmentCounts) {
  const Graph w = wheel(6);
  for (Vertex r = 1; r < 6; ++r) EXPECT_EQ(count_pm_containing(w, {0, r}), 1u);
  for (Vertex r = 1; r < 6; ++r) EXPECT_EQ(count_pm_containing(w, {r, r % 5 + 1}), 2u);
  for (const Edge& e : cycle(6).edges()) EXPECT_EQ(count_pm_containing(cycle(6), e), 1u);
  EXPECT_THROW(count_pm_containing(w, {1, 3}), std::invalid_argument);
}

TEST(Matching, ContainmentSumIdentity) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 * (2 + trial % 4), 0.5);
    const std::uint64_t p = count_perfect_matchings(g);
    std::uint64_t sum = 0;
    for (const Edge& e : g.edges()) {
      const std::uint64_t c = count_pm_containing(g, e);
      EXPECT_EQ(c, count_perfect_matchings(delete_vertices(g, e.ends()).graph));
      sum += c;
    }
    EXPECT_EQ(sum, p * g.order() / 2);
  }
}

TEST(Matching, SubsetCountsAndMatchability) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(rng, 8, 0.45);
    Matchability oracle_dp(g);
    for (VertexSet s = 0; s <= g.vertices(); s += 7) {
      const std::uint64_t expected = oracle::pm_count(induced_subgraph(g, s));
      EXPECT_EQ(count_perfect_matchings(g, s), expected);
      EXPECT_EQ(oracle_dp.perfectly_matchable(s), expected > 0);
    }
  }
}

}  // namespace
}  // namespace mcg
