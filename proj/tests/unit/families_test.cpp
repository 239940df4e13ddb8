#include <gtest/gtest.h>

#include "mcg/families.hpp"
#include "mcg/graph_ops.hpp"
#include "oracles.hpp"

namespace mcg {
namespace {

TEST(Families, Wheel) {
  for (int n = 4; n <= 12; ++n) {
    const Graph w = wheel(n);
    EXPECT_EQ(w.order(), n);
    EXPECT_EQ(w.size(), 2 * (n - 1));
    EXPECT_EQ(w.degree(0), n - 1);
    for (Vertex v = 1; v < n; ++v) EXPECT_EQ(w.degree(v), 3);
  }
  EXPECT_TRUE(oracle::isomorphic(wheel(4), complete(4)));
  EXPECT_THROW(wheel(3), std::invalid_argument);
}

TEST(Families, CubicLadders) {
  for (int n = 6; n <= 14; n += 2) {
    for (const Graph& g : {prism(n), moebius_ladder(n)}) {
      EXPECT_EQ(g.order(), n);
      EXPECT_EQ(g.size(), 3 * n / 2);
      EXPECT_EQ(g.min_degree(), 3);
      EXPECT_EQ(g.max_degree(), 3);
    }
  }
  // the 6-vertex ladders are the triangular prism and K_{3,3}
  EXPECT_TRUE(oracle::isomorphic(prism(6), c6_complement()));
  EXPECT_TRUE(oracle::bipartite(moebius_ladder(6)));
  EXPECT_FALSE(oracle::bipartite(moebius_ladder(8)));
  EXPECT_TRUE(oracle::bipartite(prism(8)));
  EXPECT_THROW(prism(7), std::invalid_argument);
  EXPECT_THROW(moebius_ladder(4), std::invalid_argument);
}

TEST(Families, Petersen) {
  const Graph p = petersen();
  EXPECT_EQ(p.order(), 10);
  EXPECT_EQ(p.size(), 15);
  EXPECT_EQ(p.min_degree(), 3);
  EXPECT_EQ(p.max_degree(), 3);
  // girth 5: no triangles and no 4-cycles
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = u + 1; v < 10; ++v) {
      const int common = cardinality(p.neighbors(u) & p.neighbors(v));
      EXPECT_EQ(common, p.has_edge(u, v) ? 0 : 1);
    }
}

TEST(Families, SmallGraphs) {
  EXPECT_EQ(cycle(5).size(), 5);
  EXPECT_EQ(complete(6).size(), 15);
  EXPECT_EQ(c6_complement().size(), 9);
  EXPECT_EQ(c6_complement(), complement(cycle(6)));
  EXPECT_THROW(cycle(2), std::invalid_argument);
}

TEST(Families, NamesRoundTrip) {
  for (Family f : {Family::kWheel, Family::kCycle, Family::kComplete, Family::kPrism,
                   Family::kMoebiusLadder, Family::kPetersen, Family::kC6Complement}) {
    const auto parsed = parse_family(family_name(f));
    ASSERT_TRUE(parsed);
    EXPECT_EQ(*parsed, f);
    EXPECT_NO_THROW(generate({f, family_min_order(f)}));
  }
  EXPECT_FALSE(parse_family("hypercube"));
  EXPECT_EQ(generate({Family::kWheel, 6}), wheel(6));
  EXPECT_TRUE(family_has_fixed_order(Family::kPetersen));
  EXPECT_FALSE(family_has_fixed_order(Family::kPrism));
}

}  // namespace
}  // namespace mcg
