#include <gtest/gtest.h>
#include <zlib.h>

#include <filesystem>
#include <fstream>

#include "mcg/corpus.hpp"
#include "mcg/families.hpp"
#include "mcg/graph6.hpp"
#include "mcg/isomorphism.hpp"
#include "mcg/structure.hpp"
#include "oracles.hpp"

namespace mcg {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  return fs::temp_directory_path() / ("mcg-corpus-test-" + name);
}

fs::path write_text(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p;
}

TEST(Enumeration, ClassCountsMatchBruteForce) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_graphs(n).size(), oracle::isomorphism_class_count(n)) << n;
}

TEST(Enumeration, KnownCountsAtSevenAndEight) {
  EXPECT_EQ(enumerate_graphs(7).size(), 1044u);
  EXPECT_EQ(enumerate_graphs(8).size(), 12346u);
}

TEST(Enumeration, RepresentativesArePairwiseNonisomorphic) {
  for (int n = 1; n <= 6; ++n) {
    const auto& graphs = enumerate_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (std::size_t j = i + 1; j < graphs.size(); ++j)
        ASSERT_FALSE(oracle::isomorphic(graphs[i], graphs[j])) << n << ' ' << i << ' ' << j;
  }
}

TEST(Enumeration, DeterministicAndCapped) {
  EXPECT_EQ(enumerate_graphs(6), enumerate_graphs(6));
  EXPECT_THROW(enumerate_graphs(kBuiltinMaxOrder + 1), std::invalid_argument);
}

TEST(Ingest, BuiltinBrickFilters) {
  const auto four = ingest({BuiltinOrigin{4, 4}, {Filter::kBrick}});
  ASSERT_EQ(four.size(), 1u);
  EXPECT_TRUE(are_isomorphic(four[0], complete(4)));
  const auto six = ingest({BuiltinOrigin{6, 6}, {Filter::kBrick}});
  auto has = [&](const Graph& g) {
    for (const Graph& h : six)
      if (are_isomorphic(g, h)) return true;
    return false;
  };
  EXPECT_TRUE(has(wheel(6)));
  EXPECT_TRUE(has(c6_complement()));
  for (const Graph& g : six) EXPECT_TRUE(oracle::brick_by_definition(g));
}

TEST(Ingest, StageCountsAreMonotone) {
  std::vector<StageCount> stages;
  ingest({BuiltinOrigin{1, 7},
          {Filter::kEvenOrder, Filter::kConnected, Filter::kMinDegree3, Filter::kThreeConnected,
           Filter::kMatchingCovered, Filter::kBrick, Filter::kSolid}},
         &stages);
  ASSERT_EQ(stages.size(), 8u);
  EXPECT_EQ(stages[0].stage, "input");
  EXPECT_EQ(stages[0].count, 1 + 2 + 4 + 11 + 34 + 156 + 1044u);
  EXPECT_EQ(stages[1].stage, "even-order");
  EXPECT_EQ(stages[1].count, 2 + 11 + 156u);
  for (std::size_t i = 1; i < stages.size(); ++i) EXPECT_LE(stages[i].count, stages[i - 1].count);
  EXPECT_EQ(stages.back().stage, "solid");
}

TEST(Ingest, FileOrigin) {
  const fs::path p = write_text("k4.g6", ">>graph6<<C~\n\n");
  const auto graphs = ingest({FileOrigin{p.string()}, {}});
  ASSERT_EQ(graphs.size(), 1u);
  EXPECT_EQ(graphs[0], complete(4));
  fs::remove(p);
}

TEST(Ingest, MalformedLineReportsLineNumber) {
  const fs::path p = write_text("bad.g6", "C~\nC~\nB~\n");
  try {
    ingest({FileOrigin{p.string()}, {}});
    FAIL();
  } catch (const CorpusError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  fs::remove(p);
}

TEST(Ingest, Errors) {
  EXPECT_THROW(ingest({FileOrigin{"/nonexistent/corpus.g6"}, {}}), CorpusError);
  EXPECT_THROW(ingest({BuiltinOrigin{1, kBuiltinMaxOrder + 1}, {}}), CorpusError);
  EXPECT_THROW(ingest({FamilyOrigin{{{Family::kPrism, 7}}}, {}}), CorpusError);
}

TEST(Ingest, GzipFile) {
  const fs::path p = scratch("corpus.g6.gz");
  gzFile gz = gzopen(p.string().c_str(), "wb");
  ASSERT_NE(gz, nullptr);
  const std::string text = to_graph6(petersen()) + "\n" + to_graph6(wheel(8)) + "\n";
  gzwrite(gz, text.data(), static_cast<unsigned>(text.size()));
  gzclose(gz);
  const auto graphs = ingest({FileOrigin{p.string()}, {}});
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(graphs[0], petersen());
  EXPECT_EQ(graphs[1], wheel(8));
  fs::remove(p);
}

TEST(Ingest, FamiliesAndDescriptions) {
  const CorpusSource source{FamilyOrigin{{{Family::kWheel, 6}, {Family::kPetersen, 10}}}, {Filter::kBrick}};
  const auto graphs = ingest(source);
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(graphs[0], wheel(6));
  EXPECT_EQ(source.describe(), "families wheel(6), petersen; filters: brick");
}

TEST(Filters, NamesRoundTrip) {
  for (Filter f : {Filter::kEvenOrder, Filter::kConnected, Filter::kMinDegree3, Filter::kThreeConnected,
                   Filter::kMatchingCovered, Filter::kBrick, Filter::kSolid})
    EXPECT_EQ(parse_filter(filter_name(f)), f);
  EXPECT_FALSE(parse_filter("planar"));
}

TEST(RandomCorpus, DeterministicAndMatchingCovered) {
  const RandomOrigin spec{50, 10, 77};
  const auto a = random_matching_covered_graphs(spec);
  EXPECT_EQ(a, random_matching_covered_graphs(spec));
  ASSERT_EQ(a.size(), 50u);
  for (const Graph& g : a) {
    EXPECT_LE(g.order(), 10);
    EXPECT_TRUE(is_matching_covered(g));
  }
  EXPECT_NE(a, random_matching_covered_graphs({50, 10, 78}));
}

TEST(Splice, JoinsNeighbourhoods) {
  const Graph g = splice(complete(4), 0, complete(4), 0);
  EXPECT_EQ(g.order(), 6);
  EXPECT_TRUE(are_isomorphic(g, prism(6)));
  EXPECT_THROW(splice(complete(4), 0, wheel(6), 0), std::invalid_argument);
}

}  // namespace
}  // namespace mcg
