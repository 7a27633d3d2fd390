#include <gtest/gtest.h>

#include <random>

#include "sheafpath/error.hpp"
#include "sheafpath/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/random_graphs.hpp"

namespace sheafpath {
namespace {

using testing::ladder_graph;

// Source - a, d - sink, and a complete graph on `interior` vertices a, b, ...
GraphPtr hub_graph(int interior) {
  std::vector<VertexId> vs{"S", "T"};
  for (int i = 0; i < interior; ++i) vs.push_back(std::string(1, char('a' + i)));
  std::vector<EdgeSpec> es{{"sa", "S", "a", 1}, {"tz", "T", vs.back(), 1}};
  for (int i = 0; i < interior; ++i)
    for (int j = i + 1; j < interior; ++j) {
      const VertexId& u = vs[2 + i];
      const VertexId& v = vs[2 + j];
      es.push_back({u + v, u, v, 1});
    }
  return build_graph(vs, es, "S", "T");
}

TEST(Oracle, LadderCounts) {
  PathSheaf ps(ladder_graph());
  DistancePathSheaf dps(ladder_graph());
  auto sections = oracle::enumerate_global_sections_p(ps);
  EXPECT_EQ(sections.size(), 4u);
  for (const auto& s : sections) EXPECT_TRUE(is_global_section(ps, s));
  EXPECT_NE(std::find(sections.begin(), sections.end(), testing::ladder_section_s1()), sections.end());

  EXPECT_EQ(oracle::enumerate_global_sections_dp(dps).size(), 3u);
  EXPECT_EQ(oracle::enumerate_simple_paths(ps.graph()).size(), 3u);
  auto cycles = oracle::enumerate_cycles(ps.graph());
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0].edges.size(), 4u);
}

TEST(Oracle, SingleEdgeAndSplitCounts) {
  PathSheaf one(testing::single_edge_graph());
  EXPECT_EQ(oracle::enumerate_global_sections_p(one).size(), 1u);
  EXPECT_EQ(oracle::enumerate_global_sections_dp(DistancePathSheaf(testing::single_edge_graph())).size(), 1u);
  EXPECT_EQ(oracle::enumerate_simple_paths(one.graph()).size(), 1u);
  EXPECT_TRUE(oracle::enumerate_cycles(one.graph()).empty());

  PathSheaf split(testing::split_graph());
  EXPECT_TRUE(oracle::enumerate_global_sections_p(split).empty());
  EXPECT_TRUE(oracle::enumerate_global_sections_dp(DistancePathSheaf(testing::split_graph())).empty());
  EXPECT_TRUE(oracle::enumerate_simple_paths(split.graph()).empty());
}

// K4 has four triangles and three 4-cycles.
TEST(Oracle, CompleteInteriorCycleCount) {
  auto g = hub_graph(4);
  EXPECT_EQ(oracle::enumerate_cycles(*g).size(), 7u);
  // S-a, then any simple a..d route through K4: direct, via b or c (2), via both (2).
  EXPECT_EQ(oracle::enumerate_simple_paths(*g).size(), 5u);
}

TEST(Oracle, GuardsRejectLargeInputs) {
  EXPECT_THROW(
      {
        try {
          oracle::enumerate_global_sections_p(PathSheaf(hub_graph(10)));
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::TooLarge);
          throw;
        }
      },
      Error);
  EXPECT_THROW(oracle::enumerate_simple_paths(*hub_graph(11)), Error);
  EXPECT_THROW(oracle::enumerate_cycles(*hub_graph(11)), Error);
  EXPECT_NO_THROW(oracle::enumerate_cycles(*hub_graph(5)));
}

TEST(Oracle, ClassicalDijkstraExamples) {
  auto unit = oracle::classical_dijkstra(*ladder_graph());
  EXPECT_EQ(unit.distance, Rational(1));
  EXPECT_EQ(unit.path->edges, (std::vector<EdgeId>{"e_1"}));

  auto heavy = oracle::classical_dijkstra(*ladder_graph(Rational(5, 2)));
  EXPECT_EQ(heavy.distance, Rational(5, 2));

  auto split = oracle::classical_dijkstra(*testing::split_graph());
  EXPECT_FALSE(split.distance.has_value());
  EXPECT_FALSE(split.path.has_value());
}

TEST(Oracle, CycleFreeMinimumCostIsTheShortestDistance) {
  for (const auto& g : testing::small_corpus(40, 11)) {
    PathSheaf ps(g);
    auto ref = oracle::classical_dijkstra(*g);
    std::optional<Rational> best;
    for (const auto& s : oracle::enumerate_global_sections_p(ps)) {
      if (!active_cycles(ps, s).empty()) continue;
      Rational c = cost(ps, s);
      if (!best || c < *best) best = c;
    }
    EXPECT_EQ(best, ref.distance);
  }
}

TEST(Oracle, SectionsMatchPathsPlusDisjointCycles) {
  for (const auto& g : testing::small_corpus(40, 12)) {
    PathSheaf ps(g);
    auto sections = oracle::enumerate_global_sections_p(ps);
    std::size_t cycle_free = 0;
    for (const auto& s : sections) cycle_free += active_cycles(ps, s).empty();
    EXPECT_EQ(cycle_free, oracle::enumerate_simple_paths(*g).size());
  }
}

TEST(Oracle, MutatedSectionsAreRejected) {
  std::mt19937_64 rng(99);
  for (const auto& g : testing::small_corpus(30, 13)) {
    PathSheaf ps(g);
    for (const auto& s : oracle::enumerate_global_sections_p(ps)) {
      std::vector<VertexId> vs = g->vertices();
      const VertexId& v = vs[rng() % vs.size()];
      auto stalk = ps.vertex_stalk(v);
      if (stalk.size() < 2) continue;
      StalkValue other = stalk[rng() % stalk.size()];
      if (other == s.at(Cell::vertex(v))) other = stalk[(std::find(stalk.begin(), stalk.end(), other) - stalk.begin() + 1) % stalk.size()];
      EXPECT_FALSE(is_global_section(ps, s.with(Cell::vertex(v), other)));
    }
  }
}

TEST(Oracle, CanonicalLineOrdersVerticesThenEdges) {
  PathSheaf ps(testing::single_edge_graph());
  Assignment a{{Cell::edge("e"), Top{}}, {Cell::vertex("v_T"), ChosenEdge{"e"}}, {Cell::vertex("v_S"), ChosenEdge{"e"}}};
  EXPECT_EQ(oracle::canonical_line(ps, a), "v_S=e v_T=e e=top");
}

}  // namespace
}  // namespace sheafpath
