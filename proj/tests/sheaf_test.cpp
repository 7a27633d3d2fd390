#include <gtest/gtest.h>

#include <random>

#include "sheafpath/error.hpp"
#include "sheafpath/path_sheaf.hpp"
#include "support/fixtures.hpp"
#include "support/random_graphs.hpp"

namespace sheafpath {
namespace {

using testing::ladder_graph;
using testing::ladder_section_s1;

// Independent reading of the path-sheaf maps: an edge is Top exactly when the
// vertex value names it.
bool names(const StalkValue& x, const EdgeId& e) {
  if (const auto* c = std::get_if<ChosenEdge>(&x)) return c->edge == e;
  if (const auto* p = std::get_if<EdgePair>(&x)) return p->lo == e || p->hi == e;
  return false;
}

std::vector<std::pair<VertexId, EdgeId>> brute_inconsistent(const Graph& g, const Assignment& a) {
  std::vector<std::pair<VertexId, EdgeId>> out;
  for (const auto& e : g.edges()) {
    const StalkValue* on_edge = a.find(Cell::edge(e.id));
    if (on_edge == nullptr) continue;
    for (const auto& v : {e.a, e.b}) {
      const StalkValue* on_vertex = a.find(Cell::vertex(v));
      if (on_vertex == nullptr) continue;
      bool top = std::holds_alternative<Top>(*on_edge);
      if (names(*on_vertex, e.id) != top) out.emplace_back(v, e.id);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(IsSection, LadderS1IsGlobal) {
  PathSheaf ps(ladder_graph());
  EXPECT_TRUE(is_section(ps, ladder_section_s1()));
  EXPECT_TRUE(is_global_section(ps, ladder_section_s1()));
}

TEST(IsSection, FlippingOneEdgeBreaksIt) {
  PathSheaf ps(ladder_graph());
  Assignment broken = ladder_section_s1().with(Cell::edge("e_4"), Bottom{});
  EXPECT_FALSE(is_section(ps, broken));
  EXPECT_FALSE(is_global_section(ps, broken));
}

TEST(IsSection, EmptyAssignmentIsVacuous) {
  PathSheaf ps(ladder_graph());
  EXPECT_TRUE(is_section(ps, Assignment{}));
  EXPECT_FALSE(is_global_section(ps, Assignment{}));
  EXPECT_TRUE(inconsistent_pairs(ps, Assignment{}).empty());
}

TEST(IsSection, StalkMismatchIsAnError) {
  PathSheaf ps(ladder_graph());
  for (const auto& bad : {Assignment{{Cell::vertex("v_S"), Bottom{}}},                     // terminal needs an edge
                          Assignment{{Cell::vertex("v_S"), ChosenEdge{"e_3"}}},            // not incident
                          Assignment{{Cell::vertex("v_3"), EdgePair::of("e_2", "e_6")}},   // not incident
                          Assignment{{Cell::edge("e_1"), Dist{1}}},                        // wrong sheaf
                          Assignment{{Cell::vertex("ghost"), Bottom{}}}}) {
    try {
      is_section(ps, bad);
      ADD_FAILURE() << "accepted " << to_string(bad.begin()->second);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::StalkMismatch);
    }
  }
}

TEST(InconsistentPairs, LadderExamples) {
  PathSheaf ps(ladder_graph());
  EXPECT_TRUE(inconsistent_pairs(ps, ladder_section_s1()).empty());
  Assignment broken = ladder_section_s1().with(Cell::edge("e_4"), Bottom{});
  auto expected = brute_inconsistent(ps.graph(), broken);
  ASSERT_EQ(expected, (std::vector<std::pair<VertexId, EdgeId>>{{"v_3", "e_4"}, {"v_4", "e_4"}}));
  EXPECT_EQ(inconsistent_pairs(ps, broken), expected);
}

TEST(Extend, LadderExamples) {
  PathSheaf ps(ladder_graph());
  Assignment start{{Cell::vertex("v_S"), ChosenEdge{"e_2"}}, {Cell::edge("e_2"), Top{}}};

  Extension good = extend(ps, start, Cell::vertex("v_3"), EdgePair::of("e_2", "e_4"));
  EXPECT_TRUE(good.consistent);
  EXPECT_EQ(good.assignment.size(), 3u);

  Extension bad = extend(ps, start, Cell::vertex("v_3"), EdgePair::of("e_4", "e_5"));
  EXPECT_FALSE(bad.consistent);
  EXPECT_EQ(ps.restrict("v_3", "e_2", EdgePair::of("e_4", "e_5")), StalkValue(Bottom{}));

  Extension lone = extend(ps, Assignment{}, Cell::edge("e_1"), Top{});
  EXPECT_TRUE(lone.consistent);

  EXPECT_EQ(start.size(), 2u);
}

TEST(Extend, Errors) {
  PathSheaf ps(ladder_graph());
  Assignment start{{Cell::vertex("v_S"), ChosenEdge{"e_2"}}};
  try {
    extend(ps, start, Cell::vertex("v_S"), ChosenEdge{"e_1"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CellAlreadyAssigned);
  }
  try {
    extend(ps, start, Cell::edge("e_2"), ChosenEdge{"e_1"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StalkMismatch);
  }
}

// Random path-sheaf assignments on random graphs: each cell independently
// unassigned or given a random stalk value.
Assignment random_assignment(const PathSheaf& ps, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution take(density);
  std::bernoulli_distribution flip(0.5);
  Assignment::Map values;
  for (const auto& v : ps.graph().vertices()) {
    if (!take(rng)) continue;
    auto stalk = ps.vertex_stalk(v);
    values.emplace(Cell::vertex(v), stalk[std::uniform_int_distribution<std::size_t>(0, stalk.size() - 1)(rng)]);
  }
  for (const auto& e : ps.graph().edges()) {
    if (!take(rng)) continue;
    values.emplace(Cell::edge(e.id), flip(rng) ? StalkValue(Top{}) : StalkValue(Bottom{}));
  }
  return Assignment(std::move(values));
}

TEST(SheafProperties, SectionIffNoInconsistentPairs) {
  std::mt19937_64 rng(3);
  int sections = 0;
  for (int i = 0; i < 400; ++i) {
    PathSheaf ps(testing::random_graph(rng, {}));
    Assignment a = random_assignment(ps, rng, i % 2 == 0 ? 0.3 : 0.8);
    auto bad = inconsistent_pairs(ps, a);
    EXPECT_EQ(bad, brute_inconsistent(ps.graph(), a));
    EXPECT_EQ(is_section(ps, a), bad.empty());
    sections += bad.empty();
  }
  EXPECT_GT(sections, 20);
}

TEST(SheafProperties, RestrictingASectionKeepsItASection) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    PathSheaf ps(testing::random_graph(rng, {}));
    Assignment a = random_assignment(ps, rng, 0.5);
    if (!is_section(ps, a)) continue;
    std::set<Cell> keep;
    std::bernoulli_distribution coin(0.5);
    for (const auto& cell : a.domain()) {
      if (coin(rng)) keep.insert(cell);
    }
    EXPECT_TRUE(is_section(ps, a.restricted_to(keep)));
  }
}

TEST(SheafProperties, ExtendLeavesInputUntouched) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    PathSheaf ps(testing::random_graph(rng, {}));
    Assignment a = random_assignment(ps, rng, 0.4);
    const Assignment before = a;
    for (const auto& e : ps.graph().edges()) {
      if (a.contains(Cell::edge(e.id))) continue;
      Extension x = extend(ps, a, Cell::edge(e.id), Top{});
      EXPECT_TRUE(x.assignment.contains(Cell::edge(e.id)));
      EXPECT_EQ(x.consistent, is_section(ps, x.assignment));
    }
    EXPECT_EQ(a, before);
  }
}

}  // namespace
}  // namespace sheafpath
