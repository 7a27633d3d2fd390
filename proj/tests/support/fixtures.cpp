#include "support/fixtures.hpp"

namespace sheafpath::testing {

GraphPtr ladder_graph(const Rational& w_e1) {
  return build_graph({"v_S", "v_T", "v_3", "v_4", "v_5", "v_6"},
                     {
                         {"e_1", "v_S", "v_T", w_e1},
                         {"e_2", "v_S", "v_3", 1},
                         {"e_3", "v_T", "v_4", 1},
                         {"e_4", "v_3", "v_4", 1},
                         {"e_5", "v_3", "v_5", 1},
                         {"e_6", "v_4", "v_6", 1},
                         {"e_7", "v_5", "v_6", 1},
                     },
                     "v_S", "v_T");
}

GraphPtr single_edge_graph(const Rational& w) { return build_graph({"v_S", "v_T"}, {{"e", "v_S", "v_T", w}}, "v_S", "v_T"); }

GraphPtr split_graph() {
  return build_graph({"v_S", "a", "b", "v_T", "c", "d"},
                     {
                         {"e_sa", "v_S", "a", 1},
                         {"e_sb", "v_S", "b", 2},
                         {"e_ab", "a", "b", 1},
                         {"e_tc", "v_T", "c", 1},
                         {"e_td", "v_T", "d", 3},
                         {"e_cd", "c", "d", 1},
                     },
                     "v_S", "v_T");
}

Assignment ladder_section_s1() {
  return Assignment{
      {Cell::vertex("v_S"), ChosenEdge{"e_2"}},          {Cell::vertex("v_T"), ChosenEdge{"e_3"}},
      {Cell::vertex("v_3"), EdgePair::of("e_2", "e_4")}, {Cell::vertex("v_4"), EdgePair::of("e_3", "e_4")},
      {Cell::vertex("v_5"), Bottom{}},                   {Cell::vertex("v_6"), Bottom{}},
      {Cell::edge("e_1"), Bottom{}},                     {Cell::edge("e_2"), Top{}},
      {Cell::edge("e_3"), Top{}},                        {Cell::edge("e_4"), Top{}},
      {Cell::edge("e_5"), Bottom{}},                     {Cell::edge("e_6"), Bottom{}},
      {Cell::edge("e_7"), Bottom{}},
  };
}

Assignment ladder_section_s2() {
  return Assignment{
      {Cell::vertex("v_S"), ChosenEdge{"e_1"}},          {Cell::vertex("v_T"), ChosenEdge{"e_1"}},
      {Cell::vertex("v_3"), EdgePair::of("e_4", "e_5")}, {Cell::vertex("v_4"), EdgePair::of("e_4", "e_6")},
      {Cell::vertex("v_5"), EdgePair::of("e_5", "e_7")}, {Cell::vertex("v_6"), EdgePair::of("e_6", "e_7")},
      {Cell::edge("e_1"), Top{}},                        {Cell::edge("e_2"), Bottom{}},
      {Cell::edge("e_3"), Bottom{}},                     {Cell::edge("e_4"), Top{}},
      {Cell::edge("e_5"), Top{}},                        {Cell::edge("e_6"), Top{}},
      {Cell::edge("e_7"), Top{}},
  };
}

}  // namespace sheafpath::testing
