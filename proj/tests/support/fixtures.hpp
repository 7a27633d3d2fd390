#pragma once

#include "sheafpath/graph.hpp"
#include "sheafpath/sheaf.hpp"

namespace sheafpath::testing {

/// The six-vertex ladder: e_1={v_S,v_T}, e_2={v_S,v_3}, e_3={v_T,v_4},
/// e_4={v_3,v_4}, e_5={v_3,v_5}, e_6={v_4,v_6}, e_7={v_5,v_6}. Unit weights
/// except e_1.
GraphPtr ladder_graph(const Rational& w_e1 = 1);

/// v_S -- v_T with one edge "e".
GraphPtr single_edge_graph(const Rational& w = 5);

/// Source and sink in separate triangles.
GraphPtr split_graph();

/// The path-sheaf section activating (e_2, e_4, e_3) on the ladder.
Assignment ladder_section_s1();

/// The path-sheaf section activating (e_1) plus the cycle through v_3..v_6.
Assignment ladder_section_s2();

}  // namespace sheafpath::testing
