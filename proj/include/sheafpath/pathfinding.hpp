#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sheafpath/distance_path_sheaf.hpp"
#include "sheafpath/path_sheaf.hpp"

namespace sheafpath {

struct ShortestPath {
  Assignment global_section;
  Path path;
  Rational length;
};

/// Outcome of a solve. An empty `shortest` means no source-to-sink path
/// exists. `expanded` counts settled vertices (distance solver) or expanded
/// tentative sections (path-sheaf search).
struct SolveResult {
  std::optional<ShortestPath> shortest;
  std::size_t expanded = 0;

  bool found() const { return shortest.has_value(); }
};

/// One completed loop of the distance-sheaf Dijkstra, taken right after the
/// current vertex is marked visited.
struct TentativeState {
  std::set<VertexId> visited;
  std::map<VertexId, Assignment> tentative;
  VertexId current;
  Assignment current_section;
};

/// Dijkstra over the distance path sheaf. Each vertex v carries a tentative
/// local section s_v whose active walk runs from the source to v, and the
/// current section is extended one edge at a time. Ties (the first source
/// edge, the next current vertex) go to the smallest id. Stops as soon as the
/// sink's distance is <= every other unvisited tentative distance. On success
/// the sink's section is completed with Bottom into a global section.
SolveResult dijkstra_dp(const DistancePathSheaf& dps);

/// The same run, returning a snapshot after every loop.
std::vector<TentativeState> tentative_trace(const DistancePathSheaf& dps);

/// Orders local sections during search_p. The vertex is the far end of the
/// section's active path.
using CostFunction = std::function<Rational(const Assignment&, const VertexId&)>;

/// c(s): total weight of active edges.
CostFunction plain_cost(PathSheafPtr ps);

/// c(s) + h(v). Vertices missing from `heuristic` get 0. The heuristic must
/// be nonnegative and never overestimate for search_p's result to be optimal;
/// this is not checked.
CostFunction astar_cost(PathSheafPtr ps, std::map<VertexId, Rational> heuristic);

/// Best-first search over local sections of the path sheaf. Every tentative
/// section activates a simple path from the source; extending by an edge that
/// would revisit a vertex is never considered. A section is kept only if it
/// reaches its end vertex more cheaply than any earlier one. The first section
/// to reach the sink is completed into a global section.
SolveResult search_p(const PathSheaf& ps, const CostFunction& cost_fn);

}  // namespace sheafpath
