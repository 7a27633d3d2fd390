#include "sheafpath/pathfinding.hpp"

#include <algorithm>
#include <queue>

#include "sheafpath/error.hpp"

namespace sheafpath {

namespace {

Rational vertex_distance(const Assignment& s, const VertexId& v) { return *distance_of(s.at(Cell::vertex(v))); }

/// Swap the outgoing edge of the current vertex's value: the only component
/// at the source, the second component elsewhere.
StalkValue with_outgoing(const StalkValue& value, const EdgeId& e) {
  if (const auto* c = std::get_if<ChosenEdgeWithDist>(&value)) return ChosenEdgeWithDist{e, c->dist};
  const auto& p = std::get<OrderedPairWithDist>(value);
  return OrderedPairWithDist{p.incoming, e, p.dist};
}

Path active_walk(const Graph& g, const Assignment& s) {
  Path p;
  p.vertices.push_back(g.source());
  EdgeId next = std::get<ChosenEdgeWithDist>(s.at(Cell::vertex(g.source()))).edge;
  while (true) {
    VertexId here = g.edge(next).other(p.vertices.back());
    p.edges.push_back(next);
    p.vertices.push_back(here);
    if (here == g.sink()) return p;
    next = std::get<OrderedPairWithDist>(s.at(Cell::vertex(here))).outgoing;
  }
}

SolveResult run_dijkstra(const DistancePathSheaf& dps, std::vector<TentativeState>* trace) {
  const Graph& g = dps.graph();
  const VertexId& source = g.source();
  const VertexId& sink = g.sink();

  // Step 1.
  std::set<VertexId> visited;
  std::map<VertexId, Assignment> tentative;
  tentative.emplace(source, Assignment{{Cell::vertex(source), ChosenEdgeWithDist{g.incident_edges(source).front(), 0}}});
  VertexId current = source;
  Assignment current_section = tentative.at(source);

  while (true) {
    // Step 2: extend the current section along each edge to an unvisited neighbour.
    const StalkValue here = current_section.at(Cell::vertex(current));
    const Rational l = *distance_of(here);
    for (const auto& e : g.incident_edges(current)) {
      const VertexId& u = g.edge(e).other(current);
      if (visited.contains(u)) continue;

      const Rational d = l + g.weight(e);
      Assignment next = current_section.with(Cell::vertex(current), with_outgoing(here, e)).with(Cell::edge(e), Dist{d});
      if (u == sink) {
        next = next.with(Cell::vertex(u), ChosenEdgeWithDist{e, d});
      } else {
        const auto& around = g.incident_edges(u);
        const EdgeId& f = *std::find_if(around.begin(), around.end(), [&](const EdgeId& x) { return x != e; });
        next = next.with(Cell::vertex(u), OrderedPairWithDist{e, f, d});
      }

      auto known = tentative.find(u);
      if (known == tentative.end()) {
        tentative.emplace(u, std::move(next));
      } else if (d < vertex_distance(known->second, u)) {
        known->second = std::move(next);
      }
    }

    // Step 3.
    visited.insert(current);
    if (trace != nullptr) trace->push_back(TentativeState{visited, tentative, current, current_section});

    // Step 4.
    std::optional<VertexId> least;
    Rational least_dist;
    for (const auto& [v, s] : tentative) {
      if (visited.contains(v)) continue;
      Rational dv = vertex_distance(s, v);
      // std::map iterates ids in order, so strict < keeps the smallest id on ties.
      if (!least || dv < least_dist) {
        least = v;
        least_dist = dv;
      }
    }
    if (!least) return SolveResult{std::nullopt, visited.size()};

    auto at_sink = tentative.find(sink);
    if (at_sink != tentative.end() && vertex_distance(at_sink->second, sink) <= least_dist) {
      Assignment::Map values = at_sink->second.values();
      for (const auto& v : g.vertices()) values.try_emplace(Cell::vertex(v), Bottom{});
      for (const auto& e : g.edges()) values.try_emplace(Cell::edge(e.id), Bottom{});
      Assignment global(std::move(values));
      Path path = active_walk(g, global);
      Rational length = vertex_distance(global, sink);
      return SolveResult{ShortestPath{std::move(global), std::move(path), std::move(length)}, visited.size()};
    }

    current = *least;
    current_section = tentative.at(current);
  }
}

struct Frontier {
  Rational priority;
  Rational travelled;
  Path path;
  Assignment section;
};

// Min-heap on (priority, end vertex id, edge sequence).
struct FrontierAfter {
  bool operator()(const Frontier& a, const Frontier& b) const {
    if (a.priority != b.priority) return a.priority > b.priority;
    if (a.path.vertices.back() != b.path.vertices.back()) return a.path.vertices.back() > b.path.vertices.back();
    return a.path.edges > b.path.edges;
  }
};

}  // namespace

SolveResult dijkstra_dp(const DistancePathSheaf& dps) { return run_dijkstra(dps, nullptr); }

std::vector<TentativeState> tentative_trace(const DistancePathSheaf& dps) {
  std::vector<TentativeState> trace;
  run_dijkstra(dps, &trace);
  return trace;
}

CostFunction plain_cost(PathSheafPtr ps) {
  return [ps](const Assignment& s, const VertexId&) { return cost(*ps, s); };
}

CostFunction astar_cost(PathSheafPtr ps, std::map<VertexId, Rational> heuristic) {
  return [ps, h = std::move(heuristic)](const Assignment& s, const VertexId& v) {
    auto it = h.find(v);
    return cost(*ps, s) + (it == h.end() ? Rational(0) : it->second);
  };
}

SolveResult search_p(const PathSheaf& ps, const CostFunction& cost_fn) {
  const Graph& g = ps.graph();
  std::priority_queue<Frontier, std::vector<Frontier>, FrontierAfter> frontier;
  std::map<VertexId, Rational> best;

  Path start{{}, {g.source()}};
  Assignment seed = path_to_section(ps, start, false);
  best.emplace(g.source(), 0);
  frontier.push(Frontier{cost_fn(seed, g.source()), 0, start, seed});

  std::size_t expanded = 0;
  while (!frontier.empty()) {
    Frontier top = frontier.top();
    frontier.pop();
    const VertexId v = top.path.vertices.back();
    if (top.travelled > best.at(v)) continue;
    ++expanded;

    if (v == g.sink()) {
      Assignment global = path_to_section(ps, top.path, true);
      return SolveResult{ShortestPath{std::move(global), top.path, top.travelled}, expanded};
    }

    for (const auto& e : g.incident_edges(v)) {
      const VertexId& u = g.edge(e).other(v);
      if (std::find(top.path.vertices.begin(), top.path.vertices.end(), u) != top.path.vertices.end()) continue;
      // Passing through the source would break the path's hypotheses; the
      // sink is only ever an endpoint because reaching it ends the search.
      if (u == g.source()) continue;

      Path longer = top.path;
      longer.edges.push_back(e);
      longer.vertices.push_back(u);
      Assignment section = path_to_section(ps, longer, false);
      Rational travelled = cost(ps, section);

      auto known = best.find(u);
      if (known != best.end() && !(travelled < known->second)) continue;
      best.insert_or_assign(u, travelled);
      Rational priority = cost_fn(section, u);
      frontier.push(Frontier{std::move(priority), std::move(travelled), std::move(longer), std::move(section)});
    }
  }
  return SolveResult{std::nullopt, expanded};
}

}  // namespace sheafpath
