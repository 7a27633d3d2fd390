#include "sheafpath/path_sheaf.hpp"

#include <algorithm>
#include <set>

#include "sheafpath/error.hpp"

namespace sheafpath {

bool PathSheaf::in_stalk(const Cell& cell, const StalkValue& value) const {
  const Graph& g = graph();
  if (cell.is_edge()) {
    return g.has_edge(cell.id) && (std::holds_alternative<Bottom>(value) || std::holds_alternative<Top>(value));
  }
  if (!g.has_vertex(cell.id)) return false;
  const auto& incident = g.incident_edges(cell.id);
  auto is_incident = [&](const EdgeId& e) { return std::binary_search(incident.begin(), incident.end(), e); };

  if (g.is_terminal(cell.id)) {
    const auto* chosen = std::get_if<ChosenEdge>(&value);
    return chosen != nullptr && is_incident(chosen->edge);
  }
  if (std::holds_alternative<Bottom>(value)) return true;
  const auto* pair = std::get_if<EdgePair>(&value);
  return pair != nullptr && pair->lo < pair->hi && is_incident(pair->lo) && is_incident(pair->hi);
}

std::vector<StalkValue> PathSheaf::vertex_stalk(const VertexId& v) const {
  const auto& incident = graph().incident_edges(v);
  std::vector<StalkValue> out;
  if (graph().is_terminal(v)) {
    for (const auto& e : incident) out.emplace_back(ChosenEdge{e});
    return out;
  }
  out.emplace_back(Bottom{});
  for (std::size_t i = 0; i < incident.size(); ++i) {
    for (std::size_t j = i + 1; j < incident.size(); ++j) out.emplace_back(EdgePair::of(incident[i], incident[j]));
  }
  return out;
}

StalkValue PathSheaf::restrict_checked(const VertexId&, const EdgeId& e, const StalkValue& value) const {
  if (const auto* chosen = std::get_if<ChosenEdge>(&value)) {
    return chosen->edge == e ? StalkValue(Top{}) : StalkValue(Bottom{});
  }
  if (const auto* pair = std::get_if<EdgePair>(&value)) {
    return pair->contains(e) ? StalkValue(Top{}) : StalkValue(Bottom{});
  }
  return Bottom{};
}

PathSheafPtr build_path_sheaf(GraphPtr g) { return std::make_shared<const PathSheaf>(std::move(g)); }

Path section_to_path(const PathSheaf& ps, const Assignment& s) {
  if (!is_global_section(ps, s)) throw Error(ErrorCode::NotGlobalSection, "assignment is not a global section");
  const Graph& g = ps.graph();

  Path p;
  p.vertices.push_back(g.source());
  EdgeId next = std::get<ChosenEdge>(s.at(Cell::vertex(g.source()))).edge;
  while (true) {
    VertexId here = g.edge(next).other(p.vertices.back());
    p.edges.push_back(next);
    p.vertices.push_back(here);
    if (here == g.sink()) break;
    // Each active interior vertex has exactly two active edges, and the walk
    // cannot revisit a vertex, so this terminates at the sink.
    const auto& pair = std::get<EdgePair>(s.at(Cell::vertex(here)));
    next = pair.lo == next ? pair.hi : pair.lo;
  }
  return p;
}

Assignment path_to_section(const PathSheaf& ps, const Path& p, bool make_global) {
  const Graph& g = ps.graph();
  if (!validate_path(g, p)) throw Error(ErrorCode::InvalidPath, "not a path or cycle of the graph");

  Assignment::Map values;
  const std::size_t n = p.edges.size();

  if (p.is_cycle()) {
    for (const auto& v : p.vertices) {
      if (g.is_terminal(v)) {
        throw Error(ErrorCode::PathTouchesSourceOrSinkInteriorly, "cycle passes through '" + v + "'");
      }
    }
    if (make_global) throw Error(ErrorCode::NotSourceToSink, "a cycle does not join source and sink");
    for (std::size_t i = 0; i < n; ++i) {
      values.emplace(Cell::edge(p.edges[i]), Top{});
      values.emplace(Cell::vertex(p.vertices[i]), EdgePair::of(p.edges[(i + n - 1) % n], p.edges[i]));
    }
    return Assignment(std::move(values));
  }

  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
    if (g.is_terminal(p.vertices[i])) {
      throw Error(ErrorCode::PathTouchesSourceOrSinkInteriorly, "path passes through '" + p.vertices[i] + "'");
    }
  }
  const VertexId& first = p.vertices.front();
  const VertexId& last = p.vertices.back();
  if (make_global) {
    bool joins = (first == g.source() && last == g.sink()) || (first == g.sink() && last == g.source());
    if (!joins) throw Error(ErrorCode::NotSourceToSink, "path runs from '" + first + "' to '" + last + "'");
  }

  for (const auto& e : p.edges) values.emplace(Cell::edge(e), Top{});
  for (std::size_t i = 1; i < n; ++i) values.emplace(Cell::vertex(p.vertices[i]), EdgePair::of(p.edges[i - 1], p.edges[i]));

  // Endpoint value: the single path edge at a terminal, otherwise that edge
  // plus the smallest other incident edge. A zero-length path has no path
  // edge, so it uses the smallest incident edge(s).
  auto endpoint_value = [&](const VertexId& v, const EdgeId* path_edge) -> StalkValue {
    const auto& incident = g.incident_edges(v);
    std::vector<EdgeId> chosen;
    if (path_edge != nullptr) chosen.push_back(*path_edge);
    std::size_t want = g.is_terminal(v) ? 1 : 2;
    for (const auto& e : incident) {
      if (chosen.size() == want) break;
      if (path_edge == nullptr || e != *path_edge) chosen.push_back(e);
    }
    if (want == 1) return ChosenEdge{chosen[0]};
    return EdgePair::of(chosen[0], chosen[1]);
  };

  if (n == 0) {
    values.emplace(Cell::vertex(first), endpoint_value(first, nullptr));
  } else {
    values.emplace(Cell::vertex(first), endpoint_value(first, &p.edges.front()));
    values.emplace(Cell::vertex(last), endpoint_value(last, &p.edges.back()));
  }

  if (make_global) {
    for (const auto& v : g.vertices()) values.try_emplace(Cell::vertex(v), Bottom{});
    for (const auto& e : g.edges()) values.try_emplace(Cell::edge(e.id), Bottom{});
  }
  return Assignment(std::move(values));
}

Rational cost(const PathSheaf& ps, const Assignment& s) {
  if (!is_section(ps, s)) throw Error(ErrorCode::NotASection, "cost is defined on local sections only");
  Rational total = 0;
  for (const auto& [cell, value] : s) {
    if (cell.is_edge() && std::holds_alternative<Top>(value)) total += ps.graph().weight(cell.id);
  }
  return total;
}

std::vector<Path> active_cycles(const PathSheaf& ps, const Assignment& s) {
  Path main = section_to_path(ps, s);
  const Graph& g = ps.graph();
  std::set<VertexId> used(main.vertices.begin(), main.vertices.end());

  std::vector<Path> out;
  for (const auto& start : g.vertices()) {
    if (used.contains(start)) continue;
    const auto* pair = std::get_if<EdgePair>(&s.at(Cell::vertex(start)));
    if (pair == nullptr) continue;
    // Interior active vertices have active degree two and the component
    // avoids the terminals, so walking it closes a cycle.
    Path cycle;
    cycle.vertices.push_back(start);
    EdgeId next = pair->lo;
    while (true) {
      VertexId here = g.edge(next).other(cycle.vertices.back());
      cycle.edges.push_back(next);
      cycle.vertices.push_back(here);
      used.insert(here);
      if (here == start) break;
      const auto& p = std::get<EdgePair>(s.at(Cell::vertex(here)));
      next = p.lo == next ? p.hi : p.lo;
    }
    out.push_back(canonical_cycle(g, cycle));
  }
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) { return a.vertices < b.vertices; });
  return out;
}

}  // namespace sheafpath
