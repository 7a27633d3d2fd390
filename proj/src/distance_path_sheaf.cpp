#include "sheafpath/distance_path_sheaf.hpp"

#include <algorithm>
#include <map>

#include "sheafpath/error.hpp"

namespace sheafpath {

bool DistancePathSheaf::in_stalk(const Cell& cell, const StalkValue& value) const {
  const Graph& g = graph();
  if (cell.is_edge()) {
    if (!g.has_edge(cell.id)) return false;
    if (std::holds_alternative<Bottom>(value)) return true;
    const auto* d = std::get_if<Dist>(&value);
    return d != nullptr && d->value > 0;
  }
  if (!g.has_vertex(cell.id)) return false;
  const auto& incident = g.incident_edges(cell.id);
  auto is_incident = [&](const EdgeId& e) { return std::binary_search(incident.begin(), incident.end(), e); };

  if (g.is_terminal(cell.id)) {
    const auto* chosen = std::get_if<ChosenEdgeWithDist>(&value);
    if (chosen == nullptr || !is_incident(chosen->edge)) return false;
    return cell.id == g.source() ? chosen->dist == 0 : chosen->dist > 0;
  }
  if (std::holds_alternative<Bottom>(value)) return true;
  const auto* pair = std::get_if<OrderedPairWithDist>(&value);
  return pair != nullptr && pair->incoming != pair->outgoing && is_incident(pair->incoming) &&
         is_incident(pair->outgoing) && pair->dist > 0;
}

std::vector<StalkValue> DistancePathSheaf::vertex_stalk_sample(const VertexId& v,
                                                               const std::vector<Rational>& dists) const {
  const Graph& g = graph();
  const auto& incident = g.incident_edges(v);
  std::vector<StalkValue> out;
  if (v == g.source()) {
    for (const auto& e : incident) out.emplace_back(ChosenEdgeWithDist{e, 0});
    return out;
  }
  for (const auto& x : dists) {
    if (x <= 0) continue;
    if (v == g.sink()) {
      for (const auto& e : incident) out.emplace_back(ChosenEdgeWithDist{e, x});
      continue;
    }
    for (const auto& in : incident) {
      for (const auto& o : incident) {
        if (in != o) out.emplace_back(OrderedPairWithDist{in, o, x});
      }
    }
  }
  if (!g.is_terminal(v)) out.emplace_back(Bottom{});
  return out;
}

StalkValue DistancePathSheaf::restrict_checked(const VertexId& v, const EdgeId& e, const StalkValue& value) const {
  if (const auto* chosen = std::get_if<ChosenEdgeWithDist>(&value)) {
    if (chosen->edge != e) return Bottom{};
    return v == graph().source() ? Dist{graph().weight(e)} : Dist{chosen->dist};
  }
  if (const auto* pair = std::get_if<OrderedPairWithDist>(&value)) {
    if (pair->incoming == e) return Dist{pair->dist};
    if (pair->outgoing == e) return Dist{pair->dist + graph().weight(e)};
    return Bottom{};
  }
  return Bottom{};
}

DistancePathSheafPtr build_distance_path_sheaf(GraphPtr g) {
  return std::make_shared<const DistancePathSheaf>(std::move(g));
}

std::optional<Rational> distance_of(const StalkValue& value) {
  if (const auto* c = std::get_if<ChosenEdgeWithDist>(&value)) return c->dist;
  if (const auto* p = std::get_if<OrderedPairWithDist>(&value)) return p->dist;
  if (const auto* d = std::get_if<Dist>(&value)) return d->value;
  return std::nullopt;
}

Assignment directed_path_to_section(const DistancePathSheaf& dps, const Path& p, bool make_global) {
  const Graph& g = dps.graph();
  if (!validate_path(g, p) || p.is_cycle()) throw Error(ErrorCode::InvalidPath, "not a path of the graph");
  if (p.vertices.front() != g.source()) {
    throw Error(ErrorCode::PathDoesNotStartAtSource, "path starts at '" + p.vertices.front() + "'");
  }
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
    if (g.is_terminal(p.vertices[i])) {
      throw Error(ErrorCode::PathTouchesSourceOrSinkInteriorly, "path passes through '" + p.vertices[i] + "'");
    }
  }
  const VertexId& last = p.vertices.back();
  if (make_global && last != g.sink()) {
    throw Error(ErrorCode::NotSourceToSink, "path ends at '" + last + "', not the sink");
  }

  const auto& source_edges = g.incident_edges(g.source());
  Assignment::Map values;
  values.emplace(Cell::vertex(g.source()),
                 ChosenEdgeWithDist{p.edges.empty() ? source_edges.front() : p.edges.front(), 0});

  Rational dist = 0;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    dist += g.weight(p.edges[i]);
    values.emplace(Cell::edge(p.edges[i]), Dist{dist});
    const VertexId& v = p.vertices[i + 1];
    if (v == g.sink()) {
      values.emplace(Cell::vertex(v), ChosenEdgeWithDist{p.edges[i], dist});
    } else if (i + 1 < p.edges.size()) {
      values.emplace(Cell::vertex(v), OrderedPairWithDist{p.edges[i], p.edges[i + 1], dist});
    } else {
      const auto& incident = g.incident_edges(v);
      auto out = std::find_if(incident.begin(), incident.end(), [&](const EdgeId& e) { return e != p.edges[i]; });
      values.emplace(Cell::vertex(v), OrderedPairWithDist{p.edges[i], *out, dist});
    }
  }

  if (make_global) {
    for (const auto& v : g.vertices()) values.try_emplace(Cell::vertex(v), Bottom{});
    for (const auto& e : g.edges()) values.try_emplace(Cell::edge(e.id), Bottom{});
  }
  return Assignment(std::move(values));
}

bool assert_no_active_cycle(const DistancePathSheaf& dps, const Assignment& s) {
  if (!is_global_section(dps, s)) throw Error(ErrorCode::NotGlobalSection, "assignment is not a global section");
  const Graph& g = dps.graph();

  // Union-find over active vertices; an active edge joining two vertices that
  // are already connected closes a cycle.
  std::map<VertexId, VertexId> parent;
  for (const auto& v : g.vertices()) parent[v] = v;
  auto root = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges()) {
    if (is_bottom(s.at(Cell::edge(e.id)))) continue;
    VertexId ra = root(e.a);
    VertexId rb = root(e.b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

}  // namespace sheafpath
