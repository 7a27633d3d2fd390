#include "sheafpath/graph.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "sheafpath/error.hpp"

namespace sheafpath {

const Edge& Graph::edge(const EdgeId& e) const {
  auto it = edge_index_.find(e);
  if (it == edge_index_.end()) throw Error(ErrorCode::UnknownEdge, "no edge '" + e + "'");
  return edges_[it->second];
}

const std::vector<EdgeId>& Graph::incident_edges(const VertexId& v) const {
  auto it = incident_.find(v);
  if (it == incident_.end()) throw Error(ErrorCode::UnknownVertex, "no vertex '" + v + "'");
  return it->second;
}

std::optional<EdgeId> Graph::edge_between(const VertexId& u, const VertexId& v) const {
  for (const auto& e : incident_edges(u)) {
    if (edge(e).other(u) == v) return e;
  }
  return std::nullopt;
}

GraphPtr build_graph(std::vector<VertexId> vertices, std::vector<EdgeSpec> edges, VertexId source,
                     VertexId sink) {
  std::shared_ptr<Graph> g(new Graph());

  for (auto& v : vertices) {
    if (g->vertex_index_.contains(v)) throw Error(ErrorCode::DuplicateId, "vertex '" + v + "' declared twice");
    g->vertex_index_.emplace(v, g->vertices_.size());
    g->incident_.emplace(v, std::vector<EdgeId>{});
    g->vertices_.push_back(std::move(v));
  }
  if (source == sink) throw Error(ErrorCode::SourceEqualsSink, "source and sink are both '" + source + "'");
  if (!g->has_vertex(source)) throw Error(ErrorCode::UnknownVertex, "source '" + source + "' is not a vertex");
  if (!g->has_vertex(sink)) throw Error(ErrorCode::UnknownVertex, "sink '" + sink + "' is not a vertex");
  g->source_ = std::move(source);
  g->sink_ = std::move(sink);

  std::set<std::pair<VertexId, VertexId>> joined;
  for (auto& spec : edges) {
    if (g->edge_index_.contains(spec.id)) {
      throw Error(ErrorCode::DuplicateId, "edge '" + spec.id + "' declared twice");
    }
    for (const auto* end : {&spec.a, &spec.b}) {
      if (!g->has_vertex(*end)) {
        throw Error(ErrorCode::UnknownEndpoint, "edge '" + spec.id + "' names unknown vertex '" + *end + "'");
      }
    }
    if (spec.a == spec.b) throw Error(ErrorCode::SelfLoop, "edge '" + spec.id + "' is a loop at '" + spec.a + "'");
    if (spec.weight <= 0) {
      throw Error(ErrorCode::NonPositiveWeight,
                  "edge '" + spec.id + "' has weight " + to_string(spec.weight) + ", must be positive");
    }
    auto key = std::minmax(spec.a, spec.b);
    if (!joined.emplace(key.first, key.second).second) {
      throw Error(ErrorCode::ParallelEdge,
                  "edge '" + spec.id + "' duplicates an edge between '" + spec.a + "' and '" + spec.b + "'");
    }
    g->edge_index_.emplace(spec.id, g->edges_.size());
    g->incident_[spec.a].push_back(spec.id);
    g->incident_[spec.b].push_back(spec.id);
    g->edges_.push_back(Edge{std::move(spec.id), std::move(spec.a), std::move(spec.b), std::move(spec.weight)});
  }

  for (auto& [v, inc] : g->incident_) std::sort(inc.begin(), inc.end());

  for (const auto& v : g->vertices_) {
    std::size_t need = g->is_terminal(v) ? 1 : 2;
    std::size_t have = g->incident_[v].size();
    if (have < need) {
      throw Error(ErrorCode::DegreeViolation, "vertex '" + v + "' has degree " + std::to_string(have) +
                                                  ", needs at least " + std::to_string(need));
    }
  }
  return g;
}

std::vector<EdgeId> incident_edges(const Graph& g, const VertexId& v) { return g.incident_edges(v); }

bool validate_path(const Graph& g, const Path& p) {
  if (p.vertices.size() != p.edges.size() + 1) return false;
  for (const auto& v : p.vertices) {
    if (!g.has_vertex(v)) return false;
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (!g.has_edge(p.edges[i])) return false;
    const Edge& e = g.edge(p.edges[i]);
    if (!(e.touches(p.vertices[i]) && e.other(p.vertices[i]) == p.vertices[i + 1])) return false;
  }

  // A closed walk counts as a cycle only if it has at least three edges;
  // shorter closed walks reuse an edge in a simple graph.
  std::size_t distinct_span = p.vertices.size();
  if (p.is_cycle()) {
    if (p.edges.size() < 3) return false;
    distinct_span -= 1;
  }
  std::set<VertexId> seen(p.vertices.begin(), p.vertices.begin() + static_cast<std::ptrdiff_t>(distinct_span));
  return seen.size() == distinct_span;
}

Path walk_edges(const Graph& g, const VertexId& start, const std::vector<EdgeId>& edges) {
  if (!g.has_vertex(start)) throw Error(ErrorCode::UnknownVertex, "no vertex '" + start + "'");
  Path p;
  p.vertices.push_back(start);
  for (const auto& id : edges) {
    if (!g.has_edge(id)) throw Error(ErrorCode::InvalidPath, "unknown edge '" + id + "' in path");
    const Edge& e = g.edge(id);
    if (!e.touches(p.vertices.back())) {
      throw Error(ErrorCode::InvalidPath, "edge '" + id + "' does not touch '" + p.vertices.back() + "'");
    }
    p.vertices.push_back(e.other(p.vertices.back()));
    p.edges.push_back(id);
  }
  return p;
}

Rational path_length(const Graph& g, const Path& p) {
  Rational total = 0;
  for (const auto& e : p.edges) total += g.weight(e);
  return total;
}

}  // namespace sheafpath

namespace sheafpath {

Path canonical_cycle(const Graph& g, const Path& p) {
  if (!p.is_cycle()) throw Error(ErrorCode::InvalidPath, "not a cycle");
  std::vector<VertexId> ring(p.vertices.begin(), p.vertices.end() - 1);
  const std::size_t n = ring.size();

  std::vector<VertexId> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<VertexId> candidate;
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t idx = dir == 0 ? (start + k) % n : (start + n - k) % n;
        candidate.push_back(ring[idx]);
      }
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
  }

  Path out;
  out.vertices = best;
  out.vertices.push_back(best.front());
  for (std::size_t i = 0; i < n; ++i) out.edges.push_back(*g.edge_between(out.vertices[i], out.vertices[i + 1]));
  return out;
}

}  // namespace sheafpath
