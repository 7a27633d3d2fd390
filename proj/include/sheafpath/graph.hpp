#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sheafpath/rational.hpp"

namespace sheafpath {

using VertexId = std::string;
using EdgeId = std::string;

struct Edge {
  EdgeId id;
  VertexId a;
  VertexId b;
  Rational weight;

  bool touches(const VertexId& v) const { return a == v || b == v; }
  const VertexId& other(const VertexId& v) const { return a == v ? b : a; }
};

/// A path or cycle: edges[i] joins vertices[i] and vertices[i + 1].
/// A zero-length path has one vertex and no edges.
struct Path {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;

  bool is_cycle() const { return vertices.size() > 1 && vertices.front() == vertices.back(); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Input record for build_graph.
struct EdgeSpec {
  EdgeId id;
  VertexId a;
  VertexId b;
  Rational weight;
};

/// Finite, simple, undirected weighted graph with a distinguished source and
/// sink. Every vertex other than source and sink has degree >= 2; source and
/// sink have degree >= 1. Immutable once built.
class Graph {
 public:
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexId& source() const { return source_; }
  const VertexId& sink() const { return sink_; }

  bool has_vertex(const VertexId& v) const { return vertex_index_.contains(v); }
  bool has_edge(const EdgeId& e) const { return edge_index_.contains(e); }
  bool is_terminal(const VertexId& v) const { return v == source_ || v == sink_; }

  /// Throws Error(UnknownEdge).
  const Edge& edge(const EdgeId& e) const;
  const Rational& weight(const EdgeId& e) const { return edge(e).weight; }
  std::size_t degree(const VertexId& v) const { return incident_edges(v).size(); }

  /// E(v), sorted by edge id. Throws Error(UnknownVertex).
  const std::vector<EdgeId>& incident_edges(const VertexId& v) const;

  std::optional<EdgeId> edge_between(const VertexId& u, const VertexId& v) const;

 private:
  friend std::shared_ptr<const Graph> build_graph(std::vector<VertexId>, std::vector<EdgeSpec>,
                                                  VertexId, VertexId);
  Graph() = default;

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  VertexId source_;
  VertexId sink_;
  std::map<VertexId, std::size_t> vertex_index_;
  std::map<EdgeId, std::size_t> edge_index_;
  std::map<VertexId, std::vector<EdgeId>> incident_;
};

using GraphPtr = std::shared_ptr<const Graph>;

/// Validates and freezes a graph. Errors: DuplicateId, SelfLoop, ParallelEdge,
/// NonPositiveWeight, DegreeViolation, SourceEqualsSink, UnknownEndpoint,
/// UnknownVertex (source or sink missing).
GraphPtr build_graph(std::vector<VertexId> vertices, std::vector<EdgeSpec> edges,
                     VertexId source, VertexId sink);

/// E(v) for v in g. Throws Error(UnknownVertex).
std::vector<EdgeId> incident_edges(const Graph& g, const VertexId& v);

/// True iff p is a well-formed path (distinct vertices) or cycle (first ==
/// last, others distinct) of g. Never throws.
bool validate_path(const Graph& g, const Path& p);

/// Builds the vertex sequence implied by walking `edges` from `start`.
/// Throws Error(InvalidPath) if consecutive edges do not chain.
Path walk_edges(const Graph& g, const VertexId& start, const std::vector<EdgeId>& edges);

/// The lexicographically least rotation/reflection of a cycle, so each cycle
/// has one representative. Requires p.is_cycle().
Path canonical_cycle(const Graph& g, const Path& p);

/// Sum of the weights of p's edges.
Rational path_length(const Graph& g, const Path& p);

}  // namespace sheafpath
