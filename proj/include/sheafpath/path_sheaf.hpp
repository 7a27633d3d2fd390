#pragma once

#include <memory>
#include <vector>

#include "sheafpath/sheaf.hpp"

namespace sheafpath {

/// The path sheaf. Stalks:
///   source/sink v : { ChosenEdge(e) : e in E(v) }
///   other vertex v: { EdgePair(p) : p in H(v) } u { Bottom }
///   edge          : { Bottom, Top }
/// A vertex value sends Top to the edges it names and Bottom everywhere else.
class PathSheaf final : public Sheaf {
 public:
  explicit PathSheaf(GraphPtr graph) : Sheaf(std::move(graph)) {}

  std::string_view name() const override { return "path"; }
  bool in_stalk(const Cell& cell, const StalkValue& value) const override;

  /// Every value over vertex v, in a fixed order. Throws Error(UnknownVertex).
  std::vector<StalkValue> vertex_stalk(const VertexId& v) const;

 protected:
  StalkValue restrict_checked(const VertexId& v, const EdgeId& e, const StalkValue& value) const override;
};

using PathSheafPtr = std::shared_ptr<const PathSheaf>;

PathSheafPtr build_path_sheaf(GraphPtr g);

/// Walks a global section from the source, following the other edge of each
/// EdgePair, until the sink. Active cycles disjoint from that walk are
/// ignored. Throws Error(NotGlobalSection).
Path section_to_path(const PathSheaf& ps, const Assignment& s);

/// Local section that activates p. An endpoint that is not the source or sink
/// is completed with its smallest-id other incident edge. With make_global
/// the path must join source and sink (either direction) and every other cell
/// is set to Bottom. Also accepts cycles avoiding source and sink.
/// Errors: InvalidPath, PathTouchesSourceOrSinkInteriorly, NotSourceToSink.
Assignment path_to_section(const PathSheaf& ps, const Path& p, bool make_global);

/// Sum of the weights of edges assigned Top. Throws Error(NotASection).
Rational cost(const PathSheaf& ps, const Assignment& s);

/// Active cycles of a global section that do not meet the source-to-sink
/// path, each in canonical form. Throws Error(NotGlobalSection).
std::vector<Path> active_cycles(const PathSheaf& ps, const Assignment& s);

}  // namespace sheafpath
