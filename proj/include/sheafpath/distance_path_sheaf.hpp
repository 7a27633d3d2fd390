#pragma once

#include <memory>
#include <vector>

#include "sheafpath/sheaf.hpp"

namespace sheafpath {

/// The distance path sheaf. Stalks:
///   source        : { ChosenEdgeWithDist(e, 0) : e in E(source) }
///   sink          : { ChosenEdgeWithDist(e, x) : e in E(sink), x > 0 }
///   other vertex v: { OrderedPairWithDist(in, out, x) : (in, out) in H_o(v), x > 0 } u { Bottom }
///   edge          : { Dist(x) : x > 0 } u { Bottom }
/// An interior vertex at distance x reports x on its incoming edge and
/// x + w(out) on its outgoing edge; the source reports w(e) on its edge.
class DistancePathSheaf final : public Sheaf {
 public:
  explicit DistancePathSheaf(GraphPtr graph) : Sheaf(std::move(graph)) {}

  std::string_view name() const override { return "distance"; }
  bool in_stalk(const Cell& cell, const StalkValue& value) const override;

  /// The values over v whose distance component is drawn from `dists`
  /// (ignored at the source, where it is always 0). Non-positive probes are
  /// skipped. Throws Error(UnknownVertex).
  std::vector<StalkValue> vertex_stalk_sample(const VertexId& v, const std::vector<Rational>& dists) const;

 protected:
  StalkValue restrict_checked(const VertexId& v, const EdgeId& e, const StalkValue& value) const override;
};

using DistancePathSheafPtr = std::shared_ptr<const DistancePathSheaf>;

DistancePathSheafPtr build_distance_path_sheaf(GraphPtr g);

/// The distance component of a vertex value; nullopt for Bottom.
std::optional<Rational> distance_of(const StalkValue& value);

/// The unique section activating a path that starts at the source, with
/// distances accumulated along it. A final vertex other than the sink takes
/// its smallest-id other incident edge as outgoing. With make_global the path
/// must end at the sink and every other cell is Bottom.
/// Errors: InvalidPath, PathDoesNotStartAtSource,
/// PathTouchesSourceOrSinkInteriorly, NotSourceToSink.
Assignment directed_path_to_section(const DistancePathSheaf& dps, const Path& p, bool make_global);

/// Whether the active cells of a global section (non-Bottom values) form a
/// subgraph without cycles. True for every forward-labelled path section;
/// false for sections carrying a head-to-head cycle (see
/// oracle::enumerate_global_sections_dp). Throws Error(NotGlobalSection).
bool assert_no_active_cycle(const DistancePathSheaf& dps, const Assignment& s);

}  // namespace sheafpath
