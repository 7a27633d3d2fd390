#pragma once

#include <optional>
#include <vector>

#include "sheafpath/distance_path_sheaf.hpp"
#include "sheafpath/path_sheaf.hpp"

namespace sheafpath::oracle {

/// Upper bound on the product of vertex-stalk sizes for exhaustive path-sheaf
/// enumeration.
inline constexpr double kMaxPathSheafAssignments = 1e7;
/// Vertex bound for path-indexed enumeration.
inline constexpr std::size_t kMaxVertices = 12;

/// Every global section of the path sheaf. Vertex values are enumerated,
/// edge values follow from the restriction maps, and a candidate is kept iff
/// both endpoints of every edge agree. Sorted by canonical text form.
/// Throws Error(TooLarge).
std::vector<Assignment> enumerate_global_sections_p(const PathSheaf& ps);

/// One global section per simple source-to-sink path: the forward labelling
/// in which every interior vertex's outgoing edge leads away from the source.
/// This is not every global section. Two neighbours that both call their
/// shared edge outgoing agree whenever their distances match, so the sheaf
/// also admits "stalled" labellings of a path and source-free active cycles.
/// Throws Error(TooLarge).
std::vector<Assignment> enumerate_global_sections_dp(const DistancePathSheaf& dps);

/// All simple source-to-sink paths, sorted by edge sequence. Throws Error(TooLarge).
std::vector<Path> enumerate_simple_paths(const Graph& g);

/// All cycles avoiding source and sink, one canonical representative each,
/// sorted. Throws Error(TooLarge).
std::vector<Path> enumerate_cycles(const Graph& g);

struct ReferenceDistance {
  std::optional<Rational> distance;  // nullopt: sink unreachable
  std::optional<Path> path;
};

/// Textbook array-based Dijkstra on the plain graph, independent of the sheaf
/// machinery. Picks the smallest-id vertex among equal distances.
ReferenceDistance classical_dijkstra(const Graph& g);

/// One-line canonical text of an assignment: vertex cells then edge cells,
/// each as id=value.
std::string canonical_line(const Sheaf& sh, const Assignment& a);

}  // namespace sheafpath::oracle
