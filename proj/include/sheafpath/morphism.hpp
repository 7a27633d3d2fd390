#pragma once

#include <functional>
#include <vector>

#include "sheafpath/distance_path_sheaf.hpp"
#include "sheafpath/path_sheaf.hpp"

namespace sheafpath {

/// A family of per-cell maps from distance-path-sheaf stalks to path-sheaf
/// stalks over one shared graph.
class SheafMorphism {
 public:
  using Component = std::function<StalkValue(const Cell&, const StalkValue&)>;

  /// Throws Error(GraphMismatch) unless both sheaves sit on the same graph.
  SheafMorphism(DistancePathSheafPtr from, PathSheafPtr to, Component component);

  const DistancePathSheaf& source_sheaf() const { return *from_; }
  const PathSheaf& target_sheaf() const { return *to_; }

  StalkValue component(const Cell& cell, const StalkValue& value) const { return component_(cell, value); }

 private:
  DistancePathSheafPtr from_;
  PathSheafPtr to_;
  Component component_;
};

/// The forgetful morphism: drops every distance, turns an ordered pair into an
/// unordered one and any edge distance into Top. Bottom maps to Bottom.
SheafMorphism build_phi(DistancePathSheafPtr dps, PathSheafPtr ps);

struct NaturalityViolation {
  VertexId vertex;
  EdgeId edge;
  StalkValue value;
};

/// Probe distances used when a caller does not supply its own.
std::vector<Rational> default_probe_dists();

/// Checks phi_e(DP(v ~> e)(x)) == P(v ~> e)(phi_v(x)) for every incident
/// (v, e) and every x over v: all edge combinatorics exhaustively, with the
/// distance coordinate drawn from `probe_dists`. Both composites ignore the
/// distance in every case, so a finite probe set decides the square.
std::vector<NaturalityViolation> check_naturality(const SheafMorphism& m, const std::vector<Rational>& probe_dists);

/// Applies the morphism cell-wise. Throws Error(NotASection) unless s is a
/// local section of the source sheaf.
Assignment push_section(const SheafMorphism& m, const Assignment& s);

}  // namespace sheafpath
