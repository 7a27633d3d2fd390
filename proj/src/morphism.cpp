#include "sheafpath/morphism.hpp"

#include "sheafpath/error.hpp"

namespace sheafpath {

SheafMorphism::SheafMorphism(DistancePathSheafPtr from, PathSheafPtr to, Component component)
    : from_(std::move(from)), to_(std::move(to)), component_(std::move(component)) {
  if (from_->graph_ptr() != to_->graph_ptr()) {
    throw Error(ErrorCode::GraphMismatch, "morphism endpoints are built on different graphs");
  }
}

SheafMorphism build_phi(DistancePathSheafPtr dps, PathSheafPtr ps) {
  auto forget = [](const Cell& cell, const StalkValue& value) -> StalkValue {
    if (is_bottom(value)) return Bottom{};
    if (cell.is_edge()) return Top{};
    if (const auto* c = std::get_if<ChosenEdgeWithDist>(&value)) return ChosenEdge{c->edge};
    if (const auto* p = std::get_if<OrderedPairWithDist>(&value)) return EdgePair::of(p->incoming, p->outgoing);
    throw Error(ErrorCode::StalkMismatch, "value " + to_string(value) + " is not a distance-sheaf vertex value");
  };
  return SheafMorphism(std::move(dps), std::move(ps), forget);
}

std::vector<Rational> default_probe_dists() {
  return {Rational(1), Rational(1, 2), Rational(7), Rational(355, 113)};
}

std::vector<NaturalityViolation> check_naturality(const SheafMorphism& m, const std::vector<Rational>& probe_dists) {
  const auto& dp = m.source_sheaf();
  const auto& p = m.target_sheaf();
  const Graph& g = dp.graph();

  std::vector<NaturalityViolation> out;
  for (const auto& v : g.vertices()) {
    for (const auto& x : dp.vertex_stalk_sample(v, probe_dists)) {
      StalkValue image = m.component(Cell::vertex(v), x);
      for (const auto& e : g.incident_edges(v)) {
        StalkValue down_then_across = m.component(Cell::edge(e), dp.restrict(v, e, x));
        bool ok = p.in_stalk(Cell::vertex(v), image) && down_then_across == p.restrict(v, e, image);
        if (!ok) out.push_back(NaturalityViolation{v, e, x});
      }
    }
  }
  return out;
}

Assignment push_section(const SheafMorphism& m, const Assignment& s) {
  if (!is_section(m.source_sheaf(), s)) throw Error(ErrorCode::NotASection, "only sections can be pushed forward");
  Assignment::Map out;
  for (const auto& [cell, value] : s) out.emplace(cell, m.component(cell, value));
  return Assignment(std::move(out));
}

}  // namespace sheafpath
