#include "sheafpath/sheaf.hpp"

#include <algorithm>

#include "sheafpath/error.hpp"

namespace sheafpath {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

bool cell_exists(const Graph& g, const Cell& c) {
  return c.is_vertex() ? g.has_vertex(c.id) : g.has_edge(c.id);
}

}  // namespace

std::string to_string(const Cell& cell) { return cell.id; }

std::string to_string(const StalkValue& value) {
  return std::visit(
      overloaded{
          [](const Bottom&) -> std::string { return "bot"; },
          [](const Top&) -> std::string { return "top"; },
          [](const ChosenEdge& x) { return x.edge; },
          [](const EdgePair& x) { return "[" + x.lo + "," + x.hi + "]"; },
          [](const ChosenEdgeWithDist& x) { return "(" + x.edge + "," + to_string(x.dist) + ")"; },
          [](const OrderedPairWithDist& x) {
            return "(" + x.incoming + "," + x.outgoing + "," + to_string(x.dist) + ")";
          },
          [](const Dist& x) { return to_string(x.value); },
      },
      value);
}

const StalkValue* Assignment::find(const Cell& cell) const {
  auto it = values_.find(cell);
  return it == values_.end() ? nullptr : &it->second;
}

std::set<Cell> Assignment::domain() const {
  std::set<Cell> out;
  for (const auto& [cell, _] : values_) out.insert(cell);
  return out;
}

Assignment Assignment::with(const Cell& cell, StalkValue value) const {
  Map copy = values_;
  copy.insert_or_assign(cell, std::move(value));
  return Assignment(std::move(copy));
}

Assignment Assignment::restricted_to(const std::set<Cell>& cells) const {
  Map out;
  for (const auto& [cell, value] : values_) {
    if (cells.contains(cell)) out.emplace(cell, value);
  }
  return Assignment(std::move(out));
}

Sheaf::Sheaf(GraphPtr graph) : graph_(std::move(graph)) {}

StalkValue Sheaf::restrict(const VertexId& v, const EdgeId& e, const StalkValue& value) const {
  if (!graph_->has_edge(e) || !graph_->edge(e).touches(v)) {
    throw Error(ErrorCode::StalkMismatch, "'" + v + "' is not an endpoint of '" + e + "'");
  }
  if (!in_stalk(Cell::vertex(v), value)) {
    throw Error(ErrorCode::StalkMismatch, "value " + to_string(value) + " is not in the " + std::string(name()) +
                                              " stalk over '" + v + "'");
  }
  return restrict_checked(v, e, value);
}

std::vector<Cell> Sheaf::all_cells() const {
  std::vector<Cell> out;
  for (const auto& v : graph_->vertices()) out.push_back(Cell::vertex(v));
  for (const auto& e : graph_->edges()) out.push_back(Cell::edge(e.id));
  return out;
}

void check_stalks(const Sheaf& sh, const Assignment& a) {
  for (const auto& [cell, value] : a) {
    if (!cell_exists(sh.graph(), cell)) {
      throw Error(ErrorCode::StalkMismatch, "cell '" + cell.id + "' is not in the graph");
    }
    if (!sh.in_stalk(cell, value)) {
      throw Error(ErrorCode::StalkMismatch, "value " + to_string(value) + " is not in the " +
                                                std::string(sh.name()) + " stalk over '" + cell.id + "'");
    }
  }
}

std::vector<std::pair<VertexId, EdgeId>> inconsistent_pairs(const Sheaf& sh, const Assignment& a) {
  check_stalks(sh, a);
  std::vector<std::pair<VertexId, EdgeId>> out;
  for (const auto& [cell, value] : a) {
    if (!cell.is_vertex()) continue;
    for (const auto& e : sh.graph().incident_edges(cell.id)) {
      const StalkValue* on_edge = a.find(Cell::edge(e));
      if (on_edge != nullptr && sh.restrict(cell.id, e, value) != *on_edge) out.emplace_back(cell.id, e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_section(const Sheaf& sh, const Assignment& a) { return inconsistent_pairs(sh, a).empty(); }

bool is_global_section(const Sheaf& sh, const Assignment& a) {
  const Graph& g = sh.graph();
  if (a.size() != g.vertices().size() + g.edges().size()) return false;
  for (const auto& cell : sh.all_cells()) {
    if (!a.contains(cell)) return false;
  }
  return is_section(sh, a);
}

Extension extend(const Sheaf& sh, const Assignment& a, const Cell& cell, const StalkValue& value) {
  if (a.contains(cell)) throw Error(ErrorCode::CellAlreadyAssigned, "cell '" + cell.id + "' already has a value");
  if (!cell_exists(sh.graph(), cell) || !sh.in_stalk(cell, value)) {
    throw Error(ErrorCode::StalkMismatch, "value " + to_string(value) + " is not in the " +
                                              std::string(sh.name()) + " stalk over '" + cell.id + "'");
  }
  Assignment next = a.with(cell, value);
  return Extension{next, is_section(sh, next)};
}

}  // namespace sheafpath
