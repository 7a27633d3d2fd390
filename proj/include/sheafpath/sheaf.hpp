#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sheafpath/graph.hpp"
#include "sheafpath/rational.hpp"

namespace sheafpath {

struct Cell {
  enum class Kind { Vertex, Edge };

  Kind kind;
  std::string id;

  static Cell vertex(VertexId v) { return Cell{Kind::Vertex, std::move(v)}; }
  static Cell edge(EdgeId e) { return Cell{Kind::Edge, std::move(e)}; }

  bool is_vertex() const { return kind == Kind::Vertex; }
  bool is_edge() const { return kind == Kind::Edge; }

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& cell);

// Stalk value alternatives. One union serves both sheaves; each sheaf decides
// which alternatives are legal over which cell.
struct Bottom {
  friend bool operator==(const Bottom&, const Bottom&) = default;
};
struct Top {
  friend bool operator==(const Top&, const Top&) = default;
};
struct ChosenEdge {
  EdgeId edge;
  friend bool operator==(const ChosenEdge&, const ChosenEdge&) = default;
};
/// Unordered pair; construct through of() so that lo < hi.
struct EdgePair {
  EdgeId lo;
  EdgeId hi;

  static EdgePair of(EdgeId a, EdgeId b) {
    if (b < a) std::swap(a, b);
    return EdgePair{std::move(a), std::move(b)};
  }
  bool contains(const EdgeId& e) const { return lo == e || hi == e; }
  friend bool operator==(const EdgePair&, const EdgePair&) = default;
};
struct ChosenEdgeWithDist {
  EdgeId edge;
  Rational dist;
  friend bool operator==(const ChosenEdgeWithDist&, const ChosenEdgeWithDist&) = default;
};
/// (incoming, outgoing, distance at this vertex).
struct OrderedPairWithDist {
  EdgeId incoming;
  EdgeId outgoing;
  Rational dist;
  friend bool operator==(const OrderedPairWithDist&, const OrderedPairWithDist&) = default;
};
struct Dist {
  Rational value;
  friend bool operator==(const Dist&, const Dist&) = default;
};

using StalkValue = std::variant<Bottom, Top, ChosenEdge, EdgePair, ChosenEdgeWithDist, OrderedPairWithDist, Dist>;

inline bool is_bottom(const StalkValue& x) { return std::holds_alternative<Bottom>(x); }

/// Text form shared with section documents: bot, top, e, [e,f], (e,x),
/// (e,f,x), x.
std::string to_string(const StalkValue& value);

/// A partial map from cells to stalk values. Values are immutable: with()
/// returns a new assignment and leaves the receiver untouched.
class Assignment {
 public:
  using Map = std::map<Cell, StalkValue>;

  Assignment() = default;
  explicit Assignment(Map values) : values_(std::move(values)) {}
  Assignment(std::initializer_list<Map::value_type> values) : values_(values) {}

  bool contains(const Cell& cell) const { return values_.contains(cell); }
  /// nullptr when cell is unassigned.
  const StalkValue* find(const Cell& cell) const;
  const StalkValue& at(const Cell& cell) const { return values_.at(cell); }

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  Map::const_iterator begin() const { return values_.begin(); }
  Map::const_iterator end() const { return values_.end(); }
  const Map& values() const { return values_; }
  std::set<Cell> domain() const;

  /// Copy with cell set to value (inserted or replaced).
  Assignment with(const Cell& cell, StalkValue value) const;
  /// Copy restricted to the given cells.
  Assignment restricted_to(const std::set<Cell>& cells) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  Map values_;
};

/// A cellular sheaf over a frozen graph: stalk membership and restriction
/// maps F(v ~> e). Stalks may be infinite, so they are never enumerated here.
class Sheaf {
 public:
  explicit Sheaf(GraphPtr graph);
  virtual ~Sheaf() = default;

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }

  virtual std::string_view name() const = 0;

  /// Whether value lies in the stalk over cell. False for cells not in the graph.
  virtual bool in_stalk(const Cell& cell, const StalkValue& value) const = 0;

  /// F(v ~> e)(value). Throws Error(StalkMismatch) unless v is an endpoint of
  /// e and value lies in the stalk over v.
  StalkValue restrict(const VertexId& v, const EdgeId& e, const StalkValue& value) const;

  std::vector<Cell> all_cells() const;

 protected:
  virtual StalkValue restrict_checked(const VertexId& v, const EdgeId& e, const StalkValue& value) const = 0;

 private:
  GraphPtr graph_;
};

/// Throws Error(StalkMismatch) naming the first cell whose value lies outside its stalk.
void check_stalks(const Sheaf& sh, const Assignment& a);

/// Incident (v, e) pairs, both in a's domain, with F(v ~> e)(a(v)) != a(e).
/// Sorted by (vertex id, edge id). Throws Error(StalkMismatch).
std::vector<std::pair<VertexId, EdgeId>> inconsistent_pairs(const Sheaf& sh, const Assignment& a);

/// Local section test. Throws Error(StalkMismatch).
bool is_section(const Sheaf& sh, const Assignment& a);

/// Section whose domain is every vertex and edge.
bool is_global_section(const Sheaf& sh, const Assignment& a);

struct Extension {
  Assignment assignment;
  bool consistent;
};

/// Adds one cell. Errors: CellAlreadyAssigned, StalkMismatch. Inconsistency
/// is reported through Extension::consistent rather than thrown.
Extension extend(const Sheaf& sh, const Assignment& a, const Cell& cell, const StalkValue& value);

}  // namespace sheafpath
