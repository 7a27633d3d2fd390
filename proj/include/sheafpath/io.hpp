#pragma once

#include <map>
#include <string>
#include <string_view>

#include "sheafpath/graph.hpp"
#include "sheafpath/sheaf.hpp"

namespace sheafpath::io {

// Line-oriented text formats. Blank lines and lines starting with '#' are
// ignored; tokens are separated by whitespace. Identifiers use the
// characters [A-Za-z0-9_.:-].
//
//   graph     = { "vertex" id [ "source" | "sink" ] | "edge" id id id weight } ;
//   section   = { ( "vertex" | "edge" ) id "=" value } ;
//   heuristic = { id number } ;
//   weight    = integer | integer "/" integer | decimal ;
//
// Section values by sheaf and cell:
//   path, vertex     : "bot" | edge-id | "[" id "," id "]"
//   path, edge       : "bot" | "top"
//   distance, vertex : "bot" | "(" id "," number ")" | "(" id "," id "," number ")"
//   distance, edge   : "bot" | number
//
// Errors carry "<name>:<line>: " in their detail whenever a line is known.

enum class SheafKind { Path, Distance };

/// Throws Error(ParseError) or any build_graph error.
GraphPtr parse_graph(std::string_view text, const std::string& name = "<graph>");
std::string print_graph(const Graph& g);

/// Parses against `sh`, rejecting unknown cells (UnknownVertex/UnknownEdge),
/// repeated cells (CellAlreadyAssigned) and values outside their stalk
/// (StalkMismatch).
Assignment parse_section(std::string_view text, const Sheaf& sh, const std::string& name = "<section>");
/// One line per assigned cell, vertices then edges, in graph declaration order.
std::string print_section(const Sheaf& sh, const Assignment& a);

/// Vertex -> nonnegative rational. Throws Error(ParseError) or Error(UnknownVertex).
std::map<VertexId, Rational> parse_heuristic(std::string_view text, const Graph& g,
                                             const std::string& name = "<heuristic>");

/// Graphviz text. With a section, cells holding a non-bottom value are drawn
/// red and solid, bottom edges dashed, unassigned edges dotted grey, and vertex
/// labels show the stalk value.
std::string to_dot(const Graph& g, const Assignment* section = nullptr);

SheafKind parse_sheaf_kind(std::string_view text);

}  // namespace sheafpath::io
