#include "sheafpath/io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "sheafpath/error.hpp"

namespace sheafpath::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(pos, end - pos));
    ++number;
    pos = end + 1;

    std::istringstream in(raw);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    lines.push_back(Line{number, std::move(tokens)});
  }
  return lines;
}

std::string where(const std::string& name, std::size_t line) { return name + ":" + std::to_string(line) + ": "; }

[[noreturn]] void fail(const std::string& name, std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, where(name, line) + what);
}

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == ':' || c == '-';
  });
}

const std::string& checked_id(const std::string& token, const std::string& name, std::size_t line) {
  if (!valid_id(token)) fail(name, line, "invalid identifier '" + token + "'");
  return token;
}

Rational number(const std::string& token, const std::string& name, std::size_t line) {
  try {
    return parse_rational(token);
  } catch (const Error&) {
    fail(name, line, "malformed number '" + token + "'");
  }
}

/// The first quoted identifier in a message, used to recover a line number
/// for validation errors raised after parsing.
std::string first_quoted(const std::string& detail) {
  auto open = detail.find('\'');
  if (open == std::string::npos) return {};
  auto close = detail.find('\'', open + 1);
  if (close == std::string::npos) return {};
  return detail.substr(open + 1, close - open - 1);
}

/// Splits "(a,b,c)" / "[a,b]" into parts, or returns false.
bool split_bracketed(const std::string& token, char open, char close, std::vector<std::string>& parts) {
  if (token.size() < 2 || token.front() != open || token.back() != close) return false;
  parts.clear();
  std::string inner = token.substr(1, token.size() - 2);
  std::size_t start = 0;
  while (true) {
    auto comma = inner.find(',', start);
    parts.push_back(inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return true;
}

StalkValue parse_value(const std::string& token, SheafKind kind, bool on_vertex, const std::string& name,
                       std::size_t line) {
  if (token == "bot") return Bottom{};
  std::vector<std::string> parts;
  if (kind == SheafKind::Path) {
    if (!on_vertex) {
      if (token == "top") return Top{};
      fail(name, line, "edge value must be 'top' or 'bot', got '" + token + "'");
    }
    if (split_bracketed(token, '[', ']', parts)) {
      if (parts.size() != 2) fail(name, line, "edge pair needs two edges: '" + token + "'");
      return EdgePair::of(checked_id(parts[0], name, line), checked_id(parts[1], name, line));
    }
    return ChosenEdge{checked_id(token, name, line)};
  }

  if (!on_vertex) return Dist{number(token, name, line)};
  if (!split_bracketed(token, '(', ')', parts) || parts.size() < 2 || parts.size() > 3) {
    fail(name, line, "vertex value must be 'bot', (edge,dist) or (in,out,dist), got '" + token + "'");
  }
  if (parts.size() == 2) return ChosenEdgeWithDist{checked_id(parts[0], name, line), number(parts[1], name, line)};
  return OrderedPairWithDist{checked_id(parts[0], name, line), checked_id(parts[1], name, line),
                             number(parts[2], name, line)};
}

SheafKind kind_of(const Sheaf& sh) { return sh.name() == "path" ? SheafKind::Path : SheafKind::Distance; }

}  // namespace

SheafKind parse_sheaf_kind(std::string_view text) {
  if (text == "path") return SheafKind::Path;
  if (text == "distance") return SheafKind::Distance;
  throw Error(ErrorCode::ParseError, "unknown sheaf kind '" + std::string(text) + "'");
}

GraphPtr parse_graph(std::string_view text, const std::string& name) {
  std::vector<VertexId> vertices;
  std::vector<EdgeSpec> edges;
  std::optional<VertexId> source;
  std::optional<VertexId> sink;
  std::map<std::string, std::size_t> declared_at;

  for (const auto& [n, tok] : tokenize(text)) {
    if (tok[0] == "vertex") {
      if (tok.size() != 2 && tok.size() != 3) fail(name, n, "expected: vertex <id> [source|sink]");
      const auto& id = checked_id(tok[1], name, n);
      if (tok.size() == 3) {
        std::optional<VertexId>* slot = nullptr;
        if (tok[2] == "source") {
          slot = &source;
        } else if (tok[2] == "sink") {
          slot = &sink;
        } else {
          fail(name, n, "unknown flag '" + tok[2] + "'");
        }
        if (*slot) fail(name, n, "second " + tok[2] + " '" + id + "' (first was '" + **slot + "')");
        *slot = id;
      }
      declared_at.try_emplace(id, n);
      vertices.push_back(id);
    } else if (tok[0] == "edge") {
      if (tok.size() != 5) fail(name, n, "expected: edge <id> <vertex> <vertex> <weight>");
      edges.push_back(EdgeSpec{checked_id(tok[1], name, n), checked_id(tok[2], name, n), checked_id(tok[3], name, n),
                               number(tok[4], name, n)});
      declared_at.try_emplace(tok[1], n);
    } else {
      fail(name, n, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!source) throw Error(ErrorCode::ParseError, name + ": no vertex is marked source");
  if (!sink) throw Error(ErrorCode::ParseError, name + ": no vertex is marked sink");

  try {
    return build_graph(std::move(vertices), std::move(edges), *source, *sink);
  } catch (const Error& e) {
    auto it = declared_at.find(first_quoted(e.detail()));
    std::string prefix = it == declared_at.end() ? name + ": " : where(name, it->second);
    throw Error(e.code(), prefix + e.detail());
  }
}

std::string print_graph(const Graph& g) {
  std::string out;
  for (const auto& v : g.vertices()) {
    out += "vertex " + v;
    if (v == g.source()) out += " source";
    if (v == g.sink()) out += " sink";
    out += '\n';
  }
  for (const auto& e : g.edges()) out += "edge " + e.id + " " + e.a + " " + e.b + " " + to_string(e.weight) + "\n";
  return out;
}

Assignment parse_section(std::string_view text, const Sheaf& sh, const std::string& name) {
  const Graph& g = sh.graph();
  const SheafKind kind = kind_of(sh);
  Assignment::Map values;

  for (const auto& [n, tok] : tokenize(text)) {
    if (tok.size() != 4 || tok[2] != "=" || (tok[0] != "vertex" && tok[0] != "edge")) {
      fail(name, n, "expected: vertex|edge <id> = <value>");
    }
    const bool on_vertex = tok[0] == "vertex";
    const std::string& id = tok[1];
    if (on_vertex && !g.has_vertex(id)) throw Error(ErrorCode::UnknownVertex, where(name, n) + "no vertex '" + id + "'");
    if (!on_vertex && !g.has_edge(id)) throw Error(ErrorCode::UnknownEdge, where(name, n) + "no edge '" + id + "'");

    Cell cell = on_vertex ? Cell::vertex(id) : Cell::edge(id);
    StalkValue value = parse_value(tok[3], kind, on_vertex, name, n);
    if (!sh.in_stalk(cell, value)) {
      throw Error(ErrorCode::StalkMismatch, where(name, n) + "value " + tok[3] + " is not in the " +
                                                std::string(sh.name()) + " stalk over '" + id + "'");
    }
    if (!values.emplace(cell, std::move(value)).second) {
      throw Error(ErrorCode::CellAlreadyAssigned, where(name, n) + "'" + id + "' assigned twice");
    }
  }
  return Assignment(std::move(values));
}

std::string print_section(const Sheaf& sh, const Assignment& a) {
  std::string out;
  for (const auto& v : sh.graph().vertices()) {
    if (const auto* x = a.find(Cell::vertex(v))) out += "vertex " + v + " = " + to_string(*x) + "\n";
  }
  for (const auto& e : sh.graph().edges()) {
    if (const auto* x = a.find(Cell::edge(e.id))) out += "edge " + e.id + " = " + to_string(*x) + "\n";
  }
  return out;
}

std::map<VertexId, Rational> parse_heuristic(std::string_view text, const Graph& g, const std::string& name) {
  std::map<VertexId, Rational> h;
  for (const auto& [n, tok] : tokenize(text)) {
    if (tok.size() != 2) fail(name, n, "expected: <vertex> <value>");
    if (!g.has_vertex(tok[0])) throw Error(ErrorCode::UnknownVertex, where(name, n) + "no vertex '" + tok[0] + "'");
    Rational value = number(tok[1], name, n);
    if (value < 0) fail(name, n, "heuristic for '" + tok[0] + "' is negative");
    if (!h.emplace(tok[0], value).second) fail(name, n, "'" + tok[0] + "' listed twice");
  }
  return h;
}

std::string to_dot(const Graph& g, const Assignment* section) {
  std::string out = "graph G {\n  node [shape=circle];\n";
  for (const auto& v : g.vertices()) {
    std::string attrs = "label=\"" + v;
    const StalkValue* x = section != nullptr ? section->find(Cell::vertex(v)) : nullptr;
    if (x != nullptr) attrs += "\\n" + to_string(*x);
    attrs += "\"";
    if (x != nullptr && !is_bottom(*x)) attrs += ", color=red, fontcolor=red";
    if (v == g.source() || v == g.sink()) attrs += ", shape=doublecircle";
    out += "  \"" + v + "\" [" + attrs + "];\n";
  }
  for (const auto& e : g.edges()) {
    std::string attrs = "label=\"" + e.id + " (" + to_string(e.weight) + ")";
    if (section != nullptr) {
      const StalkValue* x = section->find(Cell::edge(e.id));
      if (x == nullptr) {
        attrs += "\", style=dotted, color=gray";
      } else if (is_bottom(*x)) {
        attrs += ": bot\", style=dashed";
      } else {
        attrs += ": " + to_string(*x) + "\", style=solid, color=red, fontcolor=red";
      }
    } else {
      attrs += "\"";
    }
    out += "  \"" + e.a + "\" -- \"" + e.b + "\" [" + attrs + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace sheafpath::io
