#include "sheafpath/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "sheafpath/error.hpp"

namespace sheafpath::oracle {

namespace {

void guard_vertices(const Graph& g) {
  if (g.vertices().size() > kMaxVertices) {
    throw Error(ErrorCode::TooLarge, std::to_string(g.vertices().size()) + " vertices exceeds the limit of " +
                                         std::to_string(kMaxVertices));
  }
}

}  // namespace

std::string canonical_line(const Sheaf& sh, const Assignment& a) {
  std::string line;
  auto append = [&](const Cell& c) {
    const StalkValue* v = a.find(c);
    if (v == nullptr) return;
    if (!line.empty()) line += ' ';
    line += c.id + "=" + to_string(*v);
  };
  std::vector<VertexId> vs = sh.graph().vertices();
  std::sort(vs.begin(), vs.end());
  for (const auto& v : vs) append(Cell::vertex(v));
  std::vector<EdgeId> es;
  for (const auto& e : sh.graph().edges()) es.push_back(e.id);
  std::sort(es.begin(), es.end());
  for (const auto& e : es) append(Cell::edge(e));
  return line;
}

std::vector<Assignment> enumerate_global_sections_p(const PathSheaf& ps) {
  const Graph& g = ps.graph();
  const auto& vertices = g.vertices();

  std::vector<std::vector<StalkValue>> stalks;
  double space = 1;
  for (const auto& v : vertices) {
    stalks.push_back(ps.vertex_stalk(v));
    space *= static_cast<double>(stalks.back().size());
  }
  if (space > kMaxPathSheafAssignments) {
    throw Error(ErrorCode::TooLarge, "vertex assignment space of " + std::to_string(static_cast<long long>(space)) +
                                         " exceeds the limit of 10^7");
  }

  // Depth-first over vertices; an edge is checked as soon as both endpoints
  // are fixed. Pruning only skips candidates that would fail the same check.
  std::map<VertexId, std::size_t> position;
  for (std::size_t i = 0; i < vertices.size(); ++i) position[vertices[i]] = i;

  std::vector<const StalkValue*> chosen(vertices.size(), nullptr);
  std::vector<Assignment> out;

  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == vertices.size()) {
      Assignment::Map values;
      for (std::size_t k = 0; k < vertices.size(); ++k) values.emplace(Cell::vertex(vertices[k]), *chosen[k]);
      for (const auto& e : g.edges()) values.emplace(Cell::edge(e.id), ps.restrict(e.a, e.id, *chosen[position[e.a]]));
      out.emplace_back(std::move(values));
      return;
    }
    const VertexId& v = vertices[i];
    for (const auto& candidate : stalks[i]) {
      bool agrees = true;
      for (const auto& e : g.incident_edges(v)) {
        std::size_t j = position[g.edge(e).other(v)];
        if (j >= i) continue;
        if (ps.restrict(v, e, candidate) != ps.restrict(vertices[j], e, *chosen[j])) {
          agrees = false;
          break;
        }
      }
      if (!agrees) continue;
      chosen[i] = &candidate;
      place(i + 1);
    }
  };
  place(0);

  std::sort(out.begin(), out.end(), [&](const Assignment& a, const Assignment& b) {
    return canonical_line(ps, a) < canonical_line(ps, b);
  });
  return out;
}

std::vector<Assignment> enumerate_global_sections_dp(const DistancePathSheaf& dps) {
  std::vector<Assignment> out;
  for (const auto& p : enumerate_simple_paths(dps.graph())) out.push_back(directed_path_to_section(dps, p, true));
  return out;
}

std::vector<Path> enumerate_simple_paths(const Graph& g) {
  guard_vertices(g);
  std::vector<Path> out;
  Path current{{}, {g.source()}};
  std::set<VertexId> on_path{g.source()};

  std::function<void()> grow = [&]() {
    const VertexId here = current.vertices.back();
    if (here == g.sink()) {
      out.push_back(current);
      return;
    }
    for (const auto& e : g.incident_edges(here)) {
      VertexId next = g.edge(e).other(here);
      if (on_path.contains(next)) continue;
      current.edges.push_back(e);
      current.vertices.push_back(next);
      on_path.insert(next);
      grow();
      on_path.erase(next);
      current.vertices.pop_back();
      current.edges.pop_back();
    }
  };
  grow();

  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) { return a.edges < b.edges; });
  return out;
}

std::vector<Path> enumerate_cycles(const Graph& g) {
  guard_vertices(g);
  std::set<std::vector<VertexId>> seen;
  std::vector<Path> out;

  // Every cycle is found from each of its vertices in both directions; the
  // canonical form collapses those to one.
  for (const auto& start : g.vertices()) {
    if (g.is_terminal(start)) continue;
    Path current{{}, {start}};
    std::set<VertexId> on_path{start};
    std::function<void()> grow = [&]() {
      const VertexId here = current.vertices.back();
      for (const auto& e : g.incident_edges(here)) {
        VertexId next = g.edge(e).other(here);
        if (g.is_terminal(next)) continue;
        if (next == start && current.edges.size() >= 2) {
          Path closed = current;
          closed.edges.push_back(e);
          closed.vertices.push_back(start);
          Path canon = canonical_cycle(g, closed);
          if (seen.insert(canon.vertices).second) out.push_back(std::move(canon));
          continue;
        }
        if (on_path.contains(next)) continue;
        current.edges.push_back(e);
        current.vertices.push_back(next);
        on_path.insert(next);
        grow();
        on_path.erase(next);
        current.vertices.pop_back();
        current.edges.pop_back();
      }
    };
    grow();
  }
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) { return a.vertices < b.vertices; });
  return out;
}

ReferenceDistance classical_dijkstra(const Graph& g) {
  const auto& ids = g.vertices();
  const std::size_t n = ids.size();
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[ids[i]] = i;

  std::vector<std::optional<Rational>> dist(n);
  std::vector<std::optional<EdgeId>> via(n);
  std::vector<bool> done(n, false);
  dist[index[g.source()]] = Rational(0);

  for (std::size_t round = 0; round < n; ++round) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || !dist[i]) continue;
      if (!pick || *dist[i] < *dist[*pick] || (*dist[i] == *dist[*pick] && ids[i] < ids[*pick])) pick = i;
    }
    if (!pick) break;
    done[*pick] = true;
    if (ids[*pick] == g.sink()) break;
    for (const auto& e : g.incident_edges(ids[*pick])) {
      std::size_t j = index[g.edge(e).other(ids[*pick])];
      if (done[j]) continue;
      Rational candidate = *dist[*pick] + g.weight(e);
      if (!dist[j] || candidate < *dist[j]) {
        dist[j] = candidate;
        via[j] = e;
      }
    }
  }

  std::size_t t = index[g.sink()];
  if (!dist[t]) return ReferenceDistance{std::nullopt, std::nullopt};

  std::vector<EdgeId> reversed;
  for (VertexId v = g.sink(); v != g.source();) {
    const EdgeId& e = *via[index[v]];
    reversed.push_back(e);
    v = g.edge(e).other(v);
  }
  std::reverse(reversed.begin(), reversed.end());
  return ReferenceDistance{dist[t], walk_edges(g, g.source(), reversed)};
}

}  // namespace sheafpath::oracle
