// Command-line front end: verify, solve, enumerate, check-phi, export-dot.
//
// Exit codes: 0 ok, 1 input error, 2 not a section / not natural, 3 no path,
// 4 enumeration too large.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sheafpath/distance_path_sheaf.hpp"
#include "sheafpath/error.hpp"
#include "sheafpath/io.hpp"
#include "sheafpath/morphism.hpp"
#include "sheafpath/oracle.hpp"
#include "sheafpath/path_sheaf.hpp"
#include "sheafpath/pathfinding.hpp"

namespace {

using namespace sheafpath;

enum Exit { kOk = 0, kInputError = 1, kNotSection = 2, kNoPath = 3, kTooLarge = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join_edges(const Path& p) {
  std::string out;
  for (const auto& e : p.edges) out += " " + e;
  return out;
}

std::shared_ptr<const Sheaf> make_sheaf(io::SheafKind kind, GraphPtr g) {
  if (kind == io::SheafKind::Path) return build_path_sheaf(std::move(g));
  return build_distance_path_sheaf(std::move(g));
}

int run_verify(const std::string& graph_file, const std::string& kind, const std::string& section_file) {
  auto sheaf = make_sheaf(io::parse_sheaf_kind(kind), io::parse_graph(read_file(graph_file), graph_file));
  Assignment s = io::parse_section(read_file(section_file), *sheaf, section_file);

  auto bad = inconsistent_pairs(*sheaf, s);
  if (!bad.empty()) {
    std::cout << "not a section: " << bad.size() << " inconsistent pair(s)\n";
    for (const auto& [v, e] : bad) std::cout << "(" << v << "," << e << ")\n";
    return kNotSection;
  }
  if (is_global_section(*sheaf, s)) {
    std::cout << "global section\n";
    if (const auto* ps = dynamic_cast<const PathSheaf*>(sheaf.get())) {
      std::cout << "path" << join_edges(section_to_path(*ps, s)) << "\n";
      for (const Path& c : active_cycles(*ps, s)) std::cout << "active cycle" << join_edges(c) << "\n";
    }
  } else {
    std::size_t total = sheaf->graph().vertices().size() + sheaf->graph().edges().size();
    std::cout << "local section (" << s.size() << " of " << total << " cells)\n";
  }
  return kOk;
}

int run_solve(const std::string& graph_file, const std::string& engine, const std::string& heuristic_file,
              const std::string& output_file) {
  GraphPtr g = io::parse_graph(read_file(graph_file), graph_file);
  if ((engine == "astar") != !heuristic_file.empty()) {
    throw Error(ErrorCode::ParseError, "--heuristic is required with --engine astar and only then");
  }

  SolveResult result;
  std::shared_ptr<const Sheaf> sheaf;
  if (engine == "dp") {
    auto dps = build_distance_path_sheaf(g);
    result = dijkstra_dp(*dps);
    sheaf = dps;
  } else {
    auto ps = build_path_sheaf(g);
    CostFunction fn = engine == "p" ? plain_cost(ps)
                                    : astar_cost(ps, io::parse_heuristic(read_file(heuristic_file), *g, heuristic_file));
    result = search_p(*ps, fn);
    sheaf = ps;
  }

  if (!result.found()) {
    std::cout << "no path from source to sink exists\n";
    return kNoPath;
  }
  const ShortestPath& sp = *result.shortest;
  std::cout << "path" << join_edges(sp.path) << "\nlength " << to_string(sp.length) << "\n";

  std::string doc = io::print_section(*sheaf, sp.global_section);
  if (output_file.empty()) {
    std::cout << "# section\n" << doc;
  } else {
    std::ofstream out(output_file);
    if (!out) throw Error(ErrorCode::ParseError, output_file + ": cannot write file");
    out << doc;
  }
  return kOk;
}

int run_enumerate(const std::string& graph_file, const std::string& kind) {
  GraphPtr g = io::parse_graph(read_file(graph_file), graph_file);
  std::vector<std::string> lines;
  if (io::parse_sheaf_kind(kind) == io::SheafKind::Path) {
    auto ps = build_path_sheaf(g);
    for (const auto& s : oracle::enumerate_global_sections_p(*ps)) lines.push_back(oracle::canonical_line(*ps, s));
  } else {
    auto dps = build_distance_path_sheaf(g);
    for (const auto& s : oracle::enumerate_global_sections_dp(*dps)) lines.push_back(oracle::canonical_line(*dps, s));
  }
  std::sort(lines.begin(), lines.end());
  std::cout << lines.size() << "\n";
  for (const auto& line : lines) std::cout << line << "\n";
  return kOk;
}

int run_check_phi(const std::string& graph_file) {
  GraphPtr g = io::parse_graph(read_file(graph_file), graph_file);
  SheafMorphism phi = build_phi(build_distance_path_sheaf(g), build_path_sheaf(g));
  auto violations = check_naturality(phi, default_probe_dists());
  if (violations.empty()) {
    std::cout << "phi is natural: 0 violations\n";
    return kOk;
  }
  std::cout << "phi is not natural: " << violations.size() << " violation(s)\n";
  for (const auto& v : violations) std::cout << "(" << v.vertex << "," << v.edge << "," << to_string(v.value) << ")\n";
  return kNotSection;
}

int run_export_dot(const std::string& graph_file, const std::string& kind, const std::string& section_file) {
  GraphPtr g = io::parse_graph(read_file(graph_file), graph_file);
  if (section_file.empty()) {
    std::cout << io::to_dot(*g);
    return kOk;
  }
  auto sheaf = make_sheaf(io::parse_sheaf_kind(kind), g);
  Assignment s = io::parse_section(read_file(section_file), *sheaf, section_file);
  std::cout << io::to_dot(*g, &s);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path sheaves over weighted graphs: section checks, sheaf Dijkstra, enumeration"};
  app.require_subcommand(1);

  std::string graph_file;
  std::string sheaf_kind = "path";
  std::string section_file;
  std::string engine = "dp";
  std::string heuristic_file;
  std::string output_file;
  const std::vector<std::string> kinds{"path", "distance"};

  auto* verify = app.add_subcommand("verify", "Check whether a section document is a section");
  verify->add_option("--graph", graph_file, "Graph document")->required();
  verify->add_option("--sheaf", sheaf_kind, "path or distance")->check(CLI::IsMember(kinds));
  verify->add_option("--section", section_file, "Section document")->required();

  auto* solve = app.add_subcommand("solve", "Find a shortest source-to-sink path");
  solve->add_option("--graph", graph_file, "Graph document")->required();
  solve->add_option("--engine", engine, "dp, p or astar")->check(CLI::IsMember({"dp", "p", "astar"}));
  solve->add_option("--heuristic", heuristic_file, "Heuristic document (astar only)");
  solve->add_option("--output", output_file, "Write the global section here instead of stdout");

  auto* enumerate = app.add_subcommand("enumerate", "List every global section");
  enumerate->add_option("--graph", graph_file, "Graph document")->required();
  enumerate->add_option("--sheaf", sheaf_kind, "path or distance")->check(CLI::IsMember(kinds));

  auto* check_phi = app.add_subcommand("check-phi", "Check naturality of the forgetful morphism");
  check_phi->add_option("--graph", graph_file, "Graph document")->required();

  auto* export_dot = app.add_subcommand("export-dot", "Render the graph (and a section) as DOT");
  export_dot->add_option("--graph", graph_file, "Graph document")->required();
  export_dot->add_option("--sheaf", sheaf_kind, "path or distance")->check(CLI::IsMember(kinds));
  export_dot->add_option("--section", section_file, "Section document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*verify) return run_verify(graph_file, sheaf_kind, section_file);
    if (*solve) return run_solve(graph_file, engine, heuristic_file, output_file);
    if (*enumerate) return run_enumerate(graph_file, sheaf_kind);
    if (*check_phi) return run_check_phi(graph_file);
    if (*export_dot) return run_export_dot(graph_file, sheaf_kind, section_file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::TooLarge ? kTooLarge : kInputError;
  }
  return kInputError;
}
