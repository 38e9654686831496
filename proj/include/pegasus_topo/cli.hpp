#pragma once

// Command-line driver. run() is the whole program minus main(), so tests can
// call it in-process with captured streams.
//
//   generate    --graph {chimera|pegasus} --x N --y N [--z {1|3}] --format F --out PATH
//   analyze     --in PATH [--degrees] [--compress] [--planarity] [--find-k4 LIMIT]
//   check-rules --x N --y N
//   render      --in PATH --style S [--tilted] [--colors {mono|class|group}] --out PATH.svg
//   convert     --in PATH --format F --out PATH
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 I/O or input error.

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pegasus_topo/analysis.hpp"
#include "pegasus_topo/chimera.hpp"
#include "pegasus_topo/io.hpp"
#include "pegasus_topo/pegasus.hpp"
#include "pegasus_topo/render.hpp"

namespace pegasus_topo::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

namespace detail {

inline void emit(const std::string& path, std::string_view bytes, std::ostream& out) {
  if (path == "-") {
    out << bytes;
    out.flush();
    return;
  }
  write_output(path, bytes);
}

inline nlohmann::json certificate_json(const NonplanarityCertificate& c) {
  nlohmann::json j{{"verdict", std::string(to_string(c.verdict))},
                   {"kind", std::string(to_string(c.kind))},
                   {"vertices", c.vertices},
                   {"edges", c.edges},
                   {"bound", c.edge_bound}};
  if (c.kind == CertificateKind::KuratowskiSubdivision && c.witness) {
    j["witness"] = {{"type", std::string(to_string(c.witness->type))},
                    {"branch", c.witness->branch},
                    {"paths", c.witness->paths}};
  }
  if (c.kind != CertificateKind::EdgeBound) j["search_expansions"] = c.expansions;
  return j;
}

struct AnalyzeFlags {
  bool degrees = false;
  bool compress = false;
  bool planarity = false;
  std::optional<std::size_t> k4_limit;
};

inline nlohmann::json analyze(const TopologyGraph& g, const AnalyzeFlags& f) {
  const Dims& d = g.dims();
  nlohmann::json r;
  r["schema"] = "analyze/1";
  r["graph"] = is_pegasus(g) ? "pegasus" : "chimera";
  r["dims"] = {{"X", d.X}, {"Y", d.Y}, {"Z", d.Z}};
  r["vertices"] = g.vertex_count();
  r["edges"] = g.edge_count();
  std::map<std::string, std::size_t> classes;
  for (const auto& [cls, name] : kEdgeClassNames) classes[std::string(name)] = 0;
  for (const Edge& e : g.edges()) ++classes[std::string(to_string(e.cls))];
  r["edge_classes"] = classes;

  if (f.degrees) {
    const auto h = degree_histogram(g);
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& [deg, n] : h) hist.push_back({deg, n});
    r["degrees"] = {{"histogram", hist},
                    {"min", h.empty() ? 0 : h.begin()->first},
                    {"max", h.empty() ? 0 : h.rbegin()->first}};
  }
  std::optional<CompressedGraph> cg;
  if (f.compress || f.planarity) cg = compress(g);
  if (f.compress) r["compressed"] = compressed_to_json(*cg);
  if (f.planarity) {
    r["planarity"] = {{"graph", certificate_json(nonplanarity_certificate(g))},
                      {"compressed", certificate_json(nonplanarity_certificate(*cg))}};
  }
  if (f.k4_limit) {
    const auto cliques = find_k4(g, *f.k4_limit);
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : cliques) list.push_back(c);
    r["k4"] = {{"limit", *f.k4_limit}, {"found", cliques.size()}, {"cliques", list}};
  }
  return r;
}

using RenderInput = std::variant<TopologyGraph, CompressedGraph>;

// Accepts any graph format, a bare compressed graph, or an analyze report
// carrying a "compressed" section.
inline RenderInput load_render_input(const std::string& text) {
  if (detect_format(text) == ExportFormat::Json) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(1, std::string("invalid JSON: ") + e.what());
    }
    if (j.contains("schema") && j["schema"] == "analyze/1") {
      if (!j.contains("compressed"))
        throw ParseError(1, "analyze report has no compressed graph (run analyze --compress)");
      return compressed_from_json(j["compressed"]);
    }
    if (j.contains("format") && j["format"] == "pegasus-topo-compressed")
      return compressed_from_json(j);
  }
  return parse_graph(text);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chimera / Pegasus topology generator", "pegasus-topo"};
  app.require_subcommand(1);

  const std::map<std::string, ExportFormat> formats{{"edgelist", ExportFormat::EdgeListV1},
                                                    {"dot", ExportFormat::Dot},
                                                    {"graphml", ExportFormat::GraphML},
                                                    {"json", ExportFormat::Json}};
  const std::map<std::string, RenderStyle> styles{{"classic", RenderStyle::TiltedClassic},
                                                  {"diamond", RenderStyle::Diamond},
                                                  {"triangle", RenderStyle::Triangle},
                                                  {"compressed", RenderStyle::Compressed}};
  const std::map<std::string, ColorMode> colors{{"mono", ColorMode::Monochrome},
                                                {"class", ColorMode::ByEdgeClass},
                                                {"group", ColorMode::ByColorGroup}};

  std::string graph_kind;
  int gx = 0, gy = 0;
  std::optional<int> gz;
  std::string fmt_name = "edgelist";
  std::string out_path = "-";
  auto* gen = app.add_subcommand("generate", "Generate a Chimera or Pegasus graph");
  gen->add_option("--graph", graph_kind, "chimera or pegasus")
      ->required()
      ->check(CLI::IsMember({"chimera", "pegasus"}));
  gen->add_option("--x", gx, "cells along x")->required()->check(CLI::PositiveNumber);
  gen->add_option("--y", gy, "cells along y")->required()->check(CLI::PositiveNumber);
  gen->add_option("--z", gz, "layers (1 or 3)")->check(CLI::IsMember({1, 3}));
  gen->add_option("--format", fmt_name, "edgelist, dot, graphml or json")
      ->check(CLI::IsMember(formats));
  gen->add_option("--out", out_path, "output path, - for stdout");

  std::string in_path = "-";
  detail::AnalyzeFlags aflags;
  std::size_t k4_limit = 0;
  auto* ana = app.add_subcommand("analyze", "Report structural properties as JSON");
  ana->add_option("--in", in_path, "input graph, - for stdin")->required();
  ana->add_flag("--degrees", aflags.degrees, "degree histogram");
  ana->add_flag("--compress", aflags.compress, "cell-level compressed graph");
  ana->add_flag("--planarity", aflags.planarity, "non-planarity certificates");
  auto* k4_opt = ana->add_option("--find-k4", k4_limit, "enumerate up to LIMIT 4-cliques");

  int cx = 0, cy = 0;
  auto* chk = app.add_subcommand("check-rules", "Compare the one-line and grouped inter-layer rules");
  chk->add_option("--x", cx, "cells along x")->required()->check(CLI::PositiveNumber);
  chk->add_option("--y", cy, "cells along y")->required()->check(CLI::PositiveNumber);

  RenderSpec rspec;
  std::string style_name;
  std::string color_name = "group";
  auto* ren = app.add_subcommand("render", "Draw a graph as SVG");
  ren->add_option("--in", in_path, "input graph or analyze report")->required();
  ren->add_option("--style", style_name, "classic, diamond, triangle or compressed")
      ->required()
      ->check(CLI::IsMember(styles));
  ren->add_flag("--tilted", rspec.tilted_lattice, "shear the lattice");
  ren->add_option("--colors", color_name, "mono, class or group")
      ->check(CLI::IsMember(colors));
  ren->add_option("--out", out_path, "output SVG path, - for stdout");

  auto* conv = app.add_subcommand("convert", "Convert between graph formats");
  conv->add_option("--in", in_path, "input graph")->required();
  conv->add_option("--format", fmt_name, "edgelist, dot, graphml or json")
      ->required()
      ->check(CLI::IsMember(formats));
  conv->add_option("--out", out_path, "output path, - for stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kUsage;
  }

  const ExportFormat fmt = formats.at(fmt_name);
  if (ren->parsed()) {
    rspec.style = styles.at(style_name);
    rspec.color_mode = colors.at(color_name);
  }

  try {
    if (gen->parsed()) {
      if (graph_kind == "pegasus" && gz.value_or(3) != 3) {
        err << "error: pegasus requires --z 3\n" << gen->help();
        return kUsage;
      }
      const Dims d{gx, gy, gz.value_or(graph_kind == "pegasus" ? 3 : 1)};
      try {
        validate_dims(d);
      } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
      }
      const TopologyGraph g = graph_kind == "pegasus" ? pegasus_graph(d) : chimera_graph(d);
      detail::emit(out_path, export_graph(g, fmt), out);
      return kOk;
    }
    if (ana->parsed()) {
      if (*k4_opt) aflags.k4_limit = k4_limit;
      const TopologyGraph g = parse_graph(read_input(in_path));
      out << detail::analyze(g, aflags).dump(2) << '\n';
      return kOk;
    }
    if (chk->parsed()) {
      const auto r = rules_equivalent({cx, cy, 3});
      out << "one-line rule edges: " << r.general_count << '\n'
          << "grouped rule edges:  " << r.grouped_count << '\n';
      if (r.equivalent) {
        out << "equivalent\n";
        return kOk;
      }
      const Dims d{cx, cy, 3};
      out << "MISMATCH\n";
      for (const auto& [a, b] : r.only_general)
        out << "only one-line: " << from_linear(a, d) << " -- " << from_linear(b, d) << '\n';
      for (const auto& [a, b] : r.only_grouped)
        out << "only grouped:  " << from_linear(a, d) << " -- " << from_linear(b, d) << '\n';
      return kCheckFailed;
    }
    if (ren->parsed()) {
      const auto input = detail::load_render_input(read_input(in_path));
      const std::string svg =
          std::visit([&](const auto& g) { return render_svg(g, rspec); }, input);
      detail::emit(out_path, svg, out);
      return kOk;
    }
    if (conv->parsed()) {
      const TopologyGraph g = parse_graph(read_input(in_path));
      detail::emit(out_path, export_graph(g, fmt), out);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedTopology& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}

}  // namespace pegasus_topo::cli
