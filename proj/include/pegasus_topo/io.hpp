#pragma once

// Graph interchange: EdgeListV1, DOT, GraphML and JSON writers with matching
// readers. All writers emit edges in canonical order and are byte-stable.
//
// EdgeListV1:
//   # pegasus-topo v1 X=<X> Y=<Y> Z=<Z>
//   <idx_a> <idx_b> <class>
//   ...

#include <charconv>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pegasus_topo/analysis.hpp"
#include "pegasus_topo/coords.hpp"
#include "pegasus_topo/edge.hpp"
#include "pegasus_topo/graph.hpp"

namespace pegasus_topo {

enum class ExportFormat : unsigned char { EdgeListV1, Dot, GraphML, Json };

constexpr std::string_view to_string(ExportFormat f) noexcept {
  switch (f) {
    case ExportFormat::EdgeListV1: return "edgelist";
    case ExportFormat::Dot: return "dot";
    case ExportFormat::GraphML: return "graphml";
    case ExportFormat::Json: return "json";
  }
  return "edgelist";
}

inline std::optional<ExportFormat> export_format_from_string(std::string_view s) {
  for (auto f : {ExportFormat::EdgeListV1, ExportFormat::Dot, ExportFormat::GraphML,
                 ExportFormat::Json})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

namespace detail {

inline std::string coord_label(const QubitCoord& q) {
  std::ostringstream os;
  os << q.x << ',' << q.y << ',' << q.z << ',' << q.i << ',' << q.j << ',' << q.k;
  return os.str();
}

inline std::string edgelist_header(const Dims& d) {
  return "# pegasus-topo v1 X=" + std::to_string(d.X) + " Y=" + std::to_string(d.Y) +
         " Z=" + std::to_string(d.Z);
}

inline void write_edgelist(std::ostream& os, const TopologyGraph& g) {
  os << edgelist_header(g.dims()) << '\n';
  for (const Edge& e : g.edges()) os << e.a << ' ' << e.b << ' ' << to_string(e.cls) << '\n';
}

inline void write_dot(std::ostream& os, const TopologyGraph& g) {
  const Dims& d = g.dims();
  os << "graph pegasus_topo {\n";
  os << "  graph [pegasus_X=\"" << d.X << "\", pegasus_Y=\"" << d.Y << "\", pegasus_Z=\"" << d.Z
     << "\"];\n";
  os << "  node [shape=point];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    os << "  " << v << " [coord=\"" << coord_label(g.coord(v)) << "\"];\n";
  for (const Edge& e : g.edges())
    os << "  " << e.a << " -- " << e.b << " [class=\"" << to_string(e.cls) << "\"];\n";
  os << "}\n";
}

inline void write_graphml(std::ostream& os, const TopologyGraph& g) {
  const Dims& d = g.dims();
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
     << "  <key id=\"dX\" for=\"graph\" attr.name=\"X\" attr.type=\"int\"/>\n"
     << "  <key id=\"dY\" for=\"graph\" attr.name=\"Y\" attr.type=\"int\"/>\n"
     << "  <key id=\"dZ\" for=\"graph\" attr.name=\"Z\" attr.type=\"int\"/>\n"
     << "  <key id=\"coord\" for=\"node\" attr.name=\"coord\" attr.type=\"string\"/>\n"
     << "  <key id=\"class\" for=\"edge\" attr.name=\"class\" attr.type=\"string\"/>\n"
     << "  <graph id=\"G\" edgedefault=\"undirected\">\n"
     << "    <data key=\"dX\">" << d.X << "</data>\n"
     << "    <data key=\"dY\">" << d.Y << "</data>\n"
     << "    <data key=\"dZ\">" << d.Z << "</data>\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    os << "    <node id=\"n" << v << "\"><data key=\"coord\">" << coord_label(g.coord(v))
       << "</data></node>\n";
  for (const Edge& e : g.edges())
    os << "    <edge source=\"n" << e.a << "\" target=\"n" << e.b << "\"><data key=\"class\">"
       << to_string(e.cls) << "</data></edge>\n";
  os << "  </graph>\n</graphml>\n";
}

inline nlohmann::json dims_json(const Dims& d) {
  return nlohmann::json{{"X", d.X}, {"Y", d.Y}, {"Z", d.Z}};
}

inline nlohmann::json graph_json(const TopologyGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.a, e.b, std::string(to_string(e.cls))});
  return nlohmann::json{{"format", "pegasus-topo"},
                        {"version", 1},
                        {"dims", dims_json(g.dims())},
                        {"vertex_count", g.vertex_count()},
                        {"edges", std::move(edges)}};
}

inline int parse_int(std::string_view s, std::size_t line, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ParseError(line, "invalid " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

inline Dims checked_dims(int X, int Y, int Z, std::size_t line) {
  Dims d{X, Y, Z};
  try {
    validate_dims(d);
  } catch (const ValidationError& e) {
    throw ParseError(line, std::string("bad dimensions: ") + e.what());
  }
  return d;
}

inline Edge checked_edge(std::uint64_t a, std::uint64_t b, std::string_view cls, const Dims& d,
                         std::size_t line) {
  const auto c = edge_class_from_string(cls);
  if (!c) throw ParseError(line, "unknown edge class '" + std::string(cls) + "'");
  if (a >= d.qubit_count() || b >= d.qubit_count())
    throw ValidationError("index", "line " + std::to_string(line) + ": vertex index out of range");
  if (a == b) throw ValidationError("index", "line " + std::to_string(line) + ": self-loop");
  return Edge::make(static_cast<VertexId>(a), static_cast<VertexId>(b), *c);
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  return lines;
}

inline TopologyGraph parse_dot(std::string_view text) {
  static const std::regex header(
      R"re(^\s*graph\s*\[pegasus_X="(\d+)",\s*pegasus_Y="(\d+)",\s*pegasus_Z="(\d+)"\];\s*$)re");
  static const std::regex edge(R"re(^\s*(\d+)\s*--\s*(\d+)\s*\[class="([a-z-]+)"\];\s*$)re");
  static const std::regex node(R"re(^\s*(\d+)\s*\[.*\];\s*$)re");
  const auto lines = split_lines(text);
  std::optional<Dims> dims;
  std::vector<Edge> edges;
  bool opened = false;
  bool closed = false;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string line(lines[n]);
    const std::size_t lineno = n + 1;
    std::smatch m;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!opened) {
      if (!std::regex_match(line, std::regex(R"re(^\s*graph\s+\w+\s*\{\s*$)re")))
        throw ParseError(lineno, "expected 'graph <name> {'");
      opened = true;
    } else if (closed) {
      throw ParseError(lineno, "content after closing brace");
    } else if (std::regex_match(line, m, header)) {
      dims = checked_dims(parse_int(m.str(1), lineno, "X"), parse_int(m.str(2), lineno, "Y"),
                          parse_int(m.str(3), lineno, "Z"), lineno);
    } else if (std::regex_match(line, m, edge)) {
      if (!dims) throw ParseError(lineno, "edge before graph dimensions");
      edges.push_back(checked_edge(std::stoull(m.str(1)), std::stoull(m.str(2)), m.str(3), *dims,
                                   lineno));
    } else if (std::regex_match(line, std::regex(R"re(^\s*\}\s*$)re"))) {
      closed = true;
    } else if (std::regex_match(line, std::regex(R"re(^\s*node\s*\[.*\];\s*$)re")) ||
               std::regex_match(line, node)) {
      continue;
    } else {
      throw ParseError(lineno, "unrecognized DOT statement");
    }
  }
  if (!dims) throw ParseError(lines.size(), "missing graph dimensions");
  if (!closed) throw ParseError(lines.size(), "missing closing brace");
  return TopologyGraph(*dims, std::move(edges));
}

inline TopologyGraph parse_graphml(std::string_view text) {
  static const std::regex data(R"re(^\s*<data key="d([XYZ])">(\d+)</data>\s*$)re");
  static const std::regex edge(
      R"re(^\s*<edge source="n(\d+)" target="n(\d+)"><data key="class">([a-z-]+)</data></edge>\s*$)re");
  const auto lines = split_lines(text);
  int X = 0, Y = 0, Z = 0;
  std::optional<Dims> dims;
  std::vector<Edge> edges;
  bool closed = false;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string line(lines[n]);
    const std::size_t lineno = n + 1;
    std::smatch m;
    if (std::regex_match(line, m, data)) {
      const int v = parse_int(m.str(2), lineno, "dimension");
      (m.str(1) == "X" ? X : m.str(1) == "Y" ? Y : Z) = v;
    } else if (std::regex_match(line, m, edge)) {
      if (!dims) dims = checked_dims(X, Y, Z, lineno);
      edges.push_back(checked_edge(std::stoull(m.str(1)), std::stoull(m.str(2)), m.str(3), *dims,
                                   lineno));
    } else if (line.find("</graphml>") != std::string::npos) {
      closed = true;
    }
  }
  if (!closed) throw ParseError(lines.size(), "missing </graphml>");
  if (!dims) dims = checked_dims(X, Y, Z, lines.size());
  return TopologyGraph(*dims, std::move(edges));
}

inline TopologyGraph parse_graph_json(const nlohmann::json& j) {
  try {
    if (j.at("format") != "pegasus-topo" || j.at("version") != 1)
      throw ParseError(1, "not a pegasus-topo v1 JSON graph");
    const auto& dj = j.at("dims");
    const Dims d = checked_dims(dj.at("X").get<int>(), dj.at("Y").get<int>(),
                                dj.at("Z").get<int>(), 1);
    std::vector<Edge> edges;
    const auto& ej = j.at("edges");
    edges.reserve(ej.size());
    std::size_t idx = 0;
    for (const auto& e : ej) {
      ++idx;
      if (!e.is_array() || e.size() != 3) throw ParseError(idx, "edge entry must be [a, b, class]");
      edges.push_back(checked_edge(e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>(),
                                   e[2].get<std::string>(), d, idx));
    }
    return TopologyGraph(d, std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("invalid JSON graph: ") + e.what());
  }
}

}  // namespace detail

inline void export_graph(std::ostream& os, const TopologyGraph& g, ExportFormat fmt) {
  switch (fmt) {
    case ExportFormat::EdgeListV1: detail::write_edgelist(os, g); break;
    case ExportFormat::Dot: detail::write_dot(os, g); break;
    case ExportFormat::GraphML: detail::write_graphml(os, g); break;
    case ExportFormat::Json: os << detail::graph_json(g).dump() << '\n'; break;
  }
}

inline std::string export_graph(const TopologyGraph& g, ExportFormat fmt) {
  std::ostringstream os;
  export_graph(os, g, fmt);
  return std::move(os).str();
}

// Inverse of export_graph(g, EdgeListV1). Blank lines are ignored.
inline TopologyGraph parse_edgelist(std::string_view text) {
  static const std::regex header(R"re(^# pegasus-topo v1 X=(\d+) Y=(\d+) Z=(\d+)$)re");
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header");
  std::smatch m;
  const std::string first(lines[0]);
  if (!std::regex_match(first, m, header))
    throw ParseError(1, "expected '# pegasus-topo v1 X=<X> Y=<Y> Z=<Z>'");
  const Dims d = detail::checked_dims(detail::parse_int(m.str(1), 1, "X"),
                                      detail::parse_int(m.str(2), 1, "Y"),
                                      detail::parse_int(m.str(3), 1, "Z"), 1);
  std::vector<Edge> edges;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const std::size_t lineno = n + 1;
    std::istringstream is{std::string(lines[n])};
    std::string a, b, cls, extra;
    if (!(is >> a)) continue;
    if (!(is >> b >> cls) || (is >> extra))
      throw ParseError(lineno, "expected '<idx_a> <idx_b> <class>'");
    std::uint64_t ua = 0, ub = 0;
    for (auto [s, out] : {std::pair{&a, &ua}, std::pair{&b, &ub}}) {
      auto [p, ec] = std::from_chars(s->data(), s->data() + s->size(), *out);
      if (ec != std::errc{} || p != s->data() + s->size())
        throw ParseError(lineno, "invalid vertex index '" + *s + "'");
    }
    edges.push_back(detail::checked_edge(ua, ub, cls, d, lineno));
  }
  return TopologyGraph(d, std::move(edges));
}

inline TopologyGraph parse_json_graph(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  return detail::parse_graph_json(j);
}

// Recognizes the four formats by their leading bytes.
inline std::optional<ExportFormat> detect_format(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string_view::npos) return std::nullopt;
  const std::string_view t = text.substr(pos);
  if (t.starts_with("# pegasus-topo")) return ExportFormat::EdgeListV1;
  if (t.starts_with("{")) return ExportFormat::Json;
  if (t.starts_with("<")) return ExportFormat::GraphML;
  if (t.starts_with("graph")) return ExportFormat::Dot;
  return std::nullopt;
}

inline TopologyGraph parse_graph(std::string_view text, ExportFormat fmt) {
  switch (fmt) {
    case ExportFormat::EdgeListV1: return parse_edgelist(text);
    case ExportFormat::Dot: return detail::parse_dot(text);
    case ExportFormat::GraphML: return detail::parse_graphml(text);
    case ExportFormat::Json: return parse_json_graph(text);
  }
  return parse_edgelist(text);
}

inline TopologyGraph parse_graph(std::string_view text) {
  const auto fmt = detect_format(text);
  if (!fmt) throw ParseError(1, "unrecognized graph format");
  return parse_graph(text, *fmt);
}

// ---------------------------------------------------------------------------
// Compressed graph JSON (embedded in analyze reports, accepted by render)

inline nlohmann::json compressed_to_json(const CompressedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges)
    edges.push_back({e.a, e.b, std::string(to_string(e.kind)), e.multiplicity, e.edge_count});
  return nlohmann::json{{"format", "pegasus-topo-compressed"},
                        {"version", 1},
                        {"dims", detail::dims_json(g.dims)},
                        {"vertex_count", g.vertex_count()},
                        {"edges", std::move(edges)}};
}

inline CompressedGraph compressed_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format") != "pegasus-topo-compressed" || j.at("version") != 1)
      throw ParseError(1, "not a pegasus-topo compressed graph");
    const auto& dj = j.at("dims");
    CompressedGraph g{detail::checked_dims(dj.at("X").get<int>(), dj.at("Y").get<int>(),
                                           dj.at("Z").get<int>(), 1),
                      {}};
    std::size_t idx = 0;
    for (const auto& e : j.at("edges")) {
      ++idx;
      CompressedEdge ce;
      ce.a = e.at(0).get<std::size_t>();
      ce.b = e.at(1).get<std::size_t>();
      const auto kind = e.at(2).get<std::string>();
      if (kind == "grid") ce.kind = CompressedEdgeKind::GridSameLayer;
      else if (kind == "bundle") ce.kind = CompressedEdgeKind::InterLayerBundle;
      else throw ParseError(idx, "unknown compressed edge kind '" + kind + "'");
      ce.multiplicity = e.at(3).get<std::size_t>();
      ce.edge_count = e.at(4).get<std::size_t>();
      if (ce.a >= g.vertex_count() || ce.b >= g.vertex_count() || ce.a >= ce.b)
        throw ValidationError("index", "compressed edge " + std::to_string(idx) + " out of range");
      g.edges.push_back(ce);
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("invalid compressed graph: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Files; "-" means stdin / stdout.

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed for '" + path + "'");
  return data;
}

inline void write_output(const std::string& path, std::string_view bytes) {
  if (path == "-") {
    std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    std::cout.flush();
    if (!std::cout) throw IoError("write to stdout failed");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace pegasus_topo
