#pragma once

// SVG depictions. Positions follow the figure convention: origin bottom
// left, x to the right, y upward, and each layer z displaced up and to the
// right. Side i=0 is the left column in the classic cell drawing and the
// horizontal qubits in the diamond and triangle drawings; side i=1 is the
// right column / the vertical qubits.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pegasus_topo/analysis.hpp"
#include "pegasus_topo/chimera.hpp"
#include "pegasus_topo/coords.hpp"
#include "pegasus_topo/edge.hpp"
#include "pegasus_topo/graph.hpp"
#include "pegasus_topo/pegasus.hpp"

namespace pegasus_topo {

enum class RenderStyle : unsigned char { TiltedClassic, Diamond, Triangle, Compressed };
enum class ColorMode : unsigned char { Monochrome, ByEdgeClass, ByColorGroup };

constexpr std::string_view to_string(RenderStyle s) noexcept {
  switch (s) {
    case RenderStyle::TiltedClassic: return "classic";
    case RenderStyle::Diamond: return "diamond";
    case RenderStyle::Triangle: return "triangle";
    case RenderStyle::Compressed: return "compressed";
  }
  return "classic";
}

struct RenderSpec {
  RenderStyle style = RenderStyle::TiltedClassic;
  bool tilted_lattice = false;
  ColorMode color_mode = ColorMode::ByColorGroup;
  double cell_pitch = 100.0;   // distance between neighbouring cells of one layer
  double cell_size = 0.6;      // drawn cell extent, fraction of the pitch
  double layer_offset = 0.3;   // up-right displacement per layer, fraction of the pitch
  double lattice_shear = 0.35; // x shift per unit y when tilted_lattice is set
  double qubit_tilt = 0.06;    // column lean of the classic cell drawing
  double vertex_radius = 2.5;
  double chimera_stroke = 0.6;
  double pegasus_stroke = 0.9;
  double margin = 20.0;
  bool show_boundary_stubs = false;
  std::size_t max_cells = 10000;
};

inline constexpr std::string_view kGrey = "#808080";
inline constexpr std::string_view kBlack = "#000000";

constexpr std::string_view group_color(ColorGroup g) noexcept {
  switch (g) {
    case ColorGroup::Blue: return "#0000FF";
    case ColorGroup::Red: return "#FF0000";
    case ColorGroup::Green: return "#008000";
    case ColorGroup::Orange: return "#FFA500";
    case ColorGroup::None: break;
  }
  return kBlack;
}

constexpr std::string_view edge_color(EdgeClass c, ColorMode mode) noexcept {
  if (mode == ColorMode::Monochrome) return c.is_chimera() ? kGrey : kBlack;
  if (c.kind == EdgeKind::PegasusIntraCell) return kBlack;
  if (mode == ColorMode::ByColorGroup) {
    if (c.kind == EdgeKind::PegasusInterLayer) return group_color(c.group);
    return kGrey;
  }
  switch (c.kind) {
    case EdgeKind::ChimeraIntraCell: return kGrey;
    case EdgeKind::ChimeraHorizontal: return "#A0522D";
    case EdgeKind::ChimeraVertical: return "#800080";
    case EdgeKind::PegasusInterLayer: return "#008B8B";
    case EdgeKind::PegasusIntraCell: break;
  }
  return kBlack;
}

struct Point {
  double x = 0;
  double y = 0;
};

namespace detail {

// Qubit position inside a unit cell box [0,1]^2 for the given style.
inline Point cell_local(RenderStyle style, const QubitCoord& q, double tilt) {
  const int slot = 2 * q.j + q.k;
  switch (style) {
    case RenderStyle::TiltedClassic: {
      const double v = 0.125 + 0.25 * slot;
      const double u = (q.i == 0 ? 0.15 : 0.85) + tilt * (slot - 1.5);
      return {u, v};
    }
    case RenderStyle::Diamond: {
      static constexpr std::array<double, 4> along{0.0, 0.25, 0.75, 1.0};
      return q.i == 0 ? Point{along[slot], 0.5} : Point{0.5, along[slot]};
    }
    case RenderStyle::Triangle: {
      const double t = 0.1 + 0.25 * slot;
      return q.i == 0 ? Point{t, 0.0} : Point{1.0, t + 0.1};
    }
    case RenderStyle::Compressed: break;
  }
  return {0.5, 0.5};
}

class Layout {
 public:
  explicit Layout(const RenderSpec& s) : s_(s) {}

  // Lower-left corner of the drawn box of cell c, before shear.
  Point cell_origin(double x, double y, double z) const {
    const double p = s_.cell_pitch;
    Point o{x * p + z * s_.layer_offset * p, y * p + z * s_.layer_offset * p};
    return o;
  }

  Point shear(Point pt) const {
    if (s_.tilted_lattice) pt.x += s_.lattice_shear * pt.y;
    return pt;
  }

  Point qubit(const QubitCoord& q) const {
    const Point o = cell_origin(q.x, q.y, q.z);
    const Point l = cell_local(s_.style, q, s_.qubit_tilt);
    const double size = s_.cell_size * s_.cell_pitch;
    return shear({o.x + l.x * size, o.y + l.y * size});
  }

  Point cell_center(const CellCoord& c) const {
    const Point o = cell_origin(c.x, c.y, c.z);
    const double half = 0.5 * s_.cell_size * s_.cell_pitch;
    return shear({o.x + half, o.y + half});
  }

 private:
  const RenderSpec& s_;
};

struct Segment {
  Point from;
  Point to;
  std::string css;
  std::string_view color;
  double width;
};

struct Dot {
  Point at;
  std::string css;
};

class SvgWriter {
 public:
  explicit SvgWriter(const RenderSpec& s) : s_(s) {}

  void add_segment(Segment seg) { segments_.push_back(std::move(seg)); }
  void add_dot(Dot d) { dots_.push_back(std::move(d)); }

  std::string finish() const {
    double minx = std::numeric_limits<double>::max(), miny = minx;
    double maxx = std::numeric_limits<double>::lowest(), maxy = maxx;
    auto grow = [&](Point p) {
      minx = std::min(minx, p.x);
      miny = std::min(miny, p.y);
      maxx = std::max(maxx, p.x);
      maxy = std::max(maxy, p.y);
    };
    for (const auto& d : dots_) grow(d.at);
    for (const auto& sg : segments_) {
      grow(sg.from);
      grow(sg.to);
    }
    if (dots_.empty() && segments_.empty()) minx = miny = maxx = maxy = 0;
    const double w = maxx - minx + 2 * s_.margin;
    const double h = maxy - miny + 2 * s_.margin;
    auto tx = [&](double x) { return x - minx + s_.margin; };
    auto ty = [&](double y) { return maxy - y + s_.margin; };  // flip: y grows upward

    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
       << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    os << "<g id=\"edges\" stroke-linecap=\"round\">\n";
    for (const auto& sg : segments_)
      os << "<line class=\"" << sg.css << "\" x1=\"" << tx(sg.from.x) << "\" y1=\""
         << ty(sg.from.y) << "\" x2=\"" << tx(sg.to.x) << "\" y2=\"" << ty(sg.to.y)
         << "\" stroke=\"" << sg.color << "\" stroke-width=\"" << sg.width << "\"/>\n";
    os << "</g>\n<g id=\"vertices\">\n";
    for (const auto& d : dots_)
      os << "<circle class=\"" << d.css << "\" cx=\"" << tx(d.at.x) << "\" cy=\"" << ty(d.at.y)
         << "\" r=\"" << s_.vertex_radius << "\" fill=\"" << kBlack << "\"/>\n";
    os << "</g>\n</svg>\n";
    return std::move(os).str();
  }

 private:
  const RenderSpec& s_;
  std::vector<Segment> segments_;
  std::vector<Dot> dots_;
};

inline void check_spec(const RenderSpec& spec, std::size_t cells) {
  if (!(spec.cell_pitch > 0)) throw UsageError("cell_pitch must be positive");
  if (cells > spec.max_cells)
    throw UsageError("graph has " + std::to_string(cells) + " cells, render limit is " +
                     std::to_string(spec.max_cells));
}

// Couplers that the unbounded lattice would have across the patch border.
// The patch is embedded at offset (1, 1) in a lattice two cells larger.
inline void add_boundary_stubs(const TopologyGraph& g, const RenderSpec& spec,
                               const Layout& layout, SvgWriter& svg) {
  const Dims& d = g.dims();
  const Dims big{d.X + 2, d.Y + 2, d.Z};
  const TopologyGraph ext = is_pegasus(g) ? pegasus_graph(big) : chimera_graph(big);
  auto inside = [&](const QubitCoord& q) {
    return q.x >= 1 && q.x <= d.X && q.y >= 1 && q.y <= d.Y;
  };
  for (const Edge& e : ext.edges()) {
    QubitCoord a = ext.coord(e.a);
    QubitCoord b = ext.coord(e.b);
    if (inside(a) == inside(b)) continue;
    if (!inside(a)) std::swap(a, b);
    a.x -= 1, a.y -= 1, b.x -= 1, b.y -= 1;
    const Point pa = layout.qubit(a);
    const Point pb = layout.qubit(b);
    const Point mid{pa.x + 0.35 * (pb.x - pa.x), pa.y + 0.35 * (pb.y - pa.y)};
    const double w = e.cls.is_chimera() ? spec.chimera_stroke : spec.pegasus_stroke;
    svg.add_segment({pa, mid, "stub", edge_color(e.cls, spec.color_mode), w});
  }
}

}  // namespace detail

inline std::string render_svg(const TopologyGraph& g, const RenderSpec& spec) {
  if (spec.style == RenderStyle::Compressed)
    throw UsageError("compressed style needs a compressed graph");
  detail::check_spec(spec, g.dims().cell_count());
  const detail::Layout layout(spec);
  detail::SvgWriter svg(spec);
  for (const Edge& e : g.edges()) {
    const double w = e.cls.is_chimera() ? spec.chimera_stroke : spec.pegasus_stroke;
    svg.add_segment({layout.qubit(g.coord(e.a)), layout.qubit(g.coord(e.b)),
                     "edge " + std::string(to_string(e.cls)), edge_color(e.cls, spec.color_mode),
                     w});
  }
  if (spec.show_boundary_stubs) detail::add_boundary_stubs(g, spec, layout, svg);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    svg.add_dot({layout.qubit(g.coord(v)), "qubit"});
  return svg.finish();
}

inline std::string render_svg(const CompressedGraph& g, const RenderSpec& spec) {
  if (spec.style != RenderStyle::Compressed)
    throw UsageError("a compressed graph can only be drawn in the compressed style");
  detail::check_spec(spec, g.vertex_count());
  const detail::Layout layout(spec);
  detail::SvgWriter svg(spec);
  for (const auto& e : g.edges) {
    const bool grid = e.kind == CompressedEdgeKind::GridSameLayer;
    const std::string_view color = grid ? kGrey : kBlack;
    const double w = grid ? spec.chimera_stroke : spec.pegasus_stroke * static_cast<double>(e.multiplicity);
    svg.add_segment({layout.cell_center(g.cell(e.a)), layout.cell_center(g.cell(e.b)),
                     "edge " + std::string(to_string(e.kind)), color, w});
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    svg.add_dot({layout.cell_center(g.cell(v)), "cell"});
  return svg.finish();
}

}  // namespace pegasus_topo
