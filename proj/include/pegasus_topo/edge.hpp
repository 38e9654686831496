#pragma once

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "pegasus_topo/coords.hpp"

namespace pegasus_topo {

enum class EdgeKind : unsigned char {
  ChimeraIntraCell,
  ChimeraHorizontal,
  ChimeraVertical,
  PegasusIntraCell,
  PegasusInterLayer,
};

// Group of an inter-layer edge, fixed by the (i, j) of its forward source:
// Blue (0,0), Red (1,0), Green (0,1), Orange (1,1).
enum class ColorGroup : unsigned char { None, Blue, Red, Green, Orange };

constexpr ColorGroup color_group_for(int i, int j) noexcept {
  if (j == 0) return i == 0 ? ColorGroup::Blue : ColorGroup::Red;
  return i == 0 ? ColorGroup::Green : ColorGroup::Orange;
}

struct EdgeClass {
  EdgeKind kind = EdgeKind::ChimeraIntraCell;
  ColorGroup group = ColorGroup::None;  // set only for PegasusInterLayer

  static constexpr EdgeClass chimera_intra() { return {EdgeKind::ChimeraIntraCell}; }
  static constexpr EdgeClass chimera_horizontal() { return {EdgeKind::ChimeraHorizontal}; }
  static constexpr EdgeClass chimera_vertical() { return {EdgeKind::ChimeraVertical}; }
  static constexpr EdgeClass pegasus_intra() { return {EdgeKind::PegasusIntraCell}; }
  static constexpr EdgeClass interlayer(ColorGroup g) {
    return {EdgeKind::PegasusInterLayer, g};
  }

  constexpr bool is_chimera() const noexcept {
    return kind == EdgeKind::ChimeraIntraCell || kind == EdgeKind::ChimeraHorizontal ||
           kind == EdgeKind::ChimeraVertical;
  }

  friend constexpr auto operator<=>(const EdgeClass&, const EdgeClass&) = default;
};

inline constexpr std::array<std::pair<EdgeClass, std::string_view>, 8> kEdgeClassNames{{
    {EdgeClass::chimera_intra(), "chimera-intra"},
    {EdgeClass::chimera_horizontal(), "chimera-horizontal"},
    {EdgeClass::chimera_vertical(), "chimera-vertical"},
    {EdgeClass::pegasus_intra(), "pegasus-intra"},
    {EdgeClass::interlayer(ColorGroup::Blue), "interlayer-blue"},
    {EdgeClass::interlayer(ColorGroup::Red), "interlayer-red"},
    {EdgeClass::interlayer(ColorGroup::Green), "interlayer-green"},
    {EdgeClass::interlayer(ColorGroup::Orange), "interlayer-orange"},
}};

constexpr std::string_view to_string(EdgeClass c) noexcept {
  for (const auto& [cls, name] : kEdgeClassNames)
    if (cls == c) return name;
  return "unknown";
}

constexpr std::optional<EdgeClass> edge_class_from_string(std::string_view s) noexcept {
  for (const auto& [cls, name] : kEdgeClassNames)
    if (name == s) return cls;
  return std::nullopt;
}

constexpr std::string_view to_string(ColorGroup g) noexcept {
  switch (g) {
    case ColorGroup::Blue: return "blue";
    case ColorGroup::Red: return "red";
    case ColorGroup::Green: return "green";
    case ColorGroup::Orange: return "orange";
    case ColorGroup::None: break;
  }
  return "none";
}

inline std::ostream& operator<<(std::ostream& os, EdgeClass c) { return os << to_string(c); }

// Undirected coupler between two qubits, stored by linear index with a < b.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;
  EdgeClass cls{};

  // Canonicalizing constructor; endpoints may be given in either order.
  static constexpr Edge make(VertexId u, VertexId v, EdgeClass c) noexcept {
    return u < v ? Edge{u, v, c} : Edge{v, u, c};
  }

  constexpr std::pair<VertexId, VertexId> endpoints() const noexcept { return {a, b}; }

  // Canonical order is by endpoint pair; the class breaks ties only so that
  // sorting is total.
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(const QubitCoord& p, const QubitCoord& q, const Dims& d, EdgeClass c) {
  const VertexId u = linear_index(p, d);
  const VertexId v = linear_index(q, d);
  if (u == v) throw ValidationError("b", "self-loop edge is not allowed");
  return Edge::make(u, v, c);
}

}  // namespace pegasus_topo
