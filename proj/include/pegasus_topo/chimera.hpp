#pragma once

// Chimera layers: a K4,4 per cell, side i=1 coupled along x to the same
// (j, k) of the neighbouring cell, side i=0 coupled along y. Couplers that
// would leave the X x Y patch are dropped.

#include <optional>
#include <vector>

#include "pegasus_topo/coords.hpp"
#include "pegasus_topo/edge.hpp"
#include "pegasus_topo/graph.hpp"
#include "pegasus_topo/parallel.hpp"

namespace pegasus_topo {

namespace detail {

inline void emit_k44(const CellCoord& c, const Dims& d, std::vector<Edge>& out) {
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      for (int jp = 0; jp < 2; ++jp)
        for (int kp = 0; kp < 2; ++kp)
          out.push_back(Edge::make(linear_index_unchecked({c.x, c.y, c.z, 0, j, k}, d),
                                   linear_index_unchecked({c.x, c.y, c.z, 1, jp, kp}, d),
                                   EdgeClass::chimera_intra()));
}

inline void emit_horizontal(const CellCoord& c, const Dims& d, std::vector<Edge>& out) {
  if (c.x + 1 >= d.X) return;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      out.push_back(Edge::make(linear_index_unchecked({c.x, c.y, c.z, 1, j, k}, d),
                               linear_index_unchecked({c.x + 1, c.y, c.z, 1, j, k}, d),
                               EdgeClass::chimera_horizontal()));
}

inline void emit_vertical(const CellCoord& c, const Dims& d, std::vector<Edge>& out) {
  if (c.y + 1 >= d.Y) return;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      out.push_back(Edge::make(linear_index_unchecked({c.x, c.y, c.z, 0, j, k}, d),
                               linear_index_unchecked({c.x, c.y + 1, c.z, 0, j, k}, d),
                               EdgeClass::chimera_vertical()));
}

inline void emit_chimera_cell(const CellCoord& c, const Dims& d, std::vector<Edge>& out) {
  emit_k44(c, d, out);
  emit_horizontal(c, d, out);
  emit_vertical(c, d, out);
}

}  // namespace detail

// The 16 couplers of one K4,4 cell.
inline std::vector<Edge> k44_edges(const CellCoord& cell, const Dims& d) {
  validate_dims(d);
  require_valid(cell, d);
  std::vector<Edge> out;
  out.reserve(16);
  detail::emit_k44(cell, d, out);
  canonicalize(out);
  return out;
}

inline std::vector<Edge> chimera_horizontal_edges(const Dims& d, GenerateOptions opts = {}) {
  validate_dims(d);
  return detail::generate_per_cell(d, opts, detail::emit_horizontal);
}

inline std::vector<Edge> chimera_vertical_edges(const Dims& d, GenerateOptions opts = {}) {
  validate_dims(d);
  return detail::generate_per_cell(d, opts, detail::emit_vertical);
}

constexpr std::size_t chimera_edge_count(const Dims& d) noexcept {
  const auto X = static_cast<std::size_t>(d.X);
  const auto Y = static_cast<std::size_t>(d.Y);
  const auto Z = static_cast<std::size_t>(d.Z);
  return 16 * X * Y * Z + 4 * (X - 1) * Y * Z + 4 * X * (Y - 1) * Z;
}

// Every layer z of d becomes an independent Chimera graph; Z=3 gives three
// disjoint copies.
inline TopologyGraph chimera_graph(const Dims& d, GenerateOptions opts = {}) {
  validate_dims(d);
  return TopologyGraph(d, detail::generate_per_cell(d, opts, detail::emit_chimera_cell));
}

// Closed-form membership test for chimera_graph(d).
inline std::optional<EdgeClass> chimera_has_edge(const QubitCoord& a, const QubitCoord& b,
                                                 const Dims& d) {
  require_valid(a, d);
  require_valid(b, d);
  if (a.z != b.z) return std::nullopt;
  if (a.cell() == b.cell()) {
    if (a.i != b.i) return EdgeClass::chimera_intra();
    return std::nullopt;
  }
  if (a.i != b.i || a.j != b.j || a.k != b.k) return std::nullopt;
  const int dx = b.x - a.x;
  const int dy = b.y - a.y;
  if (a.i == 1 && dy == 0 && (dx == 1 || dx == -1)) return EdgeClass::chimera_horizontal();
  if (a.i == 0 && dx == 0 && (dy == 1 || dy == -1)) return EdgeClass::chimera_vertical();
  return std::nullopt;
}

}  // namespace pegasus_topo
