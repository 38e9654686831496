#pragma once

// Pegasus = three Chimera layers plus
//   * a k-coupler inside every cell: (x,y,z,i,j,0) -- (x,y,z,i,j,1)
//   * inter-layer K2,4 bundles from layer z to layer (z+1) mod 3.
// The inter-layer couplers are produced two ways: from the single closed
// formula, and from the table of eight colored rules. rules_equivalent()
// compares the two.

#include <algorithm>
#include <array>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pegasus_topo/chimera.hpp"
#include "pegasus_topo/coords.hpp"
#include "pegasus_topo/edge.hpp"
#include "pegasus_topo/graph.hpp"
#include "pegasus_topo/parallel.hpp"

namespace pegasus_topo {

inline constexpr int kPegasusLayers = 3;

inline void require_pegasus(const Dims& d) {
  validate_dims(d);
  if (d.Z != kPegasusLayers)
    throw UnsupportedTopology("Pegasus requires Z=3, got Z=" + std::to_string(d.Z));
}

// One colored inter-layer rule: every qubit (x, y, z, side, j, k) of a
// source layer couples to all four qubits of side 1-side in cell
// (x + dx, y + dy, (z + 1) mod 3).
struct InterLayerRule {
  bool from_top_layer;  // true: applies to z = 2; false: z in {0, 1}
  int side;             // source i
  int j;                // source j
  int dx;
  int dy;
  ColorGroup group;

  constexpr bool applies_to(int z) const noexcept { return from_top_layer == (z == 2); }
};

inline constexpr std::array<InterLayerRule, 8> kInterLayerRules{{
    // z in {0, 1}
    {false, 0, 0, 0, 0, ColorGroup::Blue},
    {false, 1, 0, 0, 0, ColorGroup::Red},
    {false, 0, 1, -1, 0, ColorGroup::Green},
    {false, 1, 1, 0, -1, ColorGroup::Orange},
    // z = 2
    {true, 0, 0, 1, 1, ColorGroup::Blue},
    {true, 1, 0, 1, 1, ColorGroup::Red},
    {true, 0, 1, 0, 1, ColorGroup::Green},
    {true, 1, 1, 1, 0, ColorGroup::Orange},
}};

constexpr const InterLayerRule& rule_for(int z, int side, int j) noexcept {
  for (const auto& r : kInterLayerRules)
    if (r.applies_to(z) && r.side == side && r.j == j) return r;
  return kInterLayerRules[0];  // unreachable for valid input
}

// Target cell of the forward inter-layer bundle leaving (x, y, z, i, j, *),
// computed from the one-line formula
//   (x - j*(1-i) + [z==2], y - j*i + [z==2], (z+1) mod 3).
constexpr CellCoord general_rule_target(const QubitCoord& q) noexcept {
  const int not_i = 1 - q.i;
  int tx = q.x - q.j * not_i;
  int ty = q.y - q.j * q.i;
  if (q.z == 2) {
    tx += 1;
    ty += 1;
  }
  return {tx, ty, (q.z + 1) % kPegasusLayers};
}

namespace detail {

inline void emit_pegasus_intra(const CellCoord& c, const Dims& d, std::vector<Edge>& out) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.push_back(Edge::make(linear_index_unchecked({c.x, c.y, c.z, i, j, 0}, d),
                               linear_index_unchecked({c.x, c.y, c.z, i, j, 1}, d),
                               EdgeClass::pegasus_intra()));
}

inline void emit_bundle(const CellCoord& src, int side, int j, const CellCoord& dst,
                        ColorGroup group, const Dims& d, std::vector<Edge>& out) {
  if (!validate(dst, d)) return;
  for (int k = 0; k < 2; ++k)
    for (int jp = 0; jp < 2; ++jp)
      for (int kp = 0; kp < 2; ++kp)
        out.push_back(Edge::make(linear_index_unchecked({src.x, src.y, src.z, side, j, k}, d),
                                 linear_index_unchecked({dst.x, dst.y, dst.z, 1 - side, jp, kp}, d),
                                 EdgeClass::interlayer(group)));
}

inline void emit_interlayer_general(const CellCoord& c, const Dims& d, std::vector<Edge>& out) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const CellCoord dst = general_rule_target({c.x, c.y, c.z, i, j, 0});
      emit_bundle(c, i, j, dst, color_group_for(i, j), d, out);
    }
}

inline void emit_interlayer_grouped(const CellCoord& c, const Dims& d, std::vector<Edge>& out) {
  const int next = c.z == 2 ? 0 : c.z + 1;
  for (const InterLayerRule& r : kInterLayerRules) {
    if (!r.applies_to(c.z)) continue;
    emit_bundle(c, r.side, r.j, {c.x + r.dx, c.y + r.dy, next}, r.group, d, out);
  }
}

inline void emit_pegasus_cell(const CellCoord& c, const Dims& d, std::vector<Edge>& out) {
  emit_chimera_cell(c, d, out);
  emit_pegasus_intra(c, d, out);
  emit_interlayer_grouped(c, d, out);
}

}  // namespace detail

inline std::vector<Edge> pegasus_intracell_edges(const Dims& d, GenerateOptions opts = {}) {
  require_pegasus(d);
  return detail::generate_per_cell(d, opts, detail::emit_pegasus_intra);
}

inline std::vector<Edge> interlayer_edges_general(const Dims& d, GenerateOptions opts = {}) {
  require_pegasus(d);
  return detail::generate_per_cell(d, opts, detail::emit_interlayer_general);
}

inline std::vector<Edge> interlayer_edges_grouped(const Dims& d, GenerateOptions opts = {}) {
  require_pegasus(d);
  return detail::generate_per_cell(d, opts, detail::emit_interlayer_grouped);
}

struct RuleComparison {
  bool equivalent = true;
  std::size_t general_count = 0;
  std::size_t grouped_count = 0;
  std::vector<std::pair<VertexId, VertexId>> only_general;
  std::vector<std::pair<VertexId, VertexId>> only_grouped;
};

// Compares the two inter-layer formulations as sets of endpoint pairs.
inline RuleComparison rules_equivalent(const Dims& d, GenerateOptions opts = {}) {
  auto pairs = [](const std::vector<Edge>& edges) {
    std::vector<std::pair<VertexId, VertexId>> p;
    p.reserve(edges.size());
    for (const Edge& e : edges) p.push_back(e.endpoints());
    return p;  // already sorted: edges are canonical
  };
  const auto general = pairs(interlayer_edges_general(d, opts));
  const auto grouped = pairs(interlayer_edges_grouped(d, opts));

  RuleComparison r;
  r.general_count = general.size();
  r.grouped_count = grouped.size();
  std::set_difference(general.begin(), general.end(), grouped.begin(), grouped.end(),
                      std::back_inserter(r.only_general));
  std::set_difference(grouped.begin(), grouped.end(), general.begin(), general.end(),
                      std::back_inserter(r.only_grouped));
  r.equivalent = r.only_general.empty() && r.only_grouped.empty();
  return r;
}

inline TopologyGraph pegasus_graph(const Dims& d, GenerateOptions opts = {}) {
  require_pegasus(d);
  return TopologyGraph(d, detail::generate_per_cell(d, opts, detail::emit_pegasus_cell));
}

// True when g carries any Pegasus-only coupler (and so is not plain Chimera).
inline bool is_pegasus(const TopologyGraph& g) {
  if (g.dims().Z != kPegasusLayers) return false;
  return std::any_of(g.edges().begin(), g.edges().end(),
                     [](const Edge& e) { return !e.cls.is_chimera(); });
}

// Closed-form membership test for pegasus_graph(d).
inline std::optional<EdgeClass> has_edge(const QubitCoord& a, const QubitCoord& b,
                                         const Dims& d) {
  require_pegasus(d);
  if (auto c = chimera_has_edge(a, b, d)) return c;
  if (a.cell() == b.cell()) {
    if (a.i == b.i && a.j == b.j && a.k != b.k) return EdgeClass::pegasus_intra();
    return std::nullopt;
  }
  // Orient so that src is the forward source: dst lives in layer src.z + 1.
  const QubitCoord* src = &a;
  const QubitCoord* dst = &b;
  if ((b.z + 1) % kPegasusLayers == a.z) std::swap(src, dst);
  if ((src->z + 1) % kPegasusLayers != dst->z) return std::nullopt;
  if (src->i == dst->i) return std::nullopt;
  const InterLayerRule& r = rule_for(src->z, src->i, src->j);
  if (dst->x != src->x + r.dx || dst->y != src->y + r.dy) return std::nullopt;
  return EdgeClass::interlayer(r.group);
}

}  // namespace pegasus_topo
