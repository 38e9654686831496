#pragma once

// Structural analytics over generated graphs: degree histograms, the
// cell-level compressed graph, sound non-planarity certificates and
// K4 enumeration.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "pegasus_topo/coords.hpp"
#include "pegasus_topo/edge.hpp"
#include "pegasus_topo/graph.hpp"

namespace pegasus_topo {

// ---------------------------------------------------------------------------
// Degrees

using DegreeHistogram = std::map<std::size_t, std::size_t>;

inline DegreeHistogram degree_histogram(const TopologyGraph& g) {
  DegreeHistogram h;
  for (VertexId v = 0; v < g.vertex_count(); ++v) ++h[g.degree(v)];
  return h;
}

// A cell is interior when no coupler touching it was dropped at the patch
// border. For Pegasus the widest reach is one cell in each direction.
constexpr bool is_interior(const CellCoord& c, const Dims& d) noexcept {
  return c.x >= 1 && c.y >= 1 && c.x + 1 < d.X && c.y + 1 < d.Y;
}

// ---------------------------------------------------------------------------
// Inter-layer structure around one cell

namespace detail {

// For an inter-layer edge, the endpoint whose layer precedes the other's
// (cyclically). That endpoint holds the (i, j) that selected the rule.
inline std::pair<QubitCoord, QubitCoord> forward_orientation(const QubitCoord& a,
                                                             const QubitCoord& b,
                                                             const Dims& d) {
  if ((a.z + 1) % d.Z == b.z) return {a, b};
  return {b, a};
}

}  // namespace detail

// One K2,4: the two qubits (cell, side, j, k=0/1) of the source joined to
// every qubit on the opposite side of the target cell.
struct Bundle {
  CellCoord source;
  int side = 0;
  int j = 0;
  CellCoord target;
  std::size_t edge_count = 0;

  friend auto operator<=>(const Bundle&, const Bundle&) = default;
};

// Groups all inter-layer edges of g into bundles keyed by (source cell,
// side, j, target cell). Edges are assigned by graph content only.
inline std::vector<Bundle> interlayer_bundles(const TopologyGraph& g) {
  const Dims& d = g.dims();
  std::map<std::tuple<CellCoord, int, int, CellCoord>, std::size_t> groups;
  for (const Edge& e : g.edges()) {
    if (e.cls.kind != EdgeKind::PegasusInterLayer) continue;
    auto [src, dst] = detail::forward_orientation(g.coord(e.a), g.coord(e.b), d);
    ++groups[{src.cell(), src.i, src.j, dst.cell()}];
  }
  std::vector<Bundle> out;
  out.reserve(groups.size());
  for (const auto& [key, n] : groups) {
    const auto& [s, side, j, t] = key;
    out.push_back({s, side, j, t, n});
  }
  return out;
}

struct CellInterLayerProfile {
  CellCoord cell;
  std::size_t edge_count = 0;                    // inter-layer edges touching the cell
  std::vector<Bundle> bundles;                   // bundles with the cell at either end
  std::map<CellCoord, std::size_t> partners;     // partner cell -> bundle count

  std::size_t doubled_partner_count() const {
    return static_cast<std::size_t>(std::count_if(
        partners.begin(), partners.end(), [](const auto& p) { return p.second == 2; }));
  }
};

inline CellInterLayerProfile interlayer_profile(const TopologyGraph& g, const CellCoord& cell) {
  require_valid(cell, g.dims());
  CellInterLayerProfile p;
  p.cell = cell;
  for (const Bundle& b : interlayer_bundles(g)) {
    if (b.source == cell) {
      p.bundles.push_back(b);
      ++p.partners[b.target];
      p.edge_count += b.edge_count;
    } else if (b.target == cell) {
      p.bundles.push_back(b);
      ++p.partners[b.source];
      p.edge_count += b.edge_count;
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Compressed graph: one vertex per K4,4 cell

enum class CompressedEdgeKind : unsigned char { GridSameLayer, InterLayerBundle };

constexpr std::string_view to_string(CompressedEdgeKind k) noexcept {
  return k == CompressedEdgeKind::GridSameLayer ? "grid" : "bundle";
}

struct CompressedEdge {
  std::size_t a = 0;  // cell_index, a < b
  std::size_t b = 0;
  CompressedEdgeKind kind = CompressedEdgeKind::GridSameLayer;
  std::size_t multiplicity = 1;  // bundles represented (grid edges: 1)
  std::size_t edge_count = 0;    // physical couplers represented

  friend bool operator==(const CompressedEdge&, const CompressedEdge&) = default;
};

struct CompressedGraph {
  Dims dims;
  std::vector<CompressedEdge> edges;  // sorted by (a, b)

  std::size_t vertex_count() const noexcept { return dims.cell_count(); }
  CellCoord cell(std::size_t v) const noexcept { return cell_from_index(v, dims); }

  std::size_t degree(std::size_t v) const noexcept {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [v](const auto& e) {
      return e.a == v || e.b == v;
    }));
  }

  friend bool operator==(const CompressedGraph&, const CompressedGraph&) = default;
};

inline CompressedGraph compress(const TopologyGraph& g) {
  const Dims& d = g.dims();
  struct Acc {
    CompressedEdgeKind kind;
    std::size_t edges = 0;
    std::set<std::pair<int, int>> groups;  // (side, j) of the forward source
  };
  std::map<std::pair<std::size_t, std::size_t>, Acc> acc;
  for (const Edge& e : g.edges()) {
    if (e.cls.kind == EdgeKind::ChimeraIntraCell || e.cls.kind == EdgeKind::PegasusIntraCell)
      continue;
    const QubitCoord qa = g.coord(e.a);
    const QubitCoord qb = g.coord(e.b);
    std::size_t ca = cell_index(qa.cell(), d);
    std::size_t cb = cell_index(qb.cell(), d);
    if (ca > cb) std::swap(ca, cb);
    if (e.cls.kind == EdgeKind::PegasusInterLayer) {
      auto [src, dst] = detail::forward_orientation(qa, qb, d);
      auto& slot = acc.try_emplace({ca, cb}, Acc{CompressedEdgeKind::InterLayerBundle, 0, {}}).first->second;
      ++slot.edges;
      slot.groups.insert({src.i, src.j});
    } else {
      auto& slot = acc.try_emplace({ca, cb}, Acc{CompressedEdgeKind::GridSameLayer, 0, {}}).first->second;
      ++slot.edges;
    }
  }
  CompressedGraph out{d, {}};
  out.edges.reserve(acc.size());
  for (const auto& [key, a] : acc) {
    const std::size_t mult =
        a.kind == CompressedEdgeKind::InterLayerBundle ? a.groups.size() : 1;
    out.edges.push_back({key.first, key.second, a.kind, mult, a.edges});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Non-planarity certificates

// Simple undirected graph with sorted adjacency lists.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t n = 0) : adj_(n) {}

  static SimpleGraph from(const TopologyGraph& g) {
    SimpleGraph s(g.vertex_count());
    for (const Edge& e : g.edges()) s.add_edge(e.a, e.b);
    s.finish();
    return s;
  }

  // Bundle multiplicities are flattened.
  static SimpleGraph from(const CompressedGraph& g) {
    SimpleGraph s(g.vertex_count());
    for (const auto& e : g.edges) s.add_edge(static_cast<VertexId>(e.a), static_cast<VertexId>(e.b));
    s.finish();
    return s;
  }

  void add_edge(VertexId u, VertexId v) {
    if (u == v) return;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  void finish() {
    edges_ = 0;
    for (auto& row : adj_) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
      edges_ += row.size();
    }
    edges_ /= 2;
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const noexcept { return adj_[v]; }
  std::size_t degree(VertexId v) const noexcept { return adj_[v].size(); }
  bool adjacent(VertexId u, VertexId v) const noexcept {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::size_t edges_ = 0;
};

enum class PlanarityVerdict : unsigned char { NonPlanar, Unknown };
enum class CertificateKind : unsigned char { None, EdgeBound, KuratowskiSubdivision };
enum class KuratowskiGraph : unsigned char { K33, K5 };

constexpr std::string_view to_string(PlanarityVerdict v) noexcept {
  return v == PlanarityVerdict::NonPlanar ? "non-planar" : "unknown";
}
constexpr std::string_view to_string(CertificateKind k) noexcept {
  switch (k) {
    case CertificateKind::EdgeBound: return "edge-bound";
    case CertificateKind::KuratowskiSubdivision: return "kuratowski-subdivision";
    case CertificateKind::None: break;
  }
  return "none";
}
constexpr std::string_view to_string(KuratowskiGraph k) noexcept {
  return k == KuratowskiGraph::K33 ? "K3,3" : "K5";
}

struct KuratowskiWitness {
  KuratowskiGraph type = KuratowskiGraph::K33;
  // K3,3: branch[0..2] one side, branch[3..5] the other. K5: five vertices.
  std::vector<VertexId> branch;
  // One path per branch pair, endpoints included.
  std::vector<std::vector<VertexId>> paths;
};

struct NonplanarityCertificate {
  PlanarityVerdict verdict = PlanarityVerdict::Unknown;
  CertificateKind kind = CertificateKind::None;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t edge_bound = 0;  // 3n - 6 (0 when n < 3)
  std::optional<KuratowskiWitness> witness;
  std::size_t expansions = 0;  // search effort spent
};

struct PlanaritySearchOptions {
  std::size_t budget = 100000;  // BFS expansions across the whole search
  std::size_t ball_size = 10;   // branch candidates gathered around a seed
};

// Branch pairs that a witness of the given type must connect.
inline std::vector<std::pair<std::size_t, std::size_t>> kuratowski_pairs(KuratowskiGraph t) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  if (t == KuratowskiGraph::K33) {
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 3; b < 6; ++b) p.emplace_back(a, b);
  } else {
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = a + 1; b < 5; ++b) p.emplace_back(a, b);
  }
  return p;
}

// Checks that w is a genuine K3,3 / K5 subdivision inside g.
inline bool verify_witness(const SimpleGraph& g, const KuratowskiWitness& w) {
  const std::size_t nb = w.type == KuratowskiGraph::K33 ? 6 : 5;
  if (w.branch.size() != nb) return false;
  const auto pairs = kuratowski_pairs(w.type);
  if (w.paths.size() != pairs.size()) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (VertexId b : w.branch) {
    if (b >= g.vertex_count() || seen[b]) return false;
    seen[b] = 1;
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& path = w.paths[p];
    if (path.size() < 2) return false;
    const VertexId s = w.branch[pairs[p].first];
    const VertexId t = w.branch[pairs[p].second];
    const bool forward = path.front() == s && path.back() == t;
    const bool backward = path.front() == t && path.back() == s;
    if (!forward && !backward) return false;
    for (std::size_t q = 0; q + 1 < path.size(); ++q) {
      if (path[q + 1] >= g.vertex_count() || !g.adjacent(path[q], path[q + 1])) return false;
    }
    for (std::size_t q = 1; q + 1 < path.size(); ++q) {
      if (seen[path[q]]) return false;  // internal vertices are private to one path
      seen[path[q]] = 1;
    }
  }
  return true;
}

namespace detail {

class KuratowskiSearch {
 public:
  KuratowskiSearch(const SimpleGraph& g, PlanaritySearchOptions opts)
      : g_(g), opts_(opts), blocked_(g.vertex_count(), 0), parent_(g.vertex_count()),
        visit_(g.vertex_count(), 0) {}

  std::optional<KuratowskiWitness> run() {
    std::vector<VertexId> seeds;
    for (VertexId v = 0; v < g_.vertex_count(); ++v)
      if (g_.degree(v) >= 3) seeds.push_back(v);
    std::stable_sort(seeds.begin(), seeds.end(),
                     [&](VertexId a, VertexId b) { return g_.degree(a) > g_.degree(b); });
    for (VertexId seed : seeds) {
      if (exhausted()) break;
      if (auto w = search_k33(seed)) return w;
      if (g_.degree(seed) >= 4)
        if (auto w = search_k5(seed)) return w;
    }
    return std::nullopt;
  }

  std::size_t spent() const noexcept { return spent_; }

 private:
  bool exhausted() const noexcept { return spent_ >= opts_.budget; }

  // Vertices of degree >= min_degree nearest to seed (BFS order), seed excluded.
  std::vector<VertexId> ball(VertexId seed, std::size_t min_degree) {
    std::vector<VertexId> out;
    std::vector<VertexId> queue{seed};
    ++stamp_;
    visit_[seed] = stamp_;
    for (std::size_t h = 0; h < queue.size() && out.size() < opts_.ball_size; ++h) {
      for (VertexId w : g_.neighbors(queue[h])) {
        if (visit_[w] == stamp_) continue;
        visit_[w] = stamp_;
        queue.push_back(w);
        if (g_.degree(w) >= min_degree) {
          out.push_back(w);
          if (out.size() >= opts_.ball_size) break;
        }
      }
    }
    return out;
  }

  // BFS path s -> t avoiding blocked vertices (t itself may be blocked).
  std::optional<std::vector<VertexId>> route(VertexId s, VertexId t) {
    ++stamp_;
    std::vector<VertexId> queue{s};
    visit_[s] = stamp_;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      if (exhausted()) return std::nullopt;
      ++spent_;
      const VertexId u = queue[h];
      for (VertexId w : g_.neighbors(u)) {
        if (visit_[w] == stamp_) continue;
        if (w == t) {
          std::vector<VertexId> path{t};
          for (VertexId p = u; p != s; p = parent_[p]) path.push_back(p);
          path.push_back(s);
          std::reverse(path.begin(), path.end());
          return path;
        }
        if (blocked_[w]) continue;
        visit_[w] = stamp_;
        parent_[w] = u;
        queue.push_back(w);
      }
    }
    return std::nullopt;
  }

  // Greedy disjoint routing of all branch pairs; direct edges first.
  std::optional<KuratowskiWitness> connect(KuratowskiGraph type, std::vector<VertexId> branch) {
    auto pairs = kuratowski_pairs(type);
    std::vector<std::size_t> order(pairs.size());
    for (std::size_t p = 0; p < order.size(); ++p) order[p] = p;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
      return g_.adjacent(branch[pairs[l].first], branch[pairs[l].second]) >
             g_.adjacent(branch[pairs[r].first], branch[pairs[r].second]);
    });

    std::vector<VertexId> touched;
    auto block = [&](VertexId v) {
      if (!blocked_[v]) {
        blocked_[v] = 1;
        touched.push_back(v);
      }
    };
    for (VertexId b : branch) block(b);

    KuratowskiWitness w{type, branch, std::vector<std::vector<VertexId>>(pairs.size())};
    bool ok = true;
    for (std::size_t p : order) {
      auto path = route(branch[pairs[p].first], branch[pairs[p].second]);
      if (!path) {
        ok = false;
        break;
      }
      for (std::size_t q = 1; q + 1 < path->size(); ++q) block((*path)[q]);
      w.paths[p] = std::move(*path);
    }
    for (VertexId v : touched) blocked_[v] = 0;
    if (!ok || !verify_witness(g_, w)) return std::nullopt;
    return w;
  }

  std::optional<KuratowskiWitness> search_k33(VertexId seed) {
    const auto cand = ball(seed, 3);
    const std::size_t n = cand.size();
    if (n < 5) return std::nullopt;
    // seed on side A; choose side B (3) then the rest of A (2).
    for (std::size_t b0 = 0; b0 < n; ++b0)
      for (std::size_t b1 = b0 + 1; b1 < n; ++b1)
        for (std::size_t b2 = b1 + 1; b2 < n; ++b2)
          for (std::size_t a1 = 0; a1 < n; ++a1) {
            if (a1 == b0 || a1 == b1 || a1 == b2) continue;
            for (std::size_t a2 = a1 + 1; a2 < n; ++a2) {
              if (a2 == b0 || a2 == b1 || a2 == b2) continue;
              if (exhausted()) return std::nullopt;
              ++spent_;
              auto w = connect(KuratowskiGraph::K33,
                               {seed, cand[a1], cand[a2], cand[b0], cand[b1], cand[b2]});
              if (w) return w;
            }
          }
    return std::nullopt;
  }

  std::optional<KuratowskiWitness> search_k5(VertexId seed) {
    const auto cand = ball(seed, 4);
    const std::size_t n = cand.size();
    if (n < 4) return std::nullopt;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          for (std::size_t e = c + 1; e < n; ++e) {
            if (exhausted()) return std::nullopt;
            ++spent_;
            auto w = connect(KuratowskiGraph::K5, {seed, cand[a], cand[b], cand[c], cand[e]});
            if (w) return w;
          }
    return std::nullopt;
  }

  const SimpleGraph& g_;
  PlanaritySearchOptions opts_;
  std::vector<char> blocked_;
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> visit_;
  std::uint32_t stamp_ = 0;
  std::size_t spent_ = 0;
};

}  // namespace detail

// Never claims planarity: returns NonPlanar with a checkable witness, or
// Unknown when neither the edge bound nor the bounded search succeeds.
inline NonplanarityCertificate nonplanarity_certificate(const SimpleGraph& g,
                                                        PlanaritySearchOptions opts = {}) {
  NonplanarityCertificate c;
  c.vertices = g.vertex_count();
  c.edges = g.edge_count();
  c.edge_bound = c.vertices >= 3 ? 3 * c.vertices - 6 : 0;
  if (c.vertices >= 3 && c.edges > c.edge_bound) {
    c.verdict = PlanarityVerdict::NonPlanar;
    c.kind = CertificateKind::EdgeBound;
    return c;
  }
  detail::KuratowskiSearch search(g, opts);
  c.witness = search.run();
  c.expansions = search.spent();
  if (c.witness) {
    c.verdict = PlanarityVerdict::NonPlanar;
    c.kind = CertificateKind::KuratowskiSubdivision;
  }
  return c;
}

inline NonplanarityCertificate nonplanarity_certificate(const TopologyGraph& g,
                                                        PlanaritySearchOptions opts = {}) {
  return nonplanarity_certificate(SimpleGraph::from(g), opts);
}

inline NonplanarityCertificate nonplanarity_certificate(const CompressedGraph& g,
                                                        PlanaritySearchOptions opts = {}) {
  return nonplanarity_certificate(SimpleGraph::from(g), opts);
}

// ---------------------------------------------------------------------------
// K4 cliques

using Clique4 = std::array<VertexId, 4>;

// 4-cliques in ascending lexicographic order, each sorted, at most limit.
inline std::vector<Clique4> find_k4(const TopologyGraph& g, std::size_t limit) {
  std::vector<Clique4> out;
  if (limit == 0) return out;
  std::vector<VertexId> common_uv;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    auto nu = g.neighbors(u);
    for (VertexId v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      common_uv.clear();
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                            std::back_inserter(common_uv));
      for (std::size_t p = 0; p < common_uv.size(); ++p) {
        const VertexId w = common_uv[p];
        if (w <= v) continue;
        for (std::size_t q = p + 1; q < common_uv.size(); ++q) {
          const VertexId x = common_uv[q];
          if (!g.adjacent(w, x)) continue;
          out.push_back({u, v, w, x});
          if (out.size() >= limit) return out;
        }
      }
    }
  }
  return out;
}

}  // namespace pegasus_topo
