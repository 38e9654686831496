#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pegasus_topo/coords.hpp"
#include "pegasus_topo/edge.hpp"

namespace pegasus_topo {

// Sorts edges by endpoint pair and drops exact duplicates. Two edges on the
// same pair with different classes are a generator bug and raise.
inline void canonicalize(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  auto out = edges.begin();
  for (auto it = edges.begin(); it != edges.end(); ++it) {
    if (out != edges.begin()) {
      const Edge& prev = *(out - 1);
      if (prev.a == it->a && prev.b == it->b) {
        if (prev.cls != it->cls)
          throw ValidationError("class", "edge " + std::to_string(it->a) + "-" +
                                             std::to_string(it->b) +
                                             " carries two different classes");
        continue;
      }
    }
    *out++ = *it;
  }
  edges.erase(out, edges.end());
}

// Immutable qubit graph: vertices are the linear indices [0, 8XYZ), edges are
// kept in canonical order and indexed by a CSR adjacency.
class TopologyGraph {
 public:
  TopologyGraph() : TopologyGraph(Dims{}, {}) {}

  TopologyGraph(Dims dims, std::vector<Edge> edges) : dims_(dims), edges_(std::move(edges)) {
    validate_dims(dims_);
    canonicalize(edges_);
    const std::size_t n = dims_.qubit_count();
    for (const Edge& e : edges_) {
      if (e.b >= n)
        throw ValidationError("b", "edge endpoint " + std::to_string(e.b) +
                                       " out of range for " + std::to_string(n) + " qubits");
      if (e.a == e.b) throw ValidationError("b", "self-loop at " + std::to_string(e.a));
    }
    build_adjacency();
  }

  const Dims& dims() const noexcept { return dims_; }
  std::size_t vertex_count() const noexcept { return dims_.qubit_count(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  QubitCoord coord(VertexId v) const { return from_linear(v, dims_); }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeClass> find_edge(VertexId u, VertexId v) const noexcept {
    if (u >= vertex_count() || v >= vertex_count() || u == v) return std::nullopt;
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return std::nullopt;
    return edges_[edge_ids_[offsets_[u] + static_cast<std::size_t>(it - nb.begin())]].cls;
  }

  bool adjacent(VertexId u, VertexId v) const noexcept { return find_edge(u, v).has_value(); }

  // Same vertex set, only the edges accepted by keep.
  template <typename Pred>
  TopologyGraph filter_edges(Pred keep) const {
    std::vector<Edge> kept;
    for (const Edge& e : edges_)
      if (keep(e)) kept.push_back(e);
    return TopologyGraph(dims_, std::move(kept));
  }

  friend bool operator==(const TopologyGraph& l, const TopologyGraph& r) {
    return l.dims_ == r.dims_ && l.edges_ == r.edges_;
  }

 private:
  void build_adjacency() {
    const std::size_t n = vertex_count();
    offsets_.assign(n + 1, 0);
    for (const Edge& e : edges_) {
      ++offsets_[e.a + 1];
      ++offsets_[e.b + 1];
    }
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
    neighbors_.resize(2 * edges_.size());
    edge_ids_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Edges are sorted by (a, b), so each row fills in ascending order except
    // for the "b" side entries, hence the per-row sort below.
    for (std::size_t id = 0; id < edges_.size(); ++id) {
      const Edge& e = edges_[id];
      neighbors_[fill[e.a]] = e.b;
      edge_ids_[fill[e.a]++] = id;
      neighbors_[fill[e.b]] = e.a;
      edge_ids_[fill[e.b]++] = id;
    }
    std::vector<std::pair<VertexId, std::size_t>> row;
    for (std::size_t v = 0; v < n; ++v) {
      row.clear();
      for (std::size_t p = offsets_[v]; p < offsets_[v + 1]; ++p)
        row.emplace_back(neighbors_[p], edge_ids_[p]);
      std::sort(row.begin(), row.end());
      for (std::size_t p = offsets_[v], r = 0; p < offsets_[v + 1]; ++p, ++r) {
        neighbors_[p] = row[r].first;
        edge_ids_[p] = row[r].second;
      }
    }
  }

  Dims dims_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<std::size_t> edge_ids_;
};

}  // namespace pegasus_topo
