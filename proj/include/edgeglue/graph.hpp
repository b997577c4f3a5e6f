#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace edgeglue {

using Vertex = std::uint32_t;

// An edge as an ordered pair. Orientation matters only where an operation says
// so (marked edges in gluing); graph storage is undirected.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  Edge normalized() const { return a < b ? Edge{a, b} : Edge{b, a}; }
  Edge reversed() const { return Edge{b, a}; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// Simple undirected graph on vertices 0..n-1. Adjacency is one fixed-width
// bitset row per vertex, stored contiguously.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(std::size_t vertex_count);
  // Throws InvalidGraph on loops, duplicates, or out-of-range endpoints.
  LabeledGraph(std::size_t vertex_count, std::span<const Edge> edges);
  LabeledGraph(std::size_t vertex_count, std::initializer_list<Edge> edges)
      : LabeledGraph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }
  std::size_t words() const { return w_; }

  bool has_edge(Vertex u, Vertex v) const {
    return u < n_ && v < n_ && ((row(u)[v >> 6] >> (v & 63)) & 1U);
  }
  bool has_edge(Edge e) const { return has_edge(e.a, e.b); }

  // Returns false when the edge already exists.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);

  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * w_, w_};
  }
  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const;
  std::size_t min_degree() const;

  std::vector<Vertex> neighbors(Vertex v) const;
  // Edges with a < b, in lexicographic order.
  std::vector<Edge> edges() const;

  // Vertex v of this graph becomes vertex image[v] of the result.
  LabeledGraph relabeled(std::span<const Vertex> image) const;
  LabeledGraph induced(std::span<const Vertex> vertices) const;
  // Disjoint union with `other` appended after this graph's vertices.
  LabeledGraph disjoint_union(const LabeledGraph& other) const;

  bool is_connected() const;
  bool is_forest() const;
  bool is_tree() const { return n_ > 0 && is_connected() && m_ + 1 == n_; }

  friend bool operator==(const LabeledGraph& x, const LabeledGraph& y) {
    return x.n_ == y.n_ && x.bits_ == y.bits_;
  }

 private:
  std::uint64_t* mutable_row(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * w_; }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t w_ = 0;
  std::vector<std::uint64_t> bits_;
};

enum class Sign : std::uint8_t { Plus = 0, Minus = 1 };

// Bipartite graph with a fixed {+,-} side labelling: plus vertices 0..m-1,
// minus vertices 0..n-1, edges (plus index, minus index).
class SignedBipartiteGraph {
 public:
  SignedBipartiteGraph() = default;
  SignedBipartiteGraph(std::size_t plus_count, std::size_t minus_count);
  SignedBipartiteGraph(std::size_t plus_count, std::size_t minus_count,
                       std::span<const Edge> edges);
  SignedBipartiteGraph(std::size_t plus_count, std::size_t minus_count,
                       std::initializer_list<Edge> edges)
      : SignedBipartiteGraph(plus_count, minus_count,
                             std::span<const Edge>(edges.begin(), edges.size())) {}

  // Signs must form a proper 2-colouring of g; throws InvalidSigning otherwise.
  static SignedBipartiteGraph from_signing(const LabeledGraph& g, std::span<const Sign> signs);
  // Proper 2-colouring found by BFS; the least vertex of each component is +.
  static SignedBipartiteGraph from_bipartite(const LabeledGraph& g);

  std::size_t plus_count() const { return m_; }
  std::size_t minus_count() const { return n_; }
  std::size_t vertex_count() const { return m_ + n_; }
  std::size_t edge_count() const { return graph_.edge_count(); }

  bool has_edge(Vertex plus, Vertex minus) const {
    return plus < m_ && minus < n_ && graph_.has_edge(plus, static_cast<Vertex>(m_ + minus));
  }
  bool add_edge(Vertex plus, Vertex minus);
  bool remove_edge(Vertex plus, Vertex minus);

  // (plus, minus) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  // Unsigned view: plus vertices first, then minus vertices.
  const LabeledGraph& as_labeled() const { return graph_; }
  std::vector<std::uint8_t> colors() const;
  Vertex labeled_index(Sign side, Vertex index) const {
    return side == Sign::Plus ? index : static_cast<Vertex>(m_ + index);
  }

  SignedBipartiteGraph swapped_sides() const;

  friend bool operator==(const SignedBipartiteGraph& x, const SignedBipartiteGraph& y) {
    return x.m_ == y.m_ && x.n_ == y.n_ && x.graph_ == y.graph_;
  }

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  LabeledGraph graph_;
};

namespace graphs {
LabeledGraph empty(std::size_t n);
LabeledGraph complete(std::size_t n);
LabeledGraph cycle(std::size_t n);
// Path on n vertices (n-1 edges).
LabeledGraph path(std::size_t n);
// K_{1,k}: centre 0, leaves 1..k.
LabeledGraph star(std::size_t k);
// K_{a,b}: first part 0..a-1.
LabeledGraph complete_bipartite(std::size_t a, std::size_t b);

SignedBipartiteGraph signed_cycle(std::size_t n);
SignedBipartiteGraph signed_complete_bipartite(std::size_t plus, std::size_t minus);
// K_{1,k} with the centre on the + side.
SignedBipartiteGraph plus_star(std::size_t k);
}  // namespace graphs

}  // namespace edgeglue
