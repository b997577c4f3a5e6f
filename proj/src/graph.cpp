#include "edgeglue/graph.hpp"

#include "edgeglue/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace edgeglue {

LabeledGraph::LabeledGraph(std::size_t vertex_count)
    : n_(vertex_count), w_(words_for(vertex_count)), bits_(vertex_count * w_, 0) {}

LabeledGraph::LabeledGraph(std::size_t vertex_count, std::span<const Edge> edges)
    : LabeledGraph(vertex_count) {
  for (const Edge& e : edges) {
    if (e.a >= n_ || e.b >= n_) {
      fail(ErrorCode::InvalidGraph, "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                        ") out of range for " + std::to_string(n_) + " vertices");
    }
    if (e.a == e.b) fail(ErrorCode::InvalidGraph, "loop at vertex " + std::to_string(e.a));
    if (!add_edge(e.a, e.b)) {
      fail(ErrorCode::InvalidGraph, "parallel edge (" + std::to_string(e.a) + "," +
                                        std::to_string(e.b) + ")");
    }
  }
}

bool LabeledGraph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_ || u == v) fail(ErrorCode::InvalidGraph, "invalid edge");
  if (has_edge(u, v)) return false;
  mutable_row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
  mutable_row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
  ++m_;
  return true;
}

bool LabeledGraph::remove_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) return false;
  mutable_row(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  mutable_row(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
  --m_;
  return true;
}

std::size_t LabeledGraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (std::uint64_t w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t LabeledGraph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::size_t LabeledGraph::min_degree() const {
  if (n_ == 0) return 0;
  std::size_t best = n_;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<Vertex> LabeledGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t k = 0; k < w_; ++k) {
    for (std::uint64_t bits = r[k]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Vertex>(k * 64 + std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

LabeledGraph LabeledGraph::relabeled(std::span<const Vertex> image) const {
  if (image.size() != n_) fail(ErrorCode::InvalidGraph, "relabelling has wrong length");
  LabeledGraph out(n_);
  for (const Edge& e : edges()) out.add_edge(image[e.a], image[e.b]);
  return out;
}

LabeledGraph LabeledGraph::induced(std::span<const Vertex> vertices) const {
  LabeledGraph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) {
        out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return out;
}

LabeledGraph LabeledGraph::disjoint_union(const LabeledGraph& other) const {
  LabeledGraph out(n_ + other.n_);
  for (const Edge& e : edges()) out.add_edge(e.a, e.b);
  auto shift = static_cast<Vertex>(n_);
  for (const Edge& e : other.edges()) out.add_edge(e.a + shift, e.b + shift);
  return out;
}

bool LabeledGraph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  return reached == n_;
}

bool LabeledGraph::is_forest() const {
  // A graph is a forest iff e = n - (number of components).
  std::vector<Vertex> parent(n_);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges()) {
    Vertex ra = find(e.a);
    Vertex rb = find(e.b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

// --- SignedBipartiteGraph ---------------------------------------------------

SignedBipartiteGraph::SignedBipartiteGraph(std::size_t plus_count, std::size_t minus_count)
    : m_(plus_count), n_(minus_count), graph_(plus_count + minus_count) {}

SignedBipartiteGraph::SignedBipartiteGraph(std::size_t plus_count, std::size_t minus_count,
                                           std::span<const Edge> edges)
    : SignedBipartiteGraph(plus_count, minus_count) {
  for (const Edge& e : edges) {
    if (e.a >= m_ || e.b >= n_) {
      fail(ErrorCode::InvalidGraph, "signed edge (" + std::to_string(e.a) + "," +
                                        std::to_string(e.b) + ") outside part sizes");
    }
    if (!add_edge(e.a, e.b)) fail(ErrorCode::InvalidGraph, "parallel signed edge");
  }
}

SignedBipartiteGraph SignedBipartiteGraph::from_signing(const LabeledGraph& g,
                                                        std::span<const Sign> signs) {
  if (signs.size() != g.vertex_count()) {
    fail(ErrorCode::InvalidSigning, "sign vector length differs from vertex count");
  }
  std::vector<Vertex> index(g.vertex_count());
  std::size_t plus = 0;
  std::size_t minus = 0;
  for (std::size_t v = 0; v < signs.size(); ++v) {
    index[v] = static_cast<Vertex>(signs[v] == Sign::Plus ? plus++ : minus++);
  }
  SignedBipartiteGraph out(plus, minus);
  for (const Edge& e : g.edges()) {
    if (signs[e.a] == signs[e.b]) {
      fail(ErrorCode::InvalidSigning, "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                          ") joins two vertices of the same sign");
    }
    Edge pm = signs[e.a] == Sign::Plus ? Edge{index[e.a], index[e.b]} : Edge{index[e.b], index[e.a]};
    out.add_edge(pm.a, pm.b);
  }
  return out;
}

SignedBipartiteGraph SignedBipartiteGraph::from_bipartite(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          fail(ErrorCode::InvalidSigning, "graph is not bipartite");
        }
      }
    }
  }
  std::vector<Sign> signs(n);
  for (std::size_t v = 0; v < n; ++v) signs[v] = side[v] == 0 ? Sign::Plus : Sign::Minus;
  return from_signing(g, signs);
}

bool SignedBipartiteGraph::add_edge(Vertex plus, Vertex minus) {
  if (plus >= m_ || minus >= n_) fail(ErrorCode::InvalidGraph, "signed edge outside part sizes");
  return graph_.add_edge(plus, static_cast<Vertex>(m_ + minus));
}

bool SignedBipartiteGraph::remove_edge(Vertex plus, Vertex minus) {
  if (plus >= m_ || minus >= n_) return false;
  return graph_.remove_edge(plus, static_cast<Vertex>(m_ + minus));
}

std::vector<Edge> SignedBipartiteGraph::edges() const {
  std::vector<Edge> out;
  for (const Edge& e : graph_.edges()) out.push_back({e.a, static_cast<Vertex>(e.b - m_)});
  return out;
}

std::vector<std::uint8_t> SignedBipartiteGraph::colors() const {
  std::vector<std::uint8_t> c(m_ + n_, 1);
  std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m_), 0);
  return c;
}

SignedBipartiteGraph SignedBipartiteGraph::swapped_sides() const {
  SignedBipartiteGraph out(n_, m_);
  for (const Edge& e : edges()) out.add_edge(e.b, e.a);
  return out;
}

// --- named graphs -------------------------------------------------------------

namespace graphs {

LabeledGraph empty(std::size_t n) { return LabeledGraph(n); }

LabeledGraph complete(std::size_t n) {
  LabeledGraph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

LabeledGraph cycle(std::size_t n) {
  if (n < 3) fail(ErrorCode::InvalidGraph, "a cycle needs at least 3 vertices");
  LabeledGraph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

LabeledGraph path(std::size_t n) {
  LabeledGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

LabeledGraph star(std::size_t k) {
  LabeledGraph g(k + 1);
  for (Vertex v = 1; v <= k; ++v) g.add_edge(0, v);
  return g;
}

LabeledGraph complete_bipartite(std::size_t a, std::size_t b) {
  LabeledGraph g(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, static_cast<Vertex>(a + v));
  }
  return g;
}

SignedBipartiteGraph signed_cycle(std::size_t n) {
  if (n < 4 || n % 2 != 0) fail(ErrorCode::InvalidSigning, "signed cycles need even length >= 4");
  return SignedBipartiteGraph::from_bipartite(cycle(n));
}

SignedBipartiteGraph signed_complete_bipartite(std::size_t plus, std::size_t minus) {
  SignedBipartiteGraph g(plus, minus);
  for (Vertex p = 0; p < plus; ++p) {
    for (Vertex q = 0; q < minus; ++q) g.add_edge(p, q);
  }
  return g;
}

SignedBipartiteGraph plus_star(std::size_t k) { return signed_complete_bipartite(1, k); }

}  // namespace graphs

}  // namespace edgeglue
