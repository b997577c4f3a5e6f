#pragma once

#include "edgeglue/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace edgeglue {

// A pattern H with a labelled forest F on root_vertices (F may contain
// isolated vertices) and an optional distinguished edge f of H. Colours are
// non-empty for signed patterns (0 = plus, 1 = minus).
class RootedPattern {
 public:
  // Throws InvalidRootedPattern unless 0 < |roots| < v(H), roots are distinct,
  // root_edges lie in E(H) within the roots, F is a forest, and f is in E(H).
  RootedPattern(LabeledGraph pattern, std::vector<Vertex> root_vertices,
                std::vector<Edge> root_edges, std::optional<Edge> distinguished_edge,
                std::vector<std::uint8_t> colors = {});

  // F is the subgraph of H induced on the roots.
  static RootedPattern induced(LabeledGraph pattern, std::vector<Vertex> root_vertices,
                               std::optional<Edge> distinguished_edge = std::nullopt);
  // F = f = the given edge.
  static RootedPattern edge_rooted(LabeledGraph pattern, Edge f);
  // Signed edge-rooted pattern; f is given as (plus index, minus index).
  static RootedPattern signed_edge_rooted(const SignedBipartiteGraph& pattern, Edge f);

  const LabeledGraph& pattern() const { return pattern_; }
  const std::vector<Vertex>& root_vertices() const { return roots_; }
  const std::vector<Edge>& root_edges() const { return root_edges_; }
  const std::optional<Edge>& distinguished_edge() const { return distinguished_; }
  const std::vector<std::uint8_t>& colors() const { return colors_; }
  bool is_signed() const { return !colors_.empty(); }

  std::size_t h() const { return pattern_.vertex_count(); }
  std::size_t ell() const { return roots_.size(); }
  std::size_t e_h() const { return pattern_.edge_count(); }
  std::size_t e_f() const { return root_edges_.size(); }

  // F with vertex i standing for root_vertices()[i].
  LabeledGraph forest() const;
  bool forest_is_induced() const;
  // Index of pattern vertex v among the roots, if it is one.
  std::optional<std::size_t> root_index(Vertex v) const;

 private:
  LabeledGraph pattern_;
  std::vector<Vertex> roots_;
  std::vector<Edge> root_edges_;
  std::optional<Edge> distinguished_;
  std::vector<std::uint8_t> colors_;
};

}  // namespace edgeglue
