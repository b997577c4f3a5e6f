#include "edgeglue/rooted_pattern.hpp"

#include "edgeglue/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace edgeglue {

namespace {

[[noreturn]] void invalid(const std::string& why) { fail(ErrorCode::InvalidRootedPattern, why); }

}  // namespace

RootedPattern::RootedPattern(LabeledGraph pattern, std::vector<Vertex> root_vertices,
                             std::vector<Edge> root_edges, std::optional<Edge> distinguished_edge,
                             std::vector<std::uint8_t> colors)
    : pattern_(std::move(pattern)),
      roots_(std::move(root_vertices)),
      distinguished_(distinguished_edge),
      colors_(std::move(colors)) {
  const std::size_t h = pattern_.vertex_count();
  if (roots_.empty() || roots_.size() >= h) {
    invalid("need 0 < |V(F)| < v(H); got " + std::to_string(roots_.size()) + " roots for " +
            std::to_string(h) + " vertices");
  }
  if (!colors_.empty() && colors_.size() != h) invalid("colour vector length differs from v(H)");
  std::set<Vertex> seen;
  for (Vertex v : roots_) {
    if (v >= h) invalid("root vertex " + std::to_string(v) + " out of range");
    if (!seen.insert(v).second) invalid("root vertex " + std::to_string(v) + " repeated");
  }
  std::set<Edge> edges;
  for (const Edge& e : root_edges) {
    if (!seen.contains(e.a) || !seen.contains(e.b)) invalid("root edge leaves the root vertices");
    if (!pattern_.has_edge(e)) invalid("root edge is not an edge of H");
    if (!edges.insert(e.normalized()).second) invalid("root edge repeated");
  }
  root_edges_.assign(edges.begin(), edges.end());
  if (!forest().is_forest()) invalid("F must be a forest");
  if (distinguished_ && !pattern_.has_edge(*distinguished_)) {
    invalid("distinguished edge is not an edge of H");
  }
}

RootedPattern RootedPattern::induced(LabeledGraph pattern, std::vector<Vertex> root_vertices,
                                     std::optional<Edge> distinguished_edge) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < root_vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < root_vertices.size(); ++j) {
      if (root_vertices[i] < pattern.vertex_count() && root_vertices[j] < pattern.vertex_count() &&
          pattern.has_edge(root_vertices[i], root_vertices[j])) {
        edges.push_back(Edge{root_vertices[i], root_vertices[j]});
      }
    }
  }
  return RootedPattern(std::move(pattern), std::move(root_vertices), std::move(edges),
                       distinguished_edge);
}

RootedPattern RootedPattern::edge_rooted(LabeledGraph pattern, Edge f) {
  return RootedPattern(std::move(pattern), {f.a, f.b}, {f}, f);
}

RootedPattern RootedPattern::signed_edge_rooted(const SignedBipartiteGraph& pattern, Edge f) {
  if (!pattern.has_edge(f.a, f.b)) fail(ErrorCode::EdgeNotInGraph, "signed edge not in pattern");
  Edge labeled{f.a, pattern.labeled_index(Sign::Minus, f.b)};
  return RootedPattern(pattern.as_labeled(), {labeled.a, labeled.b}, {labeled}, labeled,
                       pattern.colors());
}

LabeledGraph RootedPattern::forest() const {
  LabeledGraph f(roots_.size());
  for (const Edge& e : root_edges_) {
    f.add_edge(static_cast<Vertex>(*root_index(e.a)), static_cast<Vertex>(*root_index(e.b)));
  }
  return f;
}

bool RootedPattern::forest_is_induced() const {
  return pattern_.induced(roots_).edge_count() == root_edges_.size();
}

std::optional<std::size_t> RootedPattern::root_index(Vertex v) const {
  auto it = std::find(roots_.begin(), roots_.end(), v);
  if (it == roots_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

}  // namespace edgeglue
