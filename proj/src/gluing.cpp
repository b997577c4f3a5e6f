#include "edgeglue/gluing.hpp"

#include "edgeglue/error.hpp"
#include "edgeglue/graph_io.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace edgeglue {

namespace {

void require_edge(const LabeledGraph& g, Edge e, const char* what) {
  if (!g.has_edge(e)) {
    fail(ErrorCode::EdgeNotInGraph, std::string(what) + ": edge (" + std::to_string(e.a) + "," +
                                        std::to_string(e.b) + ") is not in the graph");
  }
}

void require_vertex(const LabeledGraph& g, Vertex v, const char* what) {
  if (v >= g.vertex_count()) {
    fail(ErrorCode::VertexNotInGraph,
         std::string(what) + ": vertex " + std::to_string(v) + " is not in the graph");
  }
}

// Glues unsigned parts along one common edge; orient[i] says whether part
// i's marked edge is taken reversed.
LabeledGraph glue_oriented(const std::vector<std::pair<const LabeledGraph*, Edge>>& parts,
                           const std::vector<bool>& orient) {
  std::size_t n = 2;
  for (const auto& [g, e] : parts) n += g->vertex_count() - 2;
  LabeledGraph out(n);
  Vertex next = 2;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& [g, e0] = parts[i];
    const Edge e = orient[i] ? e0.reversed() : e0;
    std::vector<Vertex> image(g->vertex_count());
    for (Vertex v = 0; v < g->vertex_count(); ++v) {
      if (v == e.a) {
        image[v] = 0;
      } else if (v == e.b) {
        image[v] = 1;
      } else {
        image[v] = next++;
      }
    }
    for (auto [a, b] : g->edges()) out.add_edge(image[a], image[b]);
  }
  return out;
}

std::vector<LabeledGraph> glue_unsigned(
    const std::vector<std::pair<const LabeledGraph*, Edge>>& parts) {
  const std::size_t t = parts.size();
  if (t == 0) fail(ErrorCode::PreconditionViolated, "gluing needs at least one part");
  if (t > 21) fail(ErrorCode::SizeExceeded, "at most 21 parts in an unsigned gluing family");
  std::map<CanonicalLabel, LabeledGraph> found;
  std::vector<bool> orient(t, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (t - 1)); ++mask) {
    for (std::size_t i = 1; i < t; ++i) orient[i] = (mask >> (i - 1)) & 1U;
    auto g = glue_oriented(parts, orient);
    found.try_emplace(canonical_form(g), std::move(g));
  }
  std::vector<LabeledGraph> out;
  out.reserve(found.size());
  for (auto& [label, g] : found) out.push_back(std::move(g));
  return out;
}

SignedBipartiteGraph signed_part(const GluingPart& part) {
  if (const auto* s = std::get_if<SignedBipartiteGraph>(&part.graph)) return *s;
  fail(ErrorCode::SignMismatch, "signed gluing needs signed bipartite parts");
}

LabeledGraph unsigned_part(const GluingPart& part) {
  if (const auto* g = std::get_if<LabeledGraph>(&part.graph)) return *g;
  return std::get<SignedBipartiteGraph>(part.graph).as_labeled();
}

Edge unsigned_edge(const GluingPart& part) {
  if (const auto* s = std::get_if<SignedBipartiteGraph>(&part.graph)) {
    return Edge{part.edge.a, s->labeled_index(Sign::Minus, part.edge.b)};
  }
  return part.edge;
}

}  // namespace

std::vector<LabeledGraph> glue_along_edge(const LabeledGraph& h1, Edge e1, const LabeledGraph& h2,
                                          Edge e2) {
  require_edge(h1, e1, "glue_along_edge");
  require_edge(h2, e2, "glue_along_edge");
  return glue_unsigned({{&h1, e1}, {&h2, e2}});
}

LabeledGraph glue_copies_along_forest(const RootedPattern& p, std::size_t s) {
  if (s == 0) fail(ErrorCode::PreconditionViolated, "s must be at least 1");
  if (!p.forest_is_induced()) {
    fail(ErrorCode::InvalidRootedPattern,
         "the rooted forest must be induced in the pattern to glue copies along it");
  }
  const std::size_t ell = p.ell(), h = p.h();
  LabeledGraph out(ell + s * (h - ell));
  Vertex next = static_cast<Vertex>(ell);
  std::vector<Vertex> image(h);
  for (std::size_t copy = 0; copy < s; ++copy) {
    for (Vertex v = 0; v < h; ++v) {
      auto r = p.root_index(v);
      image[v] = r ? static_cast<Vertex>(*r) : next++;
    }
    for (auto [a, b] : p.pattern().edges()) out.add_edge(image[a], image[b]);
  }
  return out;
}

LabeledGraph glue_at_vertex(const LabeledGraph& h1, Vertex u, const LabeledGraph& h2, Vertex v) {
  require_vertex(h1, u, "glue_at_vertex");
  require_vertex(h2, v, "glue_at_vertex");
  const std::size_t n1 = h1.vertex_count();
  LabeledGraph out(n1 + h2.vertex_count() - 1);
  for (auto [a, b] : h1.edges()) out.add_edge(a, b);
  auto image = [&](Vertex x) -> Vertex {
    if (x == v) return u;
    return static_cast<Vertex>(n1 + x - (x > v ? 1 : 0));
  };
  for (auto [a, b] : h2.edges()) out.add_edge(image(a), image(b));
  return out;
}

LabeledGraph attach_tree(const LabeledGraph& h, Vertex v, const LabeledGraph& t, Vertex t_vertex) {
  if (!t.is_tree()) fail(ErrorCode::NotATree, "attach_tree: the attached graph is not a tree");
  return glue_at_vertex(h, v, t, t_vertex);
}

void validate(const GluingSpec& spec) {
  if (spec.parts.empty()) fail(ErrorCode::PreconditionViolated, "gluing needs at least one part");
  for (const auto& part : spec.parts) {
    if (const auto* s = std::get_if<SignedBipartiteGraph>(&part.graph)) {
      if (!s->has_edge(part.edge.a, part.edge.b)) {
        fail(ErrorCode::EdgeNotInGraph, "marked edge (+" + std::to_string(part.edge.a) + ",-" +
                                            std::to_string(part.edge.b) +
                                            ") is not in the signed graph");
      }
    } else {
      if (spec.mode == GluingMode::SignedUnique) {
        fail(ErrorCode::SignMismatch, "signed gluing needs signed bipartite parts");
      }
      require_edge(std::get<LabeledGraph>(part.graph), part.edge, "gluing spec");
    }
  }
}

std::vector<LabeledGraph> glue_family(const GluingSpec& spec) {
  validate(spec);
  std::vector<LabeledGraph> graphs;
  graphs.reserve(spec.parts.size());
  std::vector<std::pair<const LabeledGraph*, Edge>> parts;
  for (const auto& part : spec.parts) graphs.push_back(unsigned_part(part));
  for (std::size_t i = 0; i < graphs.size(); ++i) parts.emplace_back(&graphs[i], unsigned_edge(spec.parts[i]));
  return glue_unsigned(parts);
}

SignedBipartiteGraph signed_glue(const GluingSpec& spec) {
  validate(spec);
  std::vector<SignedBipartiteGraph> parts;
  for (const auto& part : spec.parts) parts.push_back(signed_part(part));
  std::size_t plus = 1, minus = 1;
  for (const auto& g : parts) {
    plus += g.plus_count() - 1;
    minus += g.minus_count() - 1;
  }
  SignedBipartiteGraph out(plus, minus);
  Vertex next_plus = 1, next_minus = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& g = parts[i];
    const Edge f = spec.parts[i].edge;
    std::vector<Vertex> plus_image(g.plus_count()), minus_image(g.minus_count());
    for (Vertex x = 0; x < g.plus_count(); ++x) plus_image[x] = x == f.a ? 0 : next_plus++;
    for (Vertex y = 0; y < g.minus_count(); ++y) minus_image[y] = y == f.b ? 0 : next_minus++;
    for (auto [x, y] : g.edges()) out.add_edge(plus_image[x], minus_image[y]);
  }
  return out;
}

GluingSpec gluing_spec_from_json(const nlohmann::json& j) {
  GluingSpec spec;
  try {
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "unsigned-family") {
      spec.mode = GluingMode::UnsignedFamily;
    } else if (mode == "signed-unique") {
      spec.mode = GluingMode::SignedUnique;
    } else {
      fail(ErrorCode::ParseError, "unknown gluing mode '" + mode + "'");
    }
    for (const auto& pj : j.at("parts")) {
      const auto& gj = pj.at("graph");
      const auto& ej = pj.at("edge");
      if (!ej.is_array() || ej.size() != 2) fail(ErrorCode::ParseError, "edge must be [a, b]");
      const Edge e{ej[0].get<Vertex>(), ej[1].get<Vertex>()};
      if (gj.is_string()) {
        const auto text = gj.get<std::string>();
        if (spec.mode == GluingMode::SignedUnique) {
          spec.parts.push_back({parse_signed_graph_spec(text), e});
        } else {
          spec.parts.push_back({parse_graph_spec(text), e});
        }
      } else if (gj.contains("plus")) {
        spec.parts.push_back({signed_from_json(gj), e});
      } else {
        spec.parts.push_back({labeled_from_json(gj), e});
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::ParseError, std::string("gluing spec: ") + ex.what());
  }
  validate(spec);
  return spec;
}

TreeOfCycles tree_of_cycles_from_json(const nlohmann::json& j) {
  TreeOfCycles spec;
  try {
    const auto& tj = j.at("tree");
    spec.tree = tj.is_string() ? parse_graph_spec(tj.get<std::string>()) : labeled_from_json(tj);
    spec.cycle_lengths = j.at("cycles").get<std::vector<std::size_t>>();
    if (j.contains("attach")) {
      for (const auto& a : j.at("attach")) {
        if (!a.is_array() || a.size() != 4) fail(ErrorCode::ParseError, "attach entries are [u, v, iu, iv]");
        const auto u = a[0].get<Vertex>(), v = a[1].get<Vertex>();
        auto iu = a[2].get<std::size_t>(), iv = a[3].get<std::size_t>();
        if (u > v) std::swap(iu, iv);
        spec.attach[Edge{u, v}.normalized()] = {iu, iv};
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::ParseError, std::string("tree of cycles: ") + ex.what());
  }
  return spec;
}

LabeledGraph tree_of_cycles(const TreeOfCycles& spec) {
  const auto& t = spec.tree;
  if (!t.is_tree()) fail(ErrorCode::NotATree, "tree_of_cycles: the index graph is not a tree");
  if (spec.cycle_lengths.size() != t.vertex_count()) {
    fail(ErrorCode::PreconditionViolated, "tree_of_cycles: need one cycle length per tree vertex");
  }
  for (auto len : spec.cycle_lengths) {
    if (len < 4 || len % 2 != 0) {
      fail(ErrorCode::OddCycleLength,
           "tree_of_cycles: cycle length " + std::to_string(len) + " is not even and at least 4");
    }
  }
  std::vector<std::size_t> offset(t.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < t.vertex_count(); ++v) offset[v + 1] = offset[v] + spec.cycle_lengths[v];
  for (const auto& [e, pos] : spec.attach) {
    if (!t.has_edge(e)) {
      fail(ErrorCode::InvalidAttachIndex, "tree_of_cycles: attach entry for non-edge (" +
                                              std::to_string(e.a) + "," + std::to_string(e.b) + ")");
    }
    if (pos.first >= spec.cycle_lengths[e.a] || pos.second >= spec.cycle_lengths[e.b]) {
      fail(ErrorCode::InvalidAttachIndex, "tree_of_cycles: attach position outside its cycle");
    }
  }

  const std::size_t total = offset.back();
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto e : t.edges()) {
    std::pair<std::size_t, std::size_t> pos{0, 0};
    if (auto it = spec.attach.find(e); it != spec.attach.end()) pos = it->second;
    auto x = find(offset[e.a] + pos.first), y = find(offset[e.b] + pos.second);
    if (x > y) std::swap(x, y);
    parent[y] = x;
  }
  std::vector<Vertex> id(total);
  std::vector<std::ptrdiff_t> class_id(total, -1);
  Vertex next = 0;
  for (std::size_t x = 0; x < total; ++x) {
    auto r = find(x);
    if (class_id[r] < 0) class_id[r] = next++;
    id[x] = static_cast<Vertex>(class_id[r]);
  }
  LabeledGraph out(next);
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    const std::size_t len = spec.cycle_lengths[v];
    for (std::size_t i = 0; i < len; ++i) {
      out.add_edge(id[offset[v] + i], id[offset[v] + (i + 1) % len]);
    }
  }
  return out;
}

std::size_t min_half_length(const TreeOfCycles& spec) {
  if (spec.cycle_lengths.empty()) fail(ErrorCode::PreconditionViolated, "no cycles given");
  return *std::min_element(spec.cycle_lengths.begin(), spec.cycle_lengths.end()) / 2;
}

}  // namespace edgeglue
