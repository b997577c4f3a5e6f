#pragma once

#include "edgeglue/canonical.hpp"
#include "edgeglue/graph.hpp"
#include "edgeglue/rooted_pattern.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <variant>
#include <vector>

namespace edgeglue {

// Results of identifying e1 = (a1, b1) with e2 = (a2, b2) both ways round,
// one per isomorphism class, sorted by certificate. Vertices 0 and 1 of each
// result are the shared edge; h1's other vertices follow in order, then h2's.
std::vector<LabeledGraph> glue_along_edge(const LabeledGraph& h1, Edge e1, const LabeledGraph& h2,
                                          Edge e2);

// s copies of H sharing the labelled forest F pointwise. The roots come first
// (in root order), then each copy's remaining vertices. F must be induced.
LabeledGraph glue_copies_along_forest(const RootedPattern& p, std::size_t s);

// h1 with u identified to v of h2; h2's other vertices are appended.
LabeledGraph glue_at_vertex(const LabeledGraph& h1, Vertex u, const LabeledGraph& h2, Vertex v);

// Throws NotATree unless t is a tree.
LabeledGraph attach_tree(const LabeledGraph& h, Vertex v, const LabeledGraph& t, Vertex t_vertex);

enum class GluingMode { UnsignedFamily, SignedUnique };

// For signed parts the edge is (plus index, minus index).
struct GluingPart {
  std::variant<LabeledGraph, SignedBipartiteGraph> graph;
  Edge edge;
};

struct GluingSpec {
  GluingMode mode = GluingMode::UnsignedFamily;
  std::vector<GluingPart> parts;
};

// {"mode": "unsigned-family" | "signed-unique",
//  "parts": [{"graph": <graph JSON or name>, "edge": [a, b]}, ...]}
// Graph JSON with "plus"/"minus" is signed; named graphs are signed in
// signed mode. Throws ParseError, EdgeNotInGraph, SignMismatch.
GluingSpec gluing_spec_from_json(const nlohmann::json& j);
void validate(const GluingSpec& spec);

// All marked edges identified to one common edge, over all 2^(t-1)
// orientations; deduplicated and sorted by certificate.
std::vector<LabeledGraph> glue_family(const GluingSpec& spec);

// The unique sign-preserving gluing: + ends together, - ends together.
// The common edge is (+0, -0).
SignedBipartiteGraph signed_glue(const GluingSpec& spec);

struct TreeOfCycles {
  LabeledGraph tree;
  // cycle_lengths[v] = |C(v)| for tree vertex v.
  std::vector<std::size_t> cycle_lengths;
  // (u, v) -> (position on C(u), position on C(v)); one entry per tree edge,
  // keyed with u < v.
  std::map<Edge, std::pair<std::size_t, std::size_t>> attach;
};

// {"tree": <graph>, "cycles": [len, ...], "attach": [[u, v, iu, iv], ...]};
// tree edges without an entry attach at position 0 on both cycles.
TreeOfCycles tree_of_cycles_from_json(const nlohmann::json& j);

// Cycle C(v) occupies a block of |C(v)| vertices, walked in order; attached
// positions are identified and the classes renumbered by first occurrence.
LabeledGraph tree_of_cycles(const TreeOfCycles& spec);

// The least half-length l_C over the cycles; the claimed exponent is 1/l_C.
std::size_t min_half_length(const TreeOfCycles& spec);

}  // namespace edgeglue
