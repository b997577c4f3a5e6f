#pragma once

#include "edgeglue/graph.hpp"

#include <nlohmann/json.hpp>

#include <string_view>

namespace edgeglue {

// {"v": n, "edges": [[a, b], ...]}
nlohmann::json to_json(const LabeledGraph& g);
LabeledGraph labeled_from_json(const nlohmann::json& j);

// {"plus": m, "minus": n, "edges": [[p, q], ...]}
nlohmann::json to_json(const SignedBipartiteGraph& g);
SignedBipartiteGraph signed_from_json(const nlohmann::json& j);

// Named small graphs: c{k} cycle, p{k} path on k vertices, k{n} complete,
// k{a},{b} complete bipartite, s{k} star K_{1,k}, e{n} edgeless; anything
// else is read as graph6. Throws ParseError.
LabeledGraph parse_graph_spec(std::string_view text);

// Signed variant. Named bipartite graphs put their first part (cycle/path
// vertex 0, star centre) on the + side; a "swap:" prefix exchanges the sides.
// graph6 input is signed by BFS from the least vertex of each component.
SignedBipartiteGraph parse_signed_graph_spec(std::string_view text);

}  // namespace edgeglue
