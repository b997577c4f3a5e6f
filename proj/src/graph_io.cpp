#include "edgeglue/graph_io.hpp"

#include "edgeglue/error.hpp"
#include "edgeglue/graph6.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <string>

namespace edgeglue {

namespace {

std::vector<Edge> edges_from_json(const nlohmann::json& j) {
  if (!j.contains("edges") || !j["edges"].is_array()) {
    fail(ErrorCode::ParseError, "graph JSON needs an \"edges\" array");
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      fail(ErrorCode::ParseError, "each edge must be a pair of non-negative integers");
    }
    edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
  }
  return edges;
}

std::size_t size_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    fail(ErrorCode::ParseError, std::string("graph JSON needs a non-negative integer \"") + key + "\"");
  }
  return j[key].get<std::size_t>();
}

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::optional<LabeledGraph> parse_named(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  const char kind = static_cast<char>(std::tolower(static_cast<unsigned char>(text[0])));
  std::string_view rest = text.substr(1);
  if (kind == 'k') {
    auto comma = rest.find(',');
    if (comma != std::string_view::npos) {
      auto a = parse_count(rest.substr(0, comma));
      auto b = parse_count(rest.substr(comma + 1));
      if (!a || !b) return std::nullopt;
      return graphs::complete_bipartite(*a, *b);
    }
    auto n = parse_count(rest);
    if (!n) return std::nullopt;
    return graphs::complete(*n);
  }
  auto k = parse_count(rest);
  if (!k) return std::nullopt;
  switch (kind) {
    case 'c': return graphs::cycle(*k);
    case 'p': return graphs::path(*k);
    case 's': return graphs::star(*k);
    case 'e': return graphs::empty(*k);
    default: return std::nullopt;
  }
}

}  // namespace

nlohmann::json to_json(const LabeledGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.a, e.b});
  return {{"v", g.vertex_count()}, {"edges", std::move(edges)}};
}

LabeledGraph labeled_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "graph JSON must be an object");
  auto edges = edges_from_json(j);
  return LabeledGraph(size_field(j, "v"), edges);
}

nlohmann::json to_json(const SignedBipartiteGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.a, e.b});
  return {{"plus", g.plus_count()}, {"minus", g.minus_count()}, {"edges", std::move(edges)}};
}

SignedBipartiteGraph signed_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "signed graph JSON must be an object");
  auto edges = edges_from_json(j);
  return SignedBipartiteGraph(size_field(j, "plus"), size_field(j, "minus"), edges);
}

LabeledGraph parse_graph_spec(std::string_view text) {
  if (auto named = parse_named(text)) return *named;
  return decode_graph6(text);
}

SignedBipartiteGraph parse_signed_graph_spec(std::string_view text) {
  constexpr std::string_view swap_prefix = "swap:";
  const bool swap = text.starts_with(swap_prefix);
  if (swap) text.remove_prefix(swap_prefix.size());
  SignedBipartiteGraph g = SignedBipartiteGraph::from_bipartite(parse_graph_spec(text));
  return swap ? g.swapped_sides() : g;
}

}  // namespace edgeglue
