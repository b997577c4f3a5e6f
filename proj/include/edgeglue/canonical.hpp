#pragma once

#include "edgeglue/graph.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace edgeglue {

// Isomorphism certificate. For uncoloured graphs the bytes are the graph6
// text of the canonically relabelled graph, so a label can be decoded back
// into a representative graph. Coloured graphs prefix the colour class sizes.
struct CanonicalLabel {
  std::string bytes;

  friend bool operator==(const CanonicalLabel&, const CanonicalLabel&) = default;
  friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
};

struct CanonOptions {
  std::size_t max_vertices = 32;
};

// Result of the individualisation-refinement search.
struct CanonicalResult {
  // labeling[i] = original vertex placed at canonical position i.
  std::vector<Vertex> labeling;
  // Generators of the automorphism group discovered during the search, each
  // as an image array (vertex v maps to gen[v]).
  std::vector<std::vector<Vertex>> generators;
  // |Aut| computed by orbit-stabiliser along the first path.
  std::uint64_t group_size = 1;
};

// Colours (any small integers) are preserved by isomorphisms; colour classes
// are ordered by colour value, so colours are never exchanged.
CanonicalResult canonicalize(const LabeledGraph& g, std::span<const std::uint8_t> colors,
                             const CanonOptions& options = {});

CanonicalLabel canonical_form(const LabeledGraph& g, const CanonOptions& options = {});
CanonicalLabel canonical_form(const SignedBipartiteGraph& g, const CanonOptions& options = {});
CanonicalLabel canonical_form(const LabeledGraph& g, std::span<const std::uint8_t> colors,
                              const CanonOptions& options = {});

// The canonically relabelled representative.
LabeledGraph canonical_graph(const LabeledGraph& g, const CanonOptions& options = {});

// Recovers the representative graph from an uncoloured or signed label.
LabeledGraph decode_label(const CanonicalLabel& label);
SignedBipartiteGraph decode_signed_label(const CanonicalLabel& label);
bool is_signed_label(const CanonicalLabel& label);

// |Aut(h)|, v(h) <= 16.
std::uint64_t automorphism_count(const LabeledGraph& h);
std::uint64_t automorphism_count(const SignedBipartiteGraph& h);
std::uint64_t automorphism_count(const LabeledGraph& h, std::span<const std::uint8_t> colors);

// One representative (a, b) per orbit of directed edges under the
// colour-preserving automorphism group.
std::vector<Edge> directed_edge_orbit_representatives(const LabeledGraph& h,
                                                      std::span<const std::uint8_t> colors = {});

bool isomorphic(const LabeledGraph& x, const LabeledGraph& y);

}  // namespace edgeglue
