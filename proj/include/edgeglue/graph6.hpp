#pragma once

#include "edgeglue/graph.hpp"

#include <string>
#include <string_view>

namespace edgeglue {

// Standard graph6 encoding (short and 4-byte size headers, n <= 258047).
std::string encode_graph6(const LabeledGraph& g);

// Accepts an optional ">>graph6<<" header. Throws ParseError on malformed text.
LabeledGraph decode_graph6(std::string_view text);

}  // namespace edgeglue
