#include "edgeglue/graph6.hpp"

#include "edgeglue/error.hpp"

namespace edgeglue {

namespace {

constexpr std::size_t kMaxShort = 62;
constexpr std::size_t kMaxMedium = 258047;

[[noreturn]] void parse_error(std::string_view text, const std::string& why) {
  fail(ErrorCode::ParseError, "invalid graph6 '" + std::string(text.substr(0, 40)) + "': " + why);
}

}  // namespace

std::string encode_graph6(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  if (n <= kMaxShort) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= kMaxMedium) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int filled = 0;
  unsigned acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

LabeledGraph decode_graph6(std::string_view text) {
  const std::string_view whole = text;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) parse_error(whole, "empty input");
  for (char c : text) {
    if (c < 63 || c > 126) parse_error(whole, "byte outside the printable graph6 range");
  }
  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) parse_error(whole, "truncated size header");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(text[k] - 63);
    if (n <= kMaxShort) parse_error(whole, "non-minimal size header");
    pos = 4;
  } else {
    if (text.size() < 8) parse_error(whole, "truncated size header");
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | static_cast<std::size_t>(text[k] - 63);
    if (n <= kMaxMedium) parse_error(whole, "non-minimal size header");
    pos = 8;
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    parse_error(whole, "expected " + std::to_string(expected) + " body bytes, found " +
                           std::to_string(text.size() - pos));
  }
  LabeledGraph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      unsigned byte = static_cast<unsigned>(text[pos + k / 6] - 63);
      if ((byte >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    unsigned last = static_cast<unsigned>(text.back() - 63);
    if ((last & ((1U << (6 - k % 6)) - 1)) != 0) parse_error(whole, "nonzero padding bits");
  }
  return g;
}

}  // namespace edgeglue
