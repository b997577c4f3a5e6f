#pragma once

#include "edgeglue/graph.hpp"
#include "edgeglue/rooted_pattern.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace edgeglue {

// A graph together with vertex colours that embeddings must preserve. Signed
// bipartite graphs are viewed with + vertices first (colour 0) and - vertices
// after them (colour 1); embedding maps use those labelled indices.
struct GraphView {
  GraphView(const LabeledGraph& g) : graph(&g) {}  // NOLINT(google-explicit-constructor)
  GraphView(const SignedBipartiteGraph& g)          // NOLINT(google-explicit-constructor)
      : graph(&g.as_labeled()), colors(g.colors()) {}
  GraphView(const LabeledGraph& g, std::vector<std::uint8_t> c) : graph(&g), colors(std::move(c)) {}

  const LabeledGraph* graph;
  std::vector<std::uint8_t> colors;
};

// map[i] is the host vertex assigned to pattern vertex i.
struct Embedding {
  std::vector<Vertex> map;

  friend bool operator==(const Embedding&, const Embedding&) = default;
  friend auto operator<=>(const Embedding&, const Embedding&) = default;
};

struct EmbeddingLimits {
  std::size_t max_pattern_vertices = 12;
  std::size_t max_host_vertices = 4096;
};

struct EnumerateOptions {
  std::optional<std::uint64_t> limit;
  EmbeddingLimits limits;
};

// Return false to stop the enumeration.
using EmbeddingVisitor = std::function<bool(std::span<const Vertex>)>;

enum class VertexOrder {
  // Pattern vertices in index order: results come out lexicographically.
  Lexicographic,
  // Next vertex has the most neighbours already placed.
  Connectivity,
};

// Reusable backtracking search of one pattern against changing hosts.
class Matcher {
 public:
  explicit Matcher(GraphView pattern, VertexOrder order = VertexOrder::Connectivity);

  // `fixed` preassigns (pattern vertex, host vertex) pairs; they are placed
  // first and must themselves be consistent or nothing is found.
  std::uint64_t visit(const GraphView& host, std::span<const std::pair<Vertex, Vertex>> fixed,
                      const EmbeddingVisitor& visitor);
  std::uint64_t count(const GraphView& host, std::span<const std::pair<Vertex, Vertex>> fixed = {});
  bool exists(const GraphView& host, std::span<const std::pair<Vertex, Vertex>> fixed = {});

  const LabeledGraph& pattern() const { return *pattern_.graph; }

 private:
  void prepare(const GraphView& host, std::span<const std::pair<Vertex, Vertex>> fixed);
  template <class Visit>
  bool descend(std::size_t depth, Visit& visit);

  GraphView pattern_;
  VertexOrder order_mode_;
  std::size_t w_ = 0;
  const LabeledGraph* host_ = nullptr;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> back_neighbors_;
  std::vector<std::uint64_t> allowed_;  // per pattern vertex, w_ words
  std::vector<std::uint64_t> pinned_;   // per depth, w_ words; all ones when free
  std::vector<std::uint64_t> used_;
  std::vector<std::uint64_t> buffer_;   // per depth candidate sets
  std::vector<Vertex> map_;
};

// Every injective edge- (and colour-) preserving map of h into g, each once,
// in lexicographic order of the map. Returns the number visited.
std::uint64_t enumerate_embeddings(const GraphView& h, const GraphView& g,
                                   const EmbeddingVisitor& visitor,
                                   const EnumerateOptions& options = {});
std::vector<Embedding> list_embeddings(const GraphView& h, const GraphView& g,
                                       const EnumerateOptions& options = {});

// Labelled count. Work is split over the first vertex's candidates when
// threads > 1; the total does not depend on the thread count.
std::uint64_t count_embeddings(const GraphView& h, const GraphView& g, unsigned threads = 1,
                               const EmbeddingLimits& limits = {});
// Unlabelled copies: embeddings divided by the colour-preserving |Aut(h)|.
std::uint64_t count_copies(const GraphView& h, const GraphView& g, unsigned threads = 1,
                           const EmbeddingLimits& limits = {});

// True iff g contains no copy of h. Stops at the first hit.
bool is_free(const GraphView& g, const GraphView& h, const EmbeddingLimits& limits = {});

// Full embeddings of p.pattern() whose restriction to the roots equals psi
// (psi[i] is the image of root_vertices()[i]). Throws InvalidPartialMap when
// psi is not an embedding of F.
std::uint64_t enumerate_extensions(std::span<const Vertex> psi, const RootedPattern& p,
                                   const GraphView& g, const EmbeddingVisitor& visitor,
                                   const EnumerateOptions& options = {});
std::vector<Embedding> list_extensions(std::span<const Vertex> psi, const RootedPattern& p,
                                       const GraphView& g, const EnumerateOptions& options = {});

bool is_embedding(const GraphView& h, const GraphView& g, std::span<const Vertex> map);

}  // namespace edgeglue
