#include "edgeglue/embedding.hpp"

#include "edgeglue/canonical.hpp"
#include "edgeglue/error.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

namespace edgeglue {

namespace {

std::uint8_t color_at(const GraphView& v, Vertex x) { return v.colors.empty() ? 0 : v.colors[x]; }

void check_limits(const GraphView& h, const GraphView& g, const EmbeddingLimits& limits) {
  if (h.graph->vertex_count() > limits.max_pattern_vertices) {
    fail(ErrorCode::SizeExceeded, "pattern has " + std::to_string(h.graph->vertex_count()) +
                                      " vertices; cap is " + std::to_string(limits.max_pattern_vertices));
  }
  if (g.graph->vertex_count() > limits.max_host_vertices) {
    fail(ErrorCode::SizeExceeded, "host has " + std::to_string(g.graph->vertex_count()) +
                                      " vertices; cap is " + std::to_string(limits.max_host_vertices));
  }
}

// Colours only constrain when both sides are coloured.
GraphView effective_pattern(const GraphView& h, const GraphView& g) {
  if (h.colors.empty() || g.colors.empty()) return GraphView(*h.graph);
  return h;
}

}  // namespace

Matcher::Matcher(GraphView pattern, VertexOrder order)
    : pattern_(std::move(pattern)), order_mode_(order) {}

void Matcher::prepare(const GraphView& host, std::span<const std::pair<Vertex, Vertex>> fixed) {
  const LabeledGraph& h = *pattern_.graph;
  const std::size_t hn = h.vertex_count();
  const std::size_t gn = host.graph->vertex_count();
  host_ = host.graph;
  w_ = words_for(gn);

  order_.clear();
  std::vector<bool> placed(hn, false);
  std::vector<Vertex> pin_target(hn, 0);
  std::vector<bool> pinned(hn, false);
  for (auto [pv, hv] : fixed) {
    if (pv >= hn || placed[pv]) continue;
    placed[pv] = true;
    pinned[pv] = true;
    pin_target[pv] = hv;
    order_.push_back(pv);
  }
  if (order_mode_ == VertexOrder::Lexicographic) {
    for (Vertex v = 0; v < hn; ++v) {
      if (!placed[v]) order_.push_back(v);
    }
  } else {
    while (order_.size() < hn) {
      Vertex best = 0;
      long best_key = -1;
      for (Vertex v = 0; v < hn; ++v) {
        if (placed[v]) continue;
        long back = 0;
        for (Vertex u : h.neighbors(v)) back += placed[u] ? 1 : 0;
        long key = back * 1024 + static_cast<long>(h.degree(v));
        if (key > best_key) {
          best_key = key;
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  back_neighbors_.assign(hn, {});
  std::vector<std::size_t> position(hn);
  for (std::size_t d = 0; d < hn; ++d) position[order_[d]] = d;
  for (std::size_t d = 0; d < hn; ++d) {
    for (Vertex u : h.neighbors(order_[d])) {
      if (position[u] < d) back_neighbors_[d].push_back(u);
    }
  }

  // Candidate filter: matching colour and sufficient degree.
  allowed_.assign(hn * w_, 0);
  std::vector<std::size_t> host_degree(gn);
  for (Vertex x = 0; x < gn; ++x) host_degree[x] = host.graph->degree(x);
  for (Vertex v = 0; v < hn; ++v) {
    const std::size_t need = h.degree(v);
    const std::uint8_t c = color_at(pattern_, v);
    for (Vertex x = 0; x < gn; ++x) {
      if (host_degree[x] >= need && (pattern_.colors.empty() || color_at(host, x) == c)) {
        allowed_[v * w_ + (x >> 6)] |= std::uint64_t{1} << (x & 63);
      }
    }
  }
  pinned_.assign(hn * w_, ~std::uint64_t{0});
  for (std::size_t d = 0; d < hn; ++d) {
    Vertex v = order_[d];
    if (!pinned[v]) continue;
    std::fill_n(pinned_.begin() + static_cast<std::ptrdiff_t>(d * w_), w_, 0);
    if (pin_target[v] < gn) pinned_[d * w_ + (pin_target[v] >> 6)] = std::uint64_t{1} << (pin_target[v] & 63);
  }
  used_.assign(w_, 0);
  buffer_.assign(hn * w_, 0);
  map_.assign(hn, 0);
}

template <class Visit>
bool Matcher::descend(std::size_t depth, Visit& visit) {
  if (depth == order_.size()) return visit(std::span<const Vertex>(map_));
  const Vertex u = order_[depth];
  std::uint64_t* cand = buffer_.data() + depth * w_;
  const std::uint64_t* allow = allowed_.data() + static_cast<std::size_t>(u) * w_;
  const std::uint64_t* pin = pinned_.data() + depth * w_;
  for (std::size_t k = 0; k < w_; ++k) cand[k] = allow[k] & pin[k] & ~used_[k];
  for (Vertex nb : back_neighbors_[depth]) {
    auto r = host_->row(map_[nb]);
    for (std::size_t k = 0; k < w_; ++k) cand[k] &= r[k];
  }
  for (std::size_t k = 0; k < w_; ++k) {
    while (cand[k] != 0) {
      const std::uint64_t low = cand[k] & (~cand[k] + 1);
      cand[k] ^= low;
      const auto x = static_cast<Vertex>(k * 64 + static_cast<std::size_t>(std::countr_zero(low)));
      map_[u] = x;
      used_[k] |= low;
      const bool keep_going = descend(depth + 1, visit);
      used_[k] &= ~low;
      if (!keep_going) return false;
    }
  }
  return true;
}

std::uint64_t Matcher::visit(const GraphView& host, std::span<const std::pair<Vertex, Vertex>> fixed,
                             const EmbeddingVisitor& visitor) {
  prepare(host, fixed);
  std::uint64_t seen = 0;
  auto fn = [&](std::span<const Vertex> m) {
    ++seen;
    return visitor(m);
  };
  if (pattern_.graph->vertex_count() == 0) {
    visitor(std::span<const Vertex>());
    return 1;
  }
  descend(0, fn);
  return seen;
}

std::uint64_t Matcher::count(const GraphView& host, std::span<const std::pair<Vertex, Vertex>> fixed) {
  prepare(host, fixed);
  if (pattern_.graph->vertex_count() == 0) return 1;
  std::uint64_t seen = 0;
  auto fn = [&](std::span<const Vertex>) {
    ++seen;
    return true;
  };
  descend(0, fn);
  return seen;
}

bool Matcher::exists(const GraphView& host, std::span<const std::pair<Vertex, Vertex>> fixed) {
  prepare(host, fixed);
  if (pattern_.graph->vertex_count() == 0) return true;
  bool found = false;
  auto fn = [&](std::span<const Vertex>) {
    found = true;
    return false;
  };
  descend(0, fn);
  return found;
}

std::uint64_t enumerate_embeddings(const GraphView& h, const GraphView& g,
                                   const EmbeddingVisitor& visitor, const EnumerateOptions& options) {
  check_limits(h, g, options.limits);
  Matcher matcher(effective_pattern(h, g), VertexOrder::Lexicographic);
  if (options.limit && *options.limit == 0) return 0;
  std::uint64_t emitted = 0;
  return matcher.visit(g, {}, [&](std::span<const Vertex> m) {
    ++emitted;
    bool more = visitor(m);
    return more && !(options.limit && emitted >= *options.limit);
  });
}

std::vector<Embedding> list_embeddings(const GraphView& h, const GraphView& g,
                                       const EnumerateOptions& options) {
  std::vector<Embedding> out;
  enumerate_embeddings(h, g, [&](std::span<const Vertex> m) {
    out.push_back(Embedding{{m.begin(), m.end()}});
    return true;
  }, options);
  return out;
}

std::uint64_t count_embeddings(const GraphView& h, const GraphView& g, unsigned threads,
                               const EmbeddingLimits& limits) {
  check_limits(h, g, limits);
  const GraphView pattern = effective_pattern(h, g);
  if (threads <= 1 || h.graph->vertex_count() == 0) return Matcher(pattern).count(g);

  // Split on the host image of pattern vertex 0.
  const auto gn = static_cast<Vertex>(g.graph->vertex_count());
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      Matcher local(pattern);
      for (Vertex x = t; x < gn; x += threads) {
        std::pair<Vertex, Vertex> pin{0, x};
        partial[t] += local.count(g, std::span(&pin, 1));
      }
    });
  }
  workers.clear();
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

std::uint64_t count_copies(const GraphView& h, const GraphView& g, unsigned threads,
                           const EmbeddingLimits& limits) {
  const std::uint64_t labelled = count_embeddings(h, g, threads, limits);
  const GraphView pattern = effective_pattern(h, g);
  return labelled / automorphism_count(*pattern.graph, pattern.colors);
}

bool is_free(const GraphView& g, const GraphView& h, const EmbeddingLimits& limits) {
  check_limits(h, g, limits);
  return !Matcher(effective_pattern(h, g)).exists(g);
}

bool is_embedding(const GraphView& h, const GraphView& g, std::span<const Vertex> map) {
  const std::size_t hn = h.graph->vertex_count();
  const std::size_t gn = g.graph->vertex_count();
  if (map.size() != hn) return false;
  std::vector<bool> used(gn, false);
  const bool check_colors = !h.colors.empty() && !g.colors.empty();
  for (Vertex v = 0; v < hn; ++v) {
    if (map[v] >= gn || used[map[v]]) return false;
    used[map[v]] = true;
    if (check_colors && h.colors[v] != g.colors[map[v]]) return false;
  }
  for (const Edge& e : h.graph->edges()) {
    if (!g.graph->has_edge(map[e.a], map[e.b])) return false;
  }
  return true;
}

std::uint64_t enumerate_extensions(std::span<const Vertex> psi, const RootedPattern& p,
                                   const GraphView& g, const EmbeddingVisitor& visitor,
                                   const EnumerateOptions& options) {
  GraphView pattern = p.is_signed() ? GraphView(p.pattern(), p.colors()) : GraphView(p.pattern());
  check_limits(pattern, g, options.limits);
  if (psi.size() != p.ell()) {
    fail(ErrorCode::InvalidPartialMap, "partial map has " + std::to_string(psi.size()) +
                                           " entries; F has " + std::to_string(p.ell()) + " vertices");
  }
  LabeledGraph forest = p.forest();
  std::vector<std::uint8_t> forest_colors;
  if (p.is_signed()) {
    for (Vertex r : p.root_vertices()) forest_colors.push_back(p.colors()[r]);
  }
  if (!is_embedding(GraphView(forest, forest_colors), g, psi)) {
    fail(ErrorCode::InvalidPartialMap, "partial map is not an embedding of F");
  }
  std::vector<std::pair<Vertex, Vertex>> fixed;
  for (std::size_t i = 0; i < psi.size(); ++i) fixed.emplace_back(p.root_vertices()[i], psi[i]);
  // Roots are placed first in root order, then the rest by index.
  Matcher matcher(effective_pattern(pattern, g), VertexOrder::Lexicographic);
  if (options.limit && *options.limit == 0) return 0;
  std::uint64_t emitted = 0;
  return matcher.visit(g, fixed, [&](std::span<const Vertex> m) {
    ++emitted;
    bool more = visitor(m);
    return more && !(options.limit && emitted >= *options.limit);
  });
}

std::vector<Embedding> list_extensions(std::span<const Vertex> psi, const RootedPattern& p,
                                       const GraphView& g, const EnumerateOptions& options) {
  std::vector<Embedding> out;
  enumerate_extensions(psi, p, g, [&](std::span<const Vertex> m) {
    out.push_back(Embedding{{m.begin(), m.end()}});
    return true;
  }, options);
  return out;
}

}  // namespace edgeglue
