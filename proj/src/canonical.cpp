#include "edgeglue/canonical.hpp"

#include "edgeglue/error.hpp"
#include "edgeglue/graph6.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <string>

namespace edgeglue {

namespace {

// Ordered partition of the vertex set. Positions [start, end) form a cell;
// cell_end[start] is valid only at cell starts.
struct Partition {
  std::vector<Vertex> lab;
  std::vector<std::uint32_t> cell_start_of;  // per vertex
  std::vector<std::uint32_t> cell_end;       // per position

  std::size_t size() const { return lab.size(); }
  bool discrete() const {
    for (std::size_t p = 0; p < lab.size(); p = cell_end[p]) {
      if (cell_end[p] - p > 1) return false;
    }
    return true;
  }
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

class CanonSearch {
 public:
  CanonSearch(const LabeledGraph& g, std::span<const std::uint8_t> colors)
      : g_(g), n_(g.vertex_count()), w_(g.words()) {
    Partition root;
    root.lab.resize(n_);
    std::iota(root.lab.begin(), root.lab.end(), Vertex{0});
    auto color_of = [&](Vertex v) -> unsigned { return colors.empty() ? 0U : colors[v]; };
    std::stable_sort(root.lab.begin(), root.lab.end(),
                     [&](Vertex x, Vertex y) { return color_of(x) < color_of(y); });
    root.cell_start_of.assign(n_, 0);
    root.cell_end.assign(n_, 0);
    std::size_t start = 0;
    for (std::size_t p = 0; p <= n_; ++p) {
      if (p == n_ || (p > start && color_of(root.lab[p]) != color_of(root.lab[start]))) {
        for (std::size_t q = start; q < p; ++q) root.cell_start_of[root.lab[q]] = static_cast<std::uint32_t>(start);
        if (start < n_) root.cell_end[start] = static_cast<std::uint32_t>(p);
        start = p;
      }
    }
    root_ = std::move(root);
  }

  CanonicalResult run() {
    CanonicalResult result;
    if (n_ == 0) return result;
    std::vector<std::uint64_t> invariants;
    std::vector<Vertex> path;
    search(root_, invariants, path);
    result.labeling = best_lab_;
    result.generators = generators_;
    result.group_size = group_size();
    return result;
  }

 private:
  static constexpr int kNoJump = INT_MAX;

  std::size_t neighbours_in(Vertex v, const std::vector<std::uint64_t>& mask) const {
    std::size_t count = 0;
    auto r = g_.row(v);
    for (std::size_t k = 0; k < w_; ++k) count += static_cast<std::size_t>(std::popcount(r[k] & mask[k]));
    return count;
  }

  // Refines to the coarsest equitable partition finer than p. Every step
  // depends only on positions and counts, so the result is label-equivariant.
  void refine(Partition& p) const {
    std::vector<std::uint64_t> mask(w_);
    std::vector<std::pair<std::size_t, Vertex>> keyed;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < n_ && !changed; s = p.cell_end[s]) {
        std::fill(mask.begin(), mask.end(), 0);
        for (std::size_t q = s; q < p.cell_end[s]; ++q) mask[p.lab[q] >> 6] |= std::uint64_t{1} << (p.lab[q] & 63);
        for (std::size_t t = 0; t < n_; t = p.cell_end[t]) {
          const std::size_t end = p.cell_end[t];
          if (end - t == 1) continue;
          keyed.clear();
          for (std::size_t q = t; q < end; ++q) keyed.emplace_back(neighbours_in(p.lab[q], mask), p.lab[q]);
          bool uniform = std::all_of(keyed.begin(), keyed.end(),
                                     [&](const auto& k) { return k.first == keyed.front().first; });
          if (uniform) continue;
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](const auto& x, const auto& y) { return x.first < y.first; });
          std::size_t sub = t;
          for (std::size_t q = t; q < end; ++q) {
            p.lab[q] = keyed[q - t].second;
            if (q > t && keyed[q - t].first != keyed[q - t - 1].first) {
              p.cell_end[sub] = static_cast<std::uint32_t>(q);
              sub = q;
            }
            p.cell_start_of[p.lab[q]] = static_cast<std::uint32_t>(sub);
          }
          p.cell_end[sub] = static_cast<std::uint32_t>(end);
          changed = true;
        }
      }
    }
  }

  std::uint64_t node_invariant(const Partition& p) const {
    std::uint64_t h = 0x51ed27a3c4f1b7e9ULL;
    std::vector<std::uint64_t> mask(w_);
    for (std::size_t s = 0; s < n_; s = p.cell_end[s]) {
      h = mix(h, p.cell_end[s] - s);
      std::fill(mask.begin(), mask.end(), 0);
      for (std::size_t q = s; q < p.cell_end[s]; ++q) mask[p.lab[q] >> 6] |= std::uint64_t{1} << (p.lab[q] & 63);
      for (std::size_t t = 0; t < n_; t = p.cell_end[t]) h = mix(h, neighbours_in(p.lab[t], mask));
    }
    return h;
  }

  static Partition individualize(const Partition& p, Vertex v) {
    Partition child = p;
    const std::size_t start = p.cell_start_of[v];
    const std::size_t end = p.cell_end[start];
    auto it = std::find(child.lab.begin() + static_cast<std::ptrdiff_t>(start),
                        child.lab.begin() + static_cast<std::ptrdiff_t>(end), v);
    std::rotate(child.lab.begin() + static_cast<std::ptrdiff_t>(start), it, it + 1);
    child.cell_end[start] = static_cast<std::uint32_t>(start + 1);
    child.cell_end[start + 1] = static_cast<std::uint32_t>(end);
    for (std::size_t q = start + 1; q < end; ++q) child.cell_start_of[child.lab[q]] = static_cast<std::uint32_t>(start + 1);
    return child;
  }

  // Upper triangle of the relabelled adjacency matrix, column by column.
  std::vector<std::uint64_t> leaf_matrix(const std::vector<Vertex>& lab) const {
    std::vector<std::uint64_t> bits(words_for(n_ * (n_ - 1) / 2 + 1), 0);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n_; ++j) {
      for (std::size_t i = 0; i < j; ++i, ++k) {
        if (g_.has_edge(lab[i], lab[j])) bits[k >> 6] |= std::uint64_t{1} << (63 - (k & 63));
      }
    }
    return bits;
  }

  static std::size_t common_prefix(const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
    std::size_t c = 0;
    while (c < x.size() && c < y.size() && x[c] == y[c]) ++c;
    return c;
  }

  void record_automorphism(const std::vector<Vertex>& from_lab, const std::vector<Vertex>& to_lab) {
    std::vector<Vertex> gen(n_);
    for (std::size_t i = 0; i < n_; ++i) gen[from_lab[i]] = to_lab[i];
    for (std::size_t v = 0; v < n_; ++v) {
      if (gen[v] != v) {
        generators_.push_back(std::move(gen));
        return;
      }
    }
  }

  // Union-find orbits of the group generated by stored generators that fix
  // every vertex of `fixed`.
  std::vector<Vertex> orbits_fixing(std::span<const Vertex> fixed) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gen : generators_) {
      bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](Vertex v) { return gen[v] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        Vertex a = find(v);
        Vertex b = find(gen[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  int search(Partition p, std::vector<std::uint64_t>& invariants, std::vector<Vertex>& path) {
    refine(p);
    invariants.push_back(node_invariant(p));
    struct Pop {
      std::vector<std::uint64_t>& v;
      ~Pop() { v.pop_back(); }
    } pop{invariants};

    const std::size_t level = invariants.size();
    const bool on_first =
        have_first_ && level <= first_inv_.size() &&
        std::equal(invariants.begin(), invariants.end(), first_inv_.begin());
    if (have_first_ && !on_first) {
      const std::size_t len = std::min(level, best_inv_.size());
      auto cmp = std::lexicographical_compare_three_way(invariants.begin(), invariants.begin() + static_cast<std::ptrdiff_t>(len),
                                                        best_inv_.begin(), best_inv_.begin() + static_cast<std::ptrdiff_t>(len));
      if (cmp < 0) return kNoJump;
    }

    if (p.discrete()) return leaf(p, invariants, path);

    std::size_t target = 0;
    while (p.cell_end[target] - target == 1) target = p.cell_end[target];
    std::vector<Vertex> cell(p.lab.begin() + static_cast<std::ptrdiff_t>(target),
                             p.lab.begin() + static_cast<std::ptrdiff_t>(p.cell_end[target]));
    std::sort(cell.begin(), cell.end());
    std::vector<Vertex> explored;
    const int depth = static_cast<int>(path.size());
    for (Vertex v : cell) {
      auto orbit = orbits_fixing(path);
      bool equivalent = std::any_of(explored.begin(), explored.end(),
                                    [&](Vertex u) { return orbit[u] == orbit[v]; });
      if (equivalent) continue;
      explored.push_back(v);
      path.push_back(v);
      int jump = search(individualize(p, v), invariants, path);
      path.pop_back();
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  int leaf(const Partition& p, const std::vector<std::uint64_t>& invariants, const std::vector<Vertex>& path) {
    auto matrix = leaf_matrix(p.lab);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = p.lab;
      first_inv_ = best_inv_ = invariants;
      first_matrix_ = best_matrix_ = matrix;
      first_path_ = best_path_ = path;
      return kNoJump;
    }
    if (invariants == first_inv_ && matrix == first_matrix_) {
      record_automorphism(first_lab_, p.lab);
      return static_cast<int>(common_prefix(first_path_, path));
    }
    auto cmp_inv = std::lexicographical_compare_three_way(invariants.begin(), invariants.end(),
                                                          best_inv_.begin(), best_inv_.end());
    if (cmp_inv == 0 && matrix == best_matrix_) {
      record_automorphism(best_lab_, p.lab);
      return static_cast<int>(common_prefix(best_path_, path));
    }
    if (cmp_inv > 0 || (cmp_inv == 0 && matrix > best_matrix_)) {
      best_lab_ = p.lab;
      best_inv_ = invariants;
      best_matrix_ = std::move(matrix);
      best_path_ = path;
    }
    return kNoJump;
  }

  std::uint64_t group_size() const {
    std::uint64_t size = 1;
    for (std::size_t d = 0; d < first_path_.size(); ++d) {
      auto orbit = orbits_fixing(std::span<const Vertex>(first_path_.data(), d));
      std::uint64_t count = 0;
      for (Vertex v = 0; v < n_; ++v) count += orbit[v] == orbit[first_path_[d]] ? 1 : 0;
      size *= count;
    }
    return size;
  }

  const LabeledGraph& g_;
  std::size_t n_;
  std::size_t w_;
  Partition root_;

  bool have_first_ = false;
  std::vector<Vertex> first_lab_, best_lab_;
  std::vector<std::uint64_t> first_inv_, best_inv_;
  std::vector<std::uint64_t> first_matrix_, best_matrix_;
  std::vector<Vertex> first_path_, best_path_;
  std::vector<std::vector<Vertex>> generators_;
};

void check_size(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    fail(ErrorCode::SizeExceeded, std::string(what) + ": " + std::to_string(n) +
                                      " vertices exceeds the cap of " + std::to_string(cap));
  }
}

LabeledGraph apply_labeling(const LabeledGraph& g, const std::vector<Vertex>& labeling) {
  std::vector<Vertex> image(labeling.size());
  for (std::size_t i = 0; i < labeling.size(); ++i) image[labeling[i]] = static_cast<Vertex>(i);
  return g.relabeled(image);
}

}  // namespace

CanonicalResult canonicalize(const LabeledGraph& g, std::span<const std::uint8_t> colors,
                             const CanonOptions& options) {
  check_size(g.vertex_count(), options.max_vertices, "canonical_form");
  if (!colors.empty() && colors.size() != g.vertex_count()) {
    fail(ErrorCode::InvalidGraph, "colour vector length differs from vertex count");
  }
  return CanonSearch(g, colors).run();
}

CanonicalLabel canonical_form(const LabeledGraph& g, const CanonOptions& options) {
  return {encode_graph6(canonical_graph(g, options))};
}

LabeledGraph canonical_graph(const LabeledGraph& g, const CanonOptions& options) {
  return apply_labeling(g, canonicalize(g, {}, options).labeling);
}

CanonicalLabel canonical_form(const LabeledGraph& g, std::span<const std::uint8_t> colors,
                              const CanonOptions& options) {
  if (colors.empty()) return canonical_form(g, options);
  auto result = canonicalize(g, colors, options);
  std::map<unsigned, std::size_t> counts;
  for (auto c : colors) ++counts[c];
  std::string prefix = "#";
  for (auto [c, k] : counts) prefix += std::to_string(c) + "x" + std::to_string(k) + ",";
  prefix.back() = ':';
  return {prefix + encode_graph6(apply_labeling(g, result.labeling))};
}

CanonicalLabel canonical_form(const SignedBipartiteGraph& g, const CanonOptions& options) {
  auto colors = g.colors();
  auto result = canonicalize(g.as_labeled(), colors, options);
  // Colour classes occupy consecutive positions ordered by colour, so the
  // first plus_count canonical positions are exactly the + side.
  return {"+" + std::to_string(g.plus_count()) + ":" +
          encode_graph6(apply_labeling(g.as_labeled(), result.labeling))};
}

bool is_signed_label(const CanonicalLabel& label) { return label.bytes.starts_with("+"); }

LabeledGraph decode_label(const CanonicalLabel& label) {
  if (label.bytes.starts_with("+") || label.bytes.starts_with("#")) {
    auto colon = label.bytes.find(':');
    if (colon == std::string::npos) fail(ErrorCode::ParseError, "malformed canonical label");
    return decode_graph6(std::string_view(label.bytes).substr(colon + 1));
  }
  return decode_graph6(label.bytes);
}

SignedBipartiteGraph decode_signed_label(const CanonicalLabel& label) {
  if (!is_signed_label(label)) fail(ErrorCode::ParseError, "label is not a signed certificate");
  auto colon = label.bytes.find(':');
  if (colon == std::string::npos) fail(ErrorCode::ParseError, "malformed signed label");
  std::size_t plus = 0;
  try {
    plus = std::stoul(label.bytes.substr(1, colon - 1));
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "malformed signed label");
  }
  LabeledGraph g = decode_graph6(std::string_view(label.bytes).substr(colon + 1));
  if (plus > g.vertex_count()) fail(ErrorCode::ParseError, "signed label plus count too large");
  std::vector<Sign> signs(g.vertex_count(), Sign::Minus);
  std::fill(signs.begin(), signs.begin() + static_cast<std::ptrdiff_t>(plus), Sign::Plus);
  return SignedBipartiteGraph::from_signing(g, signs);
}

std::uint64_t automorphism_count(const LabeledGraph& h, std::span<const std::uint8_t> colors) {
  check_size(h.vertex_count(), 16, "automorphism_count");
  return canonicalize(h, colors, {.max_vertices = 16}).group_size;
}

std::uint64_t automorphism_count(const LabeledGraph& h) { return automorphism_count(h, {}); }

std::uint64_t automorphism_count(const SignedBipartiteGraph& h) {
  auto colors = h.colors();
  return automorphism_count(h.as_labeled(), colors);
}

std::vector<Edge> directed_edge_orbit_representatives(const LabeledGraph& h,
                                                      std::span<const std::uint8_t> colors) {
  auto result = canonicalize(h, colors, {.max_vertices = std::max<std::size_t>(h.vertex_count(), 32)});
  std::vector<Edge> directed;
  for (const Edge& e : h.edges()) {
    directed.push_back(e);
    directed.push_back(e.reversed());
  }
  std::sort(directed.begin(), directed.end());
  std::map<Edge, Edge> parent;
  for (const Edge& e : directed) parent[e] = e;
  auto find = [&](Edge x) {
    while (!(parent[x] == x)) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gen : result.generators) {
    for (const Edge& e : directed) {
      Edge a = find(e);
      Edge b = find(Edge{gen[e.a], gen[e.b]});
      if (!(a == b)) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<Edge> reps;
  for (const Edge& e : directed) {
    if (find(e) == e) reps.push_back(e);
  }
  return reps;
}

bool isomorphic(const LabeledGraph& x, const LabeledGraph& y) {
  if (x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count()) return false;
  CanonOptions opts{.max_vertices = std::max<std::size_t>(x.vertex_count(), 32)};
  return canonical_form(x, opts) == canonical_form(y, opts);
}

}  // namespace edgeglue
