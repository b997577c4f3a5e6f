#include "edgeglue/extremal.hpp"

#include "edgeglue/embedding.hpp"
#include "edgeglue/error.hpp"
#include "edgeglue/graph6.hpp"

#include <algorithm>
#include <chrono>
#include <memory>

namespace edgeglue {

namespace {

// Detects copies of any forbidden pattern through a newly added host edge.
class EdgeChecker {
 public:
  EdgeChecker(std::span<const LabeledGraph> patterns, std::span<const std::vector<std::uint8_t>> colors) {
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      std::vector<std::uint8_t> c = colors.empty() ? std::vector<std::uint8_t>{} : colors[i];
      Entry e{Matcher(GraphView(patterns[i], c)), {}};
      for (auto rep : directed_edge_orbit_representatives(patterns[i], c)) {
        // In the signed setting the new edge always runs + to -.
        if (!c.empty() && c[rep.a] != 0) continue;
        e.reps.push_back(rep);
      }
      entries_.push_back(std::move(e));
    }
  }

  // True when host (which already contains u-v) has a forbidden copy using u-v.
  bool hits(const GraphView& host, Vertex u, Vertex v) {
    for (auto& e : entries_) {
      for (auto rep : e.reps) {
        const std::pair<Vertex, Vertex> fixed[2] = {{rep.a, u}, {rep.b, v}};
        if (e.matcher.exists(host, fixed)) return true;
      }
    }
    return false;
  }

 private:
  struct Entry {
    Matcher matcher;
    std::vector<Edge> reps;
  };
  std::vector<Entry> entries_;
};

std::uint64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                        std::chrono::steady_clock::now() - start)
                                        .count());
}

struct Found {
  std::uint64_t value = 0;
  LabeledGraph witness;
};

// Turan search over edges in lexicographic order. The branch-and-bound mode
// keeps degrees non-increasing in vertex order and prunes with degree and
// vertex-deletion bounds; the oracle mode visits every free graph.
class TuranSearch {
 public:
  TuranSearch(std::size_t n, EdgeChecker& checker, bool exhaustive)
      : n_(n), checker_(checker), exhaustive_(exhaustive), g_(n), deg_(n, 0), undecided_(n, n - 1) {
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) edges_.push_back({a, b});
  }

  Found run(const Found& seed, std::optional<std::uint64_t> prev_value, std::uint64_t upper) {
    best_ = seed;
    prev_ = prev_value;
    upper_ = upper;
    if (best_.value < upper_ || exhaustive_) dfs(0, 0);
    return best_;
  }

 private:
  bool done() const { return !exhaustive_ && best_.value >= upper_; }

  bool feasible(std::size_t k, std::uint64_t current) const {
    if (current + (edges_.size() - k) <= best_.value) return false;
    const std::size_t row = k < edges_.size() ? edges_[k].a : n_ - 1;
    // Rows before `row` are final.
    for (std::size_t v = 1; v <= row && v < n_; ++v)
      if (deg_[v] > deg_[v - 1]) return false;
    const std::size_t cap = row > 0 ? deg_[row - 1] : n_ - 1;
    std::int64_t need = 0;
    if (prev_) need = static_cast<std::int64_t>(best_.value + 1) - static_cast<std::int64_t>(*prev_);
    if (row > 0 && static_cast<std::int64_t>(deg_[row - 1]) < need) return false;
    std::uint64_t degree_sum = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (v < row) {
        degree_sum += deg_[v];
        continue;
      }
      if (deg_[v] > cap) return false;
      const std::size_t most = std::min(cap, deg_[v] + undecided_[v]);
      if (static_cast<std::int64_t>(most) < need) return false;
      degree_sum += most;
    }
    return degree_sum / 2 > best_.value;
  }

  void dfs(std::size_t k, std::uint64_t current) {
    if (done()) return;
    if (!exhaustive_ && !feasible(k, current)) return;
    if (current > best_.value) {
      best_.value = current;
      best_.witness = g_;
      if (done()) return;
    }
    if (k == edges_.size()) return;
    const auto [a, b] = edges_[k];
    --undecided_[a];
    --undecided_[b];
    g_.add_edge(a, b);
    ++deg_[a];
    ++deg_[b];
    if (!checker_.hits(g_, a, b)) dfs(k + 1, current + 1);
    g_.remove_edge(a, b);
    --deg_[a];
    --deg_[b];
    dfs(k + 1, current);
    ++undecided_[a];
    ++undecided_[b];
  }

  std::size_t n_;
  EdgeChecker& checker_;
  bool exhaustive_;
  LabeledGraph g_;
  std::vector<std::size_t> deg_;
  std::vector<std::size_t> undecided_;
  std::vector<Edge> edges_;
  Found best_;
  std::optional<std::uint64_t> prev_;
  std::uint64_t upper_ = 0;
};

// Zarankiewicz search over cells in row-major order. The branch-and-bound
// mode keeps rows and columns lexicographically non-increasing and prunes
// with row/column deletion bounds.
class ZarankiewiczSearch {
 public:
  struct Table {
    // z(a, b) for a <= m, b <= n, indexed [a][b].
    const std::vector<std::vector<std::uint64_t>>* z = nullptr;
  };

  ZarankiewiczSearch(std::size_t m, std::size_t n, EdgeChecker& checker, bool exhaustive)
      : m_(m), n_(n), checker_(checker), exhaustive_(exhaustive), host_(m + n),
        colors_(m + n, 1), cell_(m * n, 0), row_deg_(m, 0), col_deg_(n, 0),
        row_tied_(m, 0), col_tied_(n, 0) {
    std::fill(colors_.begin(), colors_.begin() + static_cast<std::ptrdiff_t>(m), 0);
    view_ = std::make_unique<GraphView>(host_, colors_);
  }

  Found run(const Found& seed, Table table, std::uint64_t upper) {
    best_ = seed;
    table_ = table;
    upper_ = upper;
    if (m_ > 0) row_tied_[0] = 0;
    for (std::size_t i = 1; i < m_; ++i) row_tied_[i] = 1;
    std::fill(col_tied_.begin(), col_tied_.end(), 1);
    if (best_.value < upper_ || exhaustive_) dfs(0, 0);
    return best_;
  }

 private:
  bool done() const { return !exhaustive_ && best_.value >= upper_; }
  std::uint64_t z(std::size_t a, std::size_t b) const { return (*table_.z)[a][b]; }

  bool feasible(std::size_t k, std::uint64_t current) const {
    const std::size_t cells = m_ * n_;
    if (current + (cells - k) <= best_.value) return false;
    const std::size_t i = k / std::max<std::size_t>(n_, 1), j = k % std::max<std::size_t>(n_, 1);
    const std::int64_t target = static_cast<std::int64_t>(best_.value + 1);
    // Rows below the current one form a host of their own.
    std::uint64_t finished = 0;
    for (std::size_t r = 0; r < i && r < m_; ++r) finished += row_deg_[r];
    if (i > 0 && i < m_ && finished + z(m_ - i, n_) <= best_.value) return false;
    if (m_ > 1) {
      const std::int64_t need = target - static_cast<std::int64_t>(z(m_ - 1, n_));
      for (std::size_t r = 0; r < m_; ++r) {
        std::size_t open = r > i ? n_ : (r == i ? n_ - j : 0);
        if (static_cast<std::int64_t>(row_deg_[r] + open) < need) return false;
      }
    }
    if (n_ > 1) {
      const std::int64_t need = target - static_cast<std::int64_t>(z(m_, n_ - 1));
      for (std::size_t c = 0; c < n_; ++c) {
        std::size_t open = i >= m_ ? 0 : (m_ - i - 1) + (c >= j ? 1 : 0);
        if (static_cast<std::int64_t>(col_deg_[c] + open) < need) return false;
      }
    }
    return true;
  }

  // Lexicographic order constraints for setting cell (i, j) to `bit`; on
  // success the tie flags are updated and the old values returned.
  bool order_ok(std::size_t i, std::size_t j, std::uint8_t bit) const {
    if (exhaustive_) return true;
    if (i > 0 && row_tied_[i] && bit > cell_[(i - 1) * n_ + j]) return false;
    if (j > 0 && col_tied_[j] && bit > cell_[i * n_ + j - 1]) return false;
    return true;
  }

  void set_cell(std::size_t i, std::size_t j, std::uint8_t bit) {
    cell_[i * n_ + j] = bit;
    if (exhaustive_) return;
    if (i > 0 && row_tied_[i] && bit != cell_[(i - 1) * n_ + j]) row_tied_[i] = 0;
    if (j > 0 && col_tied_[j] && bit != cell_[i * n_ + j - 1]) col_tied_[j] = 0;
  }

  void dfs(std::size_t k, std::uint64_t current) {
    if (done()) return;
    if (!exhaustive_ && !feasible(k, current)) return;
    if (current > best_.value) {
      best_.value = current;
      best_.witness = host_;
      if (done()) return;
    }
    if (k == m_ * n_) return;
    const std::size_t i = k / n_, j = k % n_;
    const auto saved_row = row_tied_[i];
    const auto saved_col = col_tied_[j];
    const auto u = static_cast<Vertex>(i), v = static_cast<Vertex>(m_ + j);
    if (order_ok(i, j, 1)) {
      host_.add_edge(u, v);
      set_cell(i, j, 1);
      ++row_deg_[i];
      ++col_deg_[j];
      if (!checker_.hits(*view_, u, v)) dfs(k + 1, current + 1);
      host_.remove_edge(u, v);
      --row_deg_[i];
      --col_deg_[j];
      row_tied_[i] = saved_row;
      col_tied_[j] = saved_col;
    }
    if (order_ok(i, j, 0)) {
      set_cell(i, j, 0);
      dfs(k + 1, current);
      row_tied_[i] = saved_row;
      col_tied_[j] = saved_col;
    }
    cell_[i * n_ + j] = 0;
  }

  std::size_t m_, n_;
  EdgeChecker& checker_;
  bool exhaustive_;
  LabeledGraph host_;
  std::vector<std::uint8_t> colors_;
  std::unique_ptr<GraphView> view_;
  std::vector<std::uint8_t> cell_;
  std::vector<std::size_t> row_deg_, col_deg_;
  std::vector<std::uint8_t> row_tied_, col_tied_;
  Found best_;
  Table table_;
  std::uint64_t upper_ = 0;
};

LabeledGraph with_isolated(const LabeledGraph& g, std::size_t n) {
  LabeledGraph out(n);
  for (auto e : g.edges()) out.add_edge(e.a, e.b);
  return out;
}

bool free_of_all(const LabeledGraph& g, std::span<const LabeledGraph> forbidden) {
  for (const auto& h : forbidden)
    if (!is_free(g, h)) return false;
  return true;
}

SignedBipartiteGraph as_signed(const LabeledGraph& host, std::size_t m, std::size_t n) {
  SignedBipartiteGraph s(m, n);
  for (auto e : host.edges()) s.add_edge(e.a, static_cast<Vertex>(e.b - m));
  return s;
}

LabeledGraph signed_host(const SignedBipartiteGraph& s) { return s.as_labeled(); }

// Embeds a (a, b) host into an (m, n) host, + and - indices kept.
LabeledGraph widen(const LabeledGraph& host, std::size_t a, std::size_t m, std::size_t n) {
  LabeledGraph out(m + n);
  for (auto e : host.edges()) out.add_edge(e.a, static_cast<Vertex>(m + (e.b - a)));
  return out;
}

}  // namespace

std::string to_string(ExtremalKind kind) {
  return kind == ExtremalKind::Turan ? "turan" : "zarankiewicz";
}

std::string to_string(SearchMethod method) {
  switch (method) {
    case SearchMethod::Oracle: return "oracle";
    case SearchMethod::BranchAndBound: return "branch-and-bound";
    case SearchMethod::Cached: return "cached";
  }
  return "branch-and-bound";
}

ExtremalKind parse_kind(std::string_view text) {
  if (text == "turan") return ExtremalKind::Turan;
  if (text == "zarankiewicz") return ExtremalKind::Zarankiewicz;
  fail(ErrorCode::ParseError, "unknown record kind '" + std::string(text) + "'");
}

SearchMethod parse_method(std::string_view text) {
  if (text == "oracle") return SearchMethod::Oracle;
  if (text == "branch-and-bound" || text == "bnb") return SearchMethod::BranchAndBound;
  if (text == "cached") return SearchMethod::Cached;
  fail(ErrorCode::ParseError, "unknown method '" + std::string(text) + "'");
}

std::vector<CanonicalLabel> forbidden_key(std::span<const LabeledGraph> forbidden) {
  std::vector<CanonicalLabel> key;
  for (const auto& h : forbidden) key.push_back(canonical_form(h));
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  return key;
}

std::vector<CanonicalLabel> forbidden_key(const SignedBipartiteGraph& h) { return {canonical_form(h)}; }

ExtremalRecord exact_turan(std::size_t n, std::span<const LabeledGraph> forbidden, SearchMethod method,
                           const ExtremalCaps& caps) {
  const auto start = std::chrono::steady_clock::now();
  if (forbidden.empty()) fail(ErrorCode::EmptyForbiddenSet, "the forbidden family is empty");
  for (const auto& h : forbidden) {
    if (h.edge_count() == 0) fail(ErrorCode::PreconditionViolated, "forbidden graphs need at least one edge");
  }
  if (method == SearchMethod::Cached) method = SearchMethod::BranchAndBound;
  const bool exhaustive = method == SearchMethod::Oracle;
  const std::size_t cap = exhaustive ? caps.turan_oracle_n : caps.turan_bnb_n;
  if (n > cap) {
    fail(ErrorCode::SizeExceeded, "n = " + std::to_string(n) + " exceeds the " + to_string(method) +
                                      " cap of " + std::to_string(cap));
  }
  EdgeChecker checker(forbidden, {});
  Found found{0, LabeledGraph(n)};
  if (exhaustive) {
    TuranSearch search(n, checker, true);
    found = search.run(found, std::nullopt, 0);
  } else {
    // ex(i) for i = 0..n, each seeded by the previous witness.
    Found prev{0, LabeledGraph(0)};
    std::optional<std::uint64_t> prev_value;
    for (std::size_t i = 1; i <= n; ++i) {
      Found seed{0, LabeledGraph(i)};
      auto padded = with_isolated(prev.witness, i);
      if (prev.value > 0 && free_of_all(padded, forbidden)) seed = Found{prev.value, padded};
      std::uint64_t upper = i * (i - 1) / 2;
      if (i >= 3 && prev_value) upper = std::min<std::uint64_t>(upper, i * *prev_value / (i - 2));
      TuranSearch search(i, checker, false);
      prev = search.run(seed, prev_value, upper);
      prev_value = prev.value;
    }
    found = prev;
  }
  ExtremalRecord r;
  r.kind = ExtremalKind::Turan;
  r.forbidden = forbidden_key(forbidden);
  r.size = {n};
  r.value = found.value;
  r.witness = encode_graph6(canonical_graph(found.witness));
  r.method = method;
  r.runtime_ms = elapsed_ms(start);
  return r;
}

ExtremalRecord exact_zarankiewicz(std::size_t m, std::size_t n, const SignedBipartiteGraph& h,
                                  SearchMethod method, const ExtremalCaps& caps) {
  const auto start = std::chrono::steady_clock::now();
  if (h.edge_count() == 0) fail(ErrorCode::PreconditionViolated, "the forbidden graph needs at least one edge");
  if (method == SearchMethod::Cached) method = SearchMethod::BranchAndBound;
  const bool exhaustive = method == SearchMethod::Oracle;
  const std::size_t cap = exhaustive ? caps.zarankiewicz_oracle_cells : caps.zarankiewicz_bnb_cells;
  if (m * n > cap) {
    fail(ErrorCode::SizeExceeded, "m*n = " + std::to_string(m * n) + " exceeds the " + to_string(method) +
                                      " cap of " + std::to_string(cap));
  }
  const LabeledGraph pattern = h.as_labeled();
  const std::vector<std::uint8_t> pattern_colors = h.colors();
  const LabeledGraph patterns[1] = {pattern};
  const std::vector<std::uint8_t> colors[1] = {pattern_colors};
  EdgeChecker checker(patterns, colors);

  Found found{0, LabeledGraph(m + n)};
  if (exhaustive) {
    ZarankiewiczSearch search(m, n, checker, true);
    found = search.run(found, {}, 0);
  } else {
    std::vector<std::vector<std::uint64_t>> z(m + 1, std::vector<std::uint64_t>(n + 1, 0));
    std::vector<std::vector<LabeledGraph>> w(m + 1, std::vector<LabeledGraph>(n + 1));
    auto free_signed = [&](const LabeledGraph& host, std::size_t a, std::size_t b) {
      return is_free(as_signed(host, a, b), h);
    };
    for (std::size_t a = 0; a <= m; ++a) {
      for (std::size_t b = 0; b <= n; ++b) {
        w[a][b] = LabeledGraph(a + b);
        if (a == 0 || b == 0) continue;
        Found seed{0, LabeledGraph(a + b)};
        if (z[a - 1][b] > seed.value) {
          auto g = widen(w[a - 1][b], a - 1, a, b);
          if (free_signed(g, a, b)) seed = Found{z[a - 1][b], g};
        }
        if (z[a][b - 1] > seed.value) {
          auto g = widen(w[a][b - 1], a, a, b);
          if (free_signed(g, a, b)) seed = Found{z[a][b - 1], g};
        }
        std::uint64_t upper = a * b;
        if (a >= 2) upper = std::min<std::uint64_t>(upper, a * z[a - 1][b] / (a - 1));
        if (b >= 2) upper = std::min<std::uint64_t>(upper, b * z[a][b - 1] / (b - 1));
        ZarankiewiczSearch search(a, b, checker, false);
        auto result = search.run(seed, {&z}, upper);
        z[a][b] = result.value;
        w[a][b] = result.witness;
      }
    }
    found = Found{z[m][n], w[m][n]};
  }
  ExtremalRecord r;
  r.kind = ExtremalKind::Zarankiewicz;
  r.forbidden = forbidden_key(h);
  r.size = {m, n};
  r.value = found.value;
  auto witness = as_signed(found.witness, m, n);
  r.witness = encode_graph6(signed_host(decode_signed_label(canonical_form(witness))));
  r.method = method;
  r.runtime_ms = elapsed_ms(start);
  return r;
}

}  // namespace edgeglue
