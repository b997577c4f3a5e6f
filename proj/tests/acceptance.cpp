// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include "cli.hpp"

#include "edgeglue/bounds.hpp"
#include "edgeglue/constructions.hpp"
#include "edgeglue/embedding.hpp"
#include "edgeglue/extremal.hpp"
#include "edgeglue/gluing.hpp"
#include "edgeglue/graph6.hpp"
#include "edgeglue/rational.hpp"
#include "edgeglue/supersat.hpp"

#include "oracles.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace edgeglue;
using namespace edgeglue::graphs;

namespace {

// Pinned limits and tolerances.
constexpr double kTuranBudgetSeconds = 300;
constexpr double kZarankiewiczBudgetSeconds = 300;
constexpr double kDeletionBudgetSeconds = 120;
constexpr double kFamilyBudgetSeconds = 600;
constexpr int kDeletionTrials = 1000;
constexpr std::size_t kDeletionN = 32;
constexpr double kDeletionSigmas = 3.0;
constexpr int kFamilyInstances = 50;
constexpr std::size_t kFamilyMaxHost = 20;
constexpr int kRoughCountHosts = 20;
constexpr int kEmbeddingPairs = 200;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Literal scan over all 2^C(n,2) labelled graphs.
std::uint64_t literal_turan(std::size_t n, const LabeledGraph& h) {
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) pairs.push_back({a, b});
  std::uint64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    const auto e = static_cast<std::uint64_t>(std::popcount(mask));
    if (e <= best) continue;
    LabeledGraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].a, pairs[i].b);
    if (!oracle::contains(g, h)) best = e;
  }
  return best;
}

// Literal scan over all 2^(mn) m x n 0/1 matrices; a signed C4 is two rows
// sharing two columns.
std::uint64_t literal_z_c4(std::size_t m, std::size_t n) {
  std::uint64_t best = 0;
  const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> rows(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * n)); ++mask) {
    const auto e = static_cast<std::uint64_t>(std::popcount(mask));
    if (e <= best) continue;
    for (std::size_t r = 0; r < m; ++r) rows[r] = (mask >> (r * n)) & row_mask;
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t b = a + 1; b < m && ok; ++b) ok = std::popcount(rows[a] & rows[b]) < 2;
    if (ok) best = e;
  }
  return best;
}

bool witness_ok(const ExtremalRecord& r, const LabeledGraph& h) {
  const auto w = decode_graph6(r.witness);
  return w.edge_count() == r.value && !oracle::contains(w, h);
}

Outcome criterion_turan() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::pair<const char*, LabeledGraph> pool[] = {
      {"C4", cycle(4)}, {"C6", cycle(6)}, {"P3", path(3)}, {"P4", path(4)}, {"K13", star(3)}, {"K22", complete_bipartite(2, 2)}};
  int compared = 0;
  for (const auto& [name, h] : pool) {
    for (std::size_t n = 4; n <= 7; ++n) {
      const std::vector<LabeledGraph> f{h};
      const auto bnb = exact_turan(n, f, SearchMethod::BranchAndBound);
      const auto orc = exact_turan(n, f, SearchMethod::Oracle);
      const std::string tag = std::string("ex(") + std::to_string(n) + "," + name + ")";
      o.require(bnb.value == orc.value, tag + " bnb " + std::to_string(bnb.value) + " oracle " + std::to_string(orc.value));
      o.require(witness_ok(bnb, h) && witness_ok(orc, h), tag + " witness");
      if (n <= 6) {
        const auto lit = literal_turan(n, h);
        o.require(lit == bnb.value, tag + " literal scan " + std::to_string(lit));
      }
      ++compared;
    }
  }
  const std::vector<LabeledGraph> c4{cycle(4)};
  const std::uint64_t spots[] = {4, 6, 7};
  for (std::size_t n = 4; n <= 6; ++n) {
    o.require(exact_turan(n, c4).value == spots[n - 4], "spot ex(" + std::to_string(n) + ",C4)");
  }
  const double secs = seconds_since(t0);
  o.require(secs < kTuranBudgetSeconds, "runtime");
  o.detail << compared << " (n,H) pairs, literal scan for n<=6, ex(4..6,C4)=4,6,7, " << secs << "s";
  return o;
}

Outcome criterion_zarankiewicz() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto c4 = signed_cycle(4);
  int compared = 0;
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto lit = literal_z_c4(m, n);
      const auto bnb = exact_zarankiewicz(m, n, c4, SearchMethod::BranchAndBound);
      const auto orc = exact_zarankiewicz(m, n, c4, SearchMethod::Oracle);
      const std::string tag = "z(" + std::to_string(m) + "," + std::to_string(n) + ")";
      o.require(bnb.value == lit, tag + " bnb " + std::to_string(bnb.value) + " literal " + std::to_string(lit));
      o.require(orc.value == lit, tag + " oracle");
      ++compared;
    }
  }
  o.require(exact_zarankiewicz(2, 2, c4).value == 3, "z(2,2)=3");
  o.require(exact_zarankiewicz(3, 3, c4).value == 6, "z(3,3)=6");
  o.require(exact_zarankiewicz(4, 4, c4).value == 9, "z(4,4)=9");
  const double secs = seconds_since(t0);
  o.require(secs < kZarankiewiczBudgetSeconds, "runtime");
  o.detail << compared << " (m,n) pairs against 2^(mn) scan, z(2,2),z(3,3),z(4,4)=3,6,9, " << secs << "s";
  return o;
}

Outcome criterion_gluing() {
  Outcome o;
  const auto glued = glue_along_edge(cycle(4), Edge{0, 1}, cycle(4), Edge{0, 1});
  o.require(glued.size() == 1, "two C4s glue to one graph");
  const std::vector<LabeledGraph> c4{cycle(4)};
  std::ostringstream ex_row;
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto a = exact_turan(n, c4).value;
    const auto b = exact_turan(n, glued).value;
    o.require(a <= b, "ex(" + std::to_string(n) + ",C4) <= ex(n,H*)");
    ex_row << (n > 1 ? " " : "") << a << "<=" << b;
  }
  GluingSpec spec{GluingMode::SignedUnique, {{signed_cycle(4), Edge{0, 0}}, {signed_cycle(4), Edge{0, 0}}}};
  const auto h_star = signed_glue(spec);
  Rational worst = 0;
  std::ostringstream z_row;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto zi = exact_zarankiewicz(n, n, signed_cycle(4)).value;
    const auto zs = exact_zarankiewicz(n, n, h_star).value;
    o.require(zi <= zs, "max z(n,n,H_i) <= z(n,n,H*) at n=" + std::to_string(n));
    if (zi > 0) {
      Rational r(static_cast<long long>(zs), static_cast<long long>(zi));
      if (r > worst) worst = r;
      z_row << (n > 1 ? " " : "") << to_fraction_string(r);
    }
  }
  o.detail << "ex: " << ex_row.str() << "; signed R by n: " << z_row.str() << ", empirical R = "
           << to_fraction_string(worst);
  return o;
}

Outcome criterion_binomial() {
  Outcome o;
  std::uint64_t points = 0;
  for (std::uint64_t n = 1; n <= 30; ++n) {
    for (std::uint64_t k = 1; k <= n; ++k) {
      const Rational q(static_cast<long long>(k), static_cast<long long>(n));
      for (std::uint64_t s = 1; s <= k && k >= 2 * (s - 1); ++s) {
        const auto r = binom_ratio_bounds(n, q, s);
        // Falling-factorial form of C(n-s, k-s) / C(n, k).
        Rational exact = 1;
        for (std::uint64_t i = 0; i < s; ++i) {
          exact *= Rational(static_cast<long long>(k - i), static_cast<long long>(n - i));
        }
        const Rational lower = q * pow(q / 2, static_cast<std::uint32_t>(s - 1));
        const Rational upper = pow(q, static_cast<std::uint32_t>(s));
        const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " s=" + std::to_string(s);
        o.require(r.exact == exact && r.lower == lower && r.upper == upper, tag + " values");
        o.require(lower <= exact && exact <= upper, tag + " sandwich");
        ++points;
      }
    }
  }
  o.detail << points << " grid points, exact rationals";
  return o;
}

// Two vertices with two common neighbours span a C4.
bool c4_free_by_codegree(const LabeledGraph& g) {
  const auto m = oracle::matrix(g);
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      int common = 0;
      for (std::size_t c = 0; c < m.size(); ++c) common += m[a][c] && m[b][c];
      if (common >= 2) return false;
    }
  return true;
}

Outcome criterion_deletion() {
  Outcome o;
  const auto t0 = Clock::now();
  SeededSampler base(kSeed);
  std::vector<double> edges;
  double p = 0;
  for (int t = 0; t < kDeletionTrials; ++t) {
    auto s = base.split(static_cast<std::uint64_t>(t));
    const auto r = deletion_construction(kDeletionN, cycle(4), s);
    p = r.p;
    o.require(c4_free_by_codegree(r.graph), "trial " + std::to_string(t) + " contains C4");
    o.require(r.graph.edge_count() + r.deletions == r.sampled_edges, "edge bookkeeping");
    edges.push_back(static_cast<double>(r.graph.edge_count()));
  }
  double mean = 0;
  for (double e : edges) mean += e;
  mean /= static_cast<double>(edges.size());
  double ss = 0;
  for (double e : edges) ss += (e - mean) * (e - mean);
  const double sd = std::sqrt(ss / static_cast<double>(edges.size() - 1));
  const double pairs = static_cast<double>(kDeletionN * (kDeletionN - 1) / 2);
  const double bound = p / 2 * pairs - kDeletionSigmas * sd;
  o.require(mean >= bound, "mean edge count");
  const double secs = seconds_since(t0);
  o.require(secs < kDeletionBudgetSeconds, "runtime");
  o.detail << kDeletionTrials << " trials all C4-free, p=" << p << ", mean=" << mean << " >= " << bound << " ((p/2)C(n,2)=" << p / 2 * pairs << ", sd "
           << sd << "), " << secs << "s";
  return o;
}

struct FamilyInstance {
  LabeledGraph host;
  std::vector<std::uint8_t> host_colors;
  BalancedFamily family;
  FamilyConstraints caps;
};

// Degrees recomputed here, then every colour-preserving injective map outside
// the family is checked to break a cap.
bool independent_family_check(const FamilyInstance& in, std::string& why) {
  const auto& fam = in.family;
  const auto& p = fam.pattern;
  const LabeledGraph& h = p.pattern();
  const auto hm = oracle::matrix(fam.host);
  const Edge f = *p.distinguished_edge();
  std::map<Edge, std::uint64_t> ed;
  std::map<std::pair<std::vector<Vertex>, Vertex>, std::uint64_t> pd;
  std::set<std::vector<Vertex>> members;
  auto roots_of = [&](const std::vector<Vertex>& map) {
    std::vector<Vertex> psi;
    for (auto r : p.root_vertices()) psi.push_back(map[r]);
    return psi;
  };
  std::set<Vertex> root_set(p.root_vertices().begin(), p.root_vertices().end());
  for (const auto& m : fam.members) {
    for (auto e : h.edges())
      if (!hm[m.map[e.a]][m.map[e.b]]) return why = "member is not an embedding", false;
    if (!in.host_colors.empty()) {
      for (Vertex x = 0; x < h.vertex_count(); ++x)
        if (in.host_colors[m.map[x]] != p.colors()[x]) return why = "member breaks signs", false;
    }
    if (!members.insert(m.map).second) return why = "duplicate member", false;
    ++ed[Edge{m.map[f.a], m.map[f.b]}.normalized()];
    for (Vertex x = 0; x < h.vertex_count(); ++x)
      if (!root_set.contains(x)) ++pd[{roots_of(m.map), m.map[x]}];
  }
  for (const auto& [e, d] : ed)
    if (in.caps.per_edge_cap && d > *in.caps.per_edge_cap) return why = "edge cap exceeded", false;
  for (const auto& [k, d] : pd)
    if (in.caps.per_pair_cap && d > *in.caps.per_pair_cap) return why = "pair cap exceeded", false;
  bool maximal = true;
  oracle::each_injective_map(
      h, fam.host,
      [&](const std::vector<Vertex>& map) {
        if (!maximal || members.contains(map)) return;
        bool blocked = false;
        if (in.caps.per_edge_cap) {
          auto it = ed.find(Edge{map[f.a], map[f.b]}.normalized());
          blocked = (it == ed.end() ? 0 : it->second) + 1 > *in.caps.per_edge_cap;
        }
        if (!blocked && in.caps.per_pair_cap) {
          const auto psi = roots_of(map);
          for (Vertex x = 0; x < h.vertex_count() && !blocked; ++x) {
            if (root_set.contains(x)) continue;
            auto it = pd.find({psi, map[x]});
            blocked = (it == pd.end() ? 0 : it->second) + 1 > *in.caps.per_pair_cap;
          }
        }
        if (!blocked) maximal = false;
      },
      p.colors(), in.host_colors);
  if (!maximal) return why = "a recruitable embedding remains", false;
  return true;
}

Outcome criterion_families() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(kSeed);
  const LabeledGraph unsigned_pool[] = {cycle(4), path(3), path(4), cycle(5), complete(3), complete_bipartite(2, 3), star(3)};
  const SignedBipartiteGraph signed_pool[] = {signed_cycle(4), plus_star(2), signed_complete_bipartite(2, 3)};
  std::size_t total_members = 0;
  int induced = 0;
  int signed_count = 0;
  for (int t = 0; t < kFamilyInstances; ++t) {
    FamilyConstraints c;
    if (rng() % 4) c.per_pair_cap = 1 + rng() % 3;
    if (rng() % 4) c.per_edge_cap = 1 + rng() % 6;
    SeededSampler order(kSeed + static_cast<std::uint64_t>(t));
    BuildOptions opts;
    opts.shuffle = &order;
    FamilyInstance in{{}, {}, BalancedFamily{LabeledGraph(0), {}, RootedPattern::edge_rooted(path(2 + 1), Edge{0, 1}), {}, {}, {}}, c};
    if (t % 5 == 4) {
      const auto& h = signed_pool[rng() % std::size(signed_pool)];
      const std::size_t m = 3 + rng() % 6, n = 3 + rng() % 6;
      SignedBipartiteGraph g(m, n);
      for (Vertex a = 0; a < m; ++a)
        for (Vertex b = 0; b < n; ++b)
          if (rng() % 100 < 60) g.add_edge(a, b);
      std::vector<Edge> fs;
      for (Vertex a = 0; a < h.plus_count(); ++a)
        for (Vertex b = 0; b < h.minus_count(); ++b)
          if (h.has_edge(a, b)) fs.push_back({a, b});
      in.family = build_signed_balanced_family(g, h, fs[rng() % fs.size()], c, opts);
      in.host_colors = g.colors();
      ++signed_count;
    } else {
      const std::size_t n = 6 + rng() % (kFamilyMaxHost - 5);
      const auto g = oracle::random_graph(rng, n, 0.25 + static_cast<double>(rng() % 50) / 100.0);
      if (t % 5 == 3) {
        // Path 0-1-2 is induced in C6 and carries f = (0,1).
        in.family = build_balanced_family(g, RootedPattern::induced(cycle(6), {0, 1, 2}, Edge{0, 1}), c, opts);
        ++induced;
      } else {
        const auto& h = unsigned_pool[rng() % std::size(unsigned_pool)];
        in.family = build_balanced_family(g, RootedPattern::edge_rooted(h, h.edges()[rng() % h.edge_count()]), c, opts);
      }
    }
    const auto report = verify_family(in.family, c);
    o.require(report.ok(), "instance " + std::to_string(t) + " verify_family");
    o.require(!find_recruitable(in.family, c), "instance " + std::to_string(t) + " find_recruitable");
    std::string why;
    o.require(independent_family_check(in, why), "instance " + std::to_string(t) + " independent check: " + why);
    total_members += in.family.members.size();
  }
  const double secs = seconds_since(t0);
  o.require(secs < kFamilyBudgetSeconds, "runtime");
  o.detail << kFamilyInstances << " instances (" << signed_count << " signed, " << induced << " with a 3-vertex F), "
           << total_members << " members, zero violations, all maximal, " << secs << "s";
  return o;
}

std::uint64_t star_copies(const SignedBipartiteGraph& g, std::size_t k) {
  std::uint64_t total = 0;
  for (Vertex a = 0; a < g.plus_count(); ++a) {
    std::size_t d = 0;
    for (Vertex b = 0; b < g.minus_count(); ++b) d += g.has_edge(a, b);
    total += binomial(static_cast<std::int64_t>(d), static_cast<std::int64_t>(k)).convert_to<std::uint64_t>();
  }
  return total;
}

Outcome criterion_rough_count() {
  Outcome o;
  SignedBipartiteGraph g(10, 10);
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = 0; b < 10; ++b) g.add_edge(a, b);
  const auto base = rough_count_check(g, plus_star(2), 10, 4);
  o.require(base.copies == 180 && base.required == 40 && base.pass, "base instance");
  std::mt19937_64 rng(kSeed);
  int checked = 0;
  while (checked < kRoughCountHosts) {
    const std::size_t k = 2 + rng() % 2;
    const auto h = plus_star(k);
    // m n stays within the branch-and-bound cell cap.
    const std::size_t m = 2 + rng() % 3;
    const std::size_t n = 4 * k + rng() % 4;
    SignedBipartiteGraph host(m, n);
    for (Vertex a = 0; a < m; ++a)
      for (Vertex b = 0; b < n; ++b)
        if (rng() % 100 < 85) host.add_edge(a, b);
    const auto z = exact_zarankiewicz(m, n, h).value;
    const Rational big_k = 4 + Rational(static_cast<long long>(rng() % 3), 2);
    if (Rational(static_cast<long long>(host.edge_count())) < big_k * static_cast<long long>(z)) continue;
    const auto r = rough_count_check(host, h, z, big_k);
    o.require(r.copies == star_copies(host, k), "copy count against degree formula");
    o.require(r.pass, "random host " + std::to_string(checked));
    ++checked;
  }
  o.detail << "base copies=" << base.copies << " >= " << to_fraction_string(base.required) << "; " << checked
           << " random hosts pass";
  return o;
}

Outcome criterion_exponents() {
  Outcome o;
  const auto c4 = PatternStats::of(RootedPattern::edge_rooted(cycle(4), Edge{0, 1}));
  const auto c6 = PatternStats::of(RootedPattern::edge_rooted(cycle(6), Edge{0, 1}));
  const auto a = es_exponent_forest(Rational(1, 2), c4);
  const auto b = es_exponent_forest(Rational(1, 3), c6);
  const auto t = tree_leaf_exponent(star(3));
  const auto via_pattern = es_exponent_forest(0, PatternStats::of(extended_leaf_pattern(star(3))));
  o.require(a == Rational(1, 2), "C4 edge at 1/2");
  o.require(b == Rational(1, 3), "C6 edge at 1/3");
  o.require(t == Rational(2, 3), "K13 tree");
  o.require(via_pattern == t, "K13 via the extended-leaf pattern");
  o.detail << "C4: " << to_fraction_string(a) << ", C6: " << to_fraction_string(b) << ", K13: " << to_fraction_string(t);
  return o;
}

Outcome criterion_embeddings() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::uint64_t total = 0;
  for (int t = 0; t < kEmbeddingPairs; ++t) {
    const std::size_t hn = 1 + rng() % 5;
    const std::size_t gn = 1 + rng() % 8;
    const auto h = oracle::random_graph(rng, hn, 0.5);
    const auto g = oracle::random_graph(rng, gn, 0.3 + static_cast<double>(rng() % 60) / 100.0);
    std::vector<std::uint8_t> hc, gc;
    if (t % 4 == 3) {
      for (std::size_t i = 0; i < hn; ++i) hc.push_back(static_cast<std::uint8_t>(rng() % 2));
      for (std::size_t i = 0; i < gn; ++i) gc.push_back(static_cast<std::uint8_t>(rng() % 2));
    }
    const auto naive = oracle::count_maps(h, g, hc, gc);
    const auto fast = hc.empty() ? count_embeddings(h, g) : count_embeddings(GraphView(h, hc), GraphView(g, gc));
    o.require(naive == fast, "pair " + std::to_string(t) + ": " + std::to_string(fast) + " vs " + std::to_string(naive));
    total += naive;
  }
  o.detail << kEmbeddingPairs << " pairs, " << total << " embeddings in total";
  return o;
}

std::string pipeline_output() {
  std::ostringstream all;
  const std::vector<std::vector<std::string>> cmds = {
      {"construct", "--n", "32", "--forbid", "c4", "--seed", "7", "--trials", "5"},
      {"construct", "--n", "20", "--forbid", "c6", "--seed", "8", "--p", "1/5"},
      {"construct", "--sign-split", "k5", "--seed", "9", "--trials", "3"},
      {"supersat", "--gnp-n", "16", "--p", "1/2", "--pattern", "c4", "--root-edge", "--seed", "10", "--pair-cap", "2",
       "--edge-cap", "3", "--members", "--heavy", "2"},
      {"supersat", "--signed", "--host", "k4,4", "--pattern", "c4", "--seed", "11", "--edge-cap", "2", "--members"},
      {"ex", "--n", "7", "--forbid", "c4"},
      {"zex", "--m", "4", "--n", "5", "--forbid", "c4"},
  };
  for (const auto& cmd : cmds) {
    std::ostringstream out, err;
    all << cli::run(cmd, out, err) << '\n' << out.str();
  }
  SeededSampler s(12);
  for (int t = 0; t < 10; ++t) {
    auto sub = s.split(static_cast<std::uint64_t>(t));
    all << encode_graph6(deletion_construction(24, cycle(4), sub).graph) << '\n';
  }
  return all.str();
}

Outcome criterion_determinism() {
  Outcome o;
  const auto a = pipeline_output();
  const auto b = pipeline_output();
  o.require(a == b, "outputs differ");
  o.require(a.find("\"seed\":7") != std::string::npos, "seed echo");
  o.detail << "7 CLI pipelines + 10 deletion runs, " << a.size() << " bytes identical";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"turan-oracle-equivalence", criterion_turan},
      {"zarankiewicz-oracle-equivalence", criterion_zarankiewicz},
      {"gluing-sandwich", criterion_gluing},
      {"binomial-sandwich", criterion_binomial},
      {"deletion-construction", criterion_deletion},
      {"balanced-family-constraints", criterion_families},
      {"rough-count", criterion_rough_count},
      {"exponent-calculators", criterion_exponents},
      {"embedding-counts", criterion_embeddings},
      {"determinism", criterion_determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << index << " " << name << ": " << o.detail.str() << std::endl;
    failures += !o.pass;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
