#include "edgeglue/embedding.hpp"
#include "edgeglue/error.hpp"
#include "edgeglue/supersat.hpp"

#include <doctest.h>

#include "oracles.hpp"

#include <algorithm>
#include <iterator>
#include <random>
#include <set>

using namespace edgeglue;
using namespace edgeglue::graphs;

namespace {

RootedPattern c4_edge() { return RootedPattern::edge_rooted(cycle(4), Edge{0, 1}); }

FamilyConstraints caps(std::optional<std::uint64_t> pair, std::optional<std::uint64_t> edge) {
  FamilyConstraints c;
  c.per_pair_cap = pair;
  c.per_edge_cap = edge;
  return c;
}

SignedBipartiteGraph star_host() {
  SignedBipartiteGraph g(10, 10);
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = 0; b < 10; ++b) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("edgeless host gives an empty family") {
  auto fam = build_balanced_family(LabeledGraph(6), c4_edge(), caps(std::nullopt, std::nullopt));
  CHECK(fam.members.empty());
  CHECK(verify_family(fam, {}).ok());
  auto s = build_signed_balanced_family(SignedBipartiteGraph(0, 0), signed_cycle(4), Edge{0, 0}, {});
  CHECK(s.members.empty());
}

TEST_CASE("uncapped family takes every embedding") {
  auto fam = build_balanced_family(complete_bipartite(3, 3), c4_edge(), {});
  CHECK(fam.members.size() == 72);
  CHECK(count_copies(cycle(4), complete_bipartite(3, 3)) == 9);
  CHECK(verify_family(fam, {}).ok());
  CHECK_FALSE(find_recruitable(fam, {}));

  BuildOptions one;
  one.unlabeled = true;
  auto copies = build_balanced_family(complete_bipartite(3, 3), c4_edge(), {}, one);
  CHECK(copies.members.size() == 9);
  CHECK_FALSE(find_recruitable(copies, {}, true));
}

TEST_CASE("per-edge cap") {
  const auto c = caps(std::nullopt, 2);
  auto fam = build_balanced_family(complete_bipartite(3, 3), c4_edge(), c);
  auto r = verify_family(fam, c);
  CHECK(r.ok());
  for (const auto& [e, d] : fam.edge_degree) CHECK(d <= 2);
  CHECK(fam.members.size() == 18);
  CHECK_FALSE(find_recruitable(fam, c));
}

TEST_CASE("signed families") {
  auto g = signed_complete_bipartite(3, 3);
  auto h = signed_cycle(4);
  REQUIRE(h.has_edge(0, 0));
  auto fam = build_signed_balanced_family(g, h, Edge{0, 0}, {});
  CHECK(fam.members.size() == 36);
  CHECK(verify_family(fam, {}).ok());

  const auto one = caps(std::nullopt, 1);
  auto capped = build_signed_balanced_family(g, h, Edge{0, 0}, one);
  CHECK(capped.members.size() <= g.edge_count());
  std::set<Edge> images;
  for (const auto& m : capped.members) {
    const Edge f = *capped.pattern.distinguished_edge();
    CHECK(images.insert(Edge{m.map[f.a], m.map[f.b]}.normalized()).second);
  }
  CHECK_FALSE(find_recruitable(capped, one));
  const auto& hc = capped.host_colors;
  const auto& pc = capped.pattern.colors();
  for (const auto& m : capped.members) {
    for (Vertex x = 0; x < m.map.size(); ++x) CHECK(hc[m.map[x]] == pc[x]);
  }
}

TEST_CASE("verify_family reports violations") {
  auto fam = build_balanced_family(complete_bipartite(3, 3), c4_edge(), caps(std::nullopt, 2));
  const Edge f = *fam.pattern.distinguished_edge();
  const Edge target = Edge{fam.members[0].map[f.a], fam.members[0].map[f.b]}.normalized();
  // Add one more embedding through an edge already at the cap.
  for (const auto& e : list_embeddings(fam.pattern_view(), fam.host_view())) {
    if (Edge{e.map[f.a], e.map[f.b]}.normalized() != target) continue;
    if (std::find(fam.members.begin(), fam.members.end(), e) != fam.members.end()) continue;
    fam.members.push_back(e);
    break;
  }
  auto r = verify_family(fam, caps(std::nullopt, 2));
  CHECK(r.edge_violations.size() == 1);
  CHECK(r.edge_violations[0].first == target);
  CHECK(r.edge_violations[0].second == 3);
  CHECK_FALSE(r.stats_consistent);

  BalancedFamily bad = fam;
  bad.members = {Embedding{{0, 1, 2, 3}}};
  CHECK(verify_family(bad, {}).invalid_members.size() == 1);

  BalancedFamily empty = fam;
  empty.members.clear();
  empty.edge_degree.clear();
  empty.pair_degree.clear();
  auto er = verify_family(empty, {}, 5.0);
  CHECK(er.ok());
  CHECK_FALSE(er.target_met);
  CHECK(verify_family(empty, {}, 0.0).target_met);
}

TEST_CASE("pair caps") {
  const auto c = caps(1, std::nullopt);
  auto fam = build_balanced_family(complete(6), c4_edge(), c);
  CHECK(verify_family(fam, c).ok());
  for (const auto& [k, d] : fam.pair_degree) CHECK(d <= 1);
  CHECK_FALSE(find_recruitable(fam, c));
  auto deg = extension_degrees(fam);
  std::uint64_t total = 0;
  for (const auto& [psi, d] : deg) total += d;
  CHECK(total == fam.members.size());
}

TEST_CASE("builder rejects bad input") {
  auto p = RootedPattern::induced(cycle(4), {0, 1});
  CHECK_THROWS_AS(build_balanced_family(complete(5), p, {}), Error);
  BuildOptions o;
  o.limits.max_host_vertices = 4;
  try {
    build_balanced_family(complete(5), c4_edge(), {}, o);
    FAIL("expected SizeExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeExceeded);
  }
}

TEST_CASE("heavy/light split") {
  std::map<std::vector<Vertex>, std::uint64_t> d{{{0}, 5}, {{1}, 1}, {{2}, 3}, {{3}, 3}};
  auto s = heavy_light_split(d, 3);
  CHECK(s.heavy.size() == 3);
  CHECK(s.light_mass == 1);
  CHECK(s.heavy_mass == 11);
  CHECK(heavy_light_split(d, 0).heavy.size() == 4);
  auto all_light = heavy_light_split(d, 6);
  CHECK(all_light.heavy.empty());
  CHECK(all_light.light_mass == 12);
  CHECK(heavy_light_split(d, Rational(5, 2)).heavy.size() == 3);
  CHECK_THROWS_AS(heavy_light_split(d, -1), Error);
}

TEST_CASE("glued copies") {
  const auto fam = build_balanced_family(complete_bipartite(3, 3), c4_edge(), {});
  const Edge shared{0, 3};
  std::vector<BalancedFamily> two{fam, fam};
  auto g = assemble_glued_copies(two, shared);
  REQUIRE(g);
  CHECK(g->glued.vertex_count() == 6);
  CHECK(g->glued.edge_count() == 7);
  CHECK(g->map[0] == 0);
  CHECK(g->map[1] == 3);
  std::set<Vertex> a(g->members[0].map.begin(), g->members[0].map.end());
  std::set<Vertex> b(g->members[1].map.begin(), g->members[1].map.end());
  std::vector<Vertex> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  CHECK(common == std::vector<Vertex>{0, 3});
  // The combined map is an embedding of the glued graph.
  CHECK(is_embedding(GraphView(g->glued), GraphView(fam.host), g->map));

  std::vector<BalancedFamily> one{fam};
  auto single = assemble_glued_copies(one, shared);
  REQUIRE(single);
  CHECK(single->members.size() == 1);

  const auto small = build_balanced_family(cycle(4), c4_edge(), {});
  std::vector<BalancedFamily> blocked{small, small};
  CHECK_FALSE(assemble_glued_copies(blocked, Edge{0, 1}));

  try {
    assemble_glued_copies(two, Edge{0, 1});
    FAIL("expected EmptyCandidateSet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyCandidateSet);
  }
}

TEST_CASE("rough count") {
  auto r = rough_count_check(star_host(), plus_star(2), 10, 4);
  CHECK(r.copies == 180);
  CHECK(r.required == 40);
  CHECK(r.pass);
  CHECK_THROWS_AS(rough_count_check(star_host(), plus_star(2), 10, Rational(7, 2)), Error);
  CHECK_THROWS_AS(rough_count_check(star_host(), plus_star(2), 11, 4), Error);
}

TEST_CASE("derived caps") {
  auto s = derive_signed_caps(Rational(7, 2), Rational(1, 2), Rational(1, 3));
  CHECK(*s.per_pair_cap == 1);
  CHECK(*s.per_edge_cap == 5);
  // gamma p^(4-1) n^(4-2) = 1 * 1/8 * 100
  auto c = derive_caps(10, 0.5, PatternStats::of(c4_edge()), 1, 1, 1, 45);
  CHECK(*c.per_pair_cap == 12);
  // 2 * 2^-12 * 2^-4 * 10^4 / 45
  CHECK(*c.per_edge_cap == 0);
  CHECK(c.derivation.at("n") == 10);
}

TEST_CASE("fuzz: builder output satisfies caps and is maximal") {
  std::mt19937_64 rng(2024);
  const LabeledGraph patterns[] = {cycle(4), path(3), cycle(5), complete(3), complete_bipartite(2, 3)};
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 5 + rng() % 12;
    auto g = oracle::random_graph(rng, n, 0.3 + 0.4 * static_cast<double>(rng() % 100) / 100.0);
    const auto& h = patterns[rng() % std::size(patterns)];
    auto p = RootedPattern::edge_rooted(h, h.edges()[rng() % h.edge_count()]);
    auto c = caps(rng() % 3 == 0 ? std::nullopt : std::optional<std::uint64_t>(1 + rng() % 3),
                  rng() % 3 == 0 ? std::nullopt : std::optional<std::uint64_t>(1 + rng() % 5));
    SeededSampler s(t);
    BuildOptions o;
    o.shuffle = &s;
    auto fam = build_balanced_family(g, p, c, o);
    CHECK(verify_family(fam, c).ok());
    CHECK_FALSE(find_recruitable(fam, c));
  }
  for (int t = 0; t < 5; ++t) {
    auto g = oracle::random_graph(rng, 40, 0.15);
    auto c = caps(2, 3);
    auto fam = build_balanced_family(g, c4_edge(), c);
    CHECK(verify_family(fam, c).ok());
  }
}

TEST_CASE("seeded builds are reproducible") {
  std::mt19937_64 rng(9);
  auto g = oracle::random_graph(rng, 14, 0.5);
  auto c = caps(2, 2);
  SeededSampler a(77), b(77);
  BuildOptions oa, ob;
  oa.shuffle = &a;
  ob.shuffle = &b;
  auto x = build_balanced_family(g, c4_edge(), c, oa);
  auto y = build_balanced_family(g, c4_edge(), c, ob);
  CHECK(x.members == y.members);
  CHECK(to_json(x).dump() == to_json(y).dump());
}

TEST_CASE("family JSON round trip") {
  auto fam = build_balanced_family(complete_bipartite(3, 3), c4_edge(), caps(std::nullopt, 2));
  auto back = family_from_json(to_json(fam));
  CHECK(back.members == fam.members);
  CHECK(back.edge_degree == fam.edge_degree);
  CHECK(back.pair_degree == fam.pair_degree);
  auto s = build_signed_balanced_family(signed_complete_bipartite(3, 2), signed_cycle(4), Edge{0, 0}, {});
  auto sb = family_from_json(to_json(s));
  CHECK(sb.host_colors == s.host_colors);
  CHECK(sb.pattern.colors() == s.pattern.colors());
  CHECK(verify_family(sb, {}).ok());
  CHECK_THROWS_AS(family_from_json(nlohmann::json{{"host", "A_"}}), Error);
}
