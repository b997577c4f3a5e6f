#include "edgeglue/bounds.hpp"
#include "edgeglue/error.hpp"

#include <doctest.h>

#include "oracles.hpp"

#include <cmath>

using namespace edgeglue;

namespace {

Rational q(const char* s) { return parse_rational(s); }

PatternStats edge_rooted(const LabeledGraph& h) {
  return PatternStats::of(RootedPattern::edge_rooted(h, h.edges().front()));
}

LabeledGraph random_tree(std::mt19937_64& rng, std::size_t n) {
  LabeledGraph t(n);
  for (Vertex v = 1; v < n; ++v) t.add_edge(static_cast<Vertex>(rng() % v), v);
  return t;
}

}  // namespace

TEST_CASE("forest exponent") {
  auto c4 = edge_rooted(graphs::cycle(4));
  auto c6 = edge_rooted(graphs::cycle(6));
  CHECK(es_exponent_forest(q("1/2"), c4) == q("1/2"));
  CHECK(es_exponent_forest(q("1/3"), c6) == q("1/3"));
  auto r = es_exponent_forest_report(q("1/2"), c4);
  CHECK(r.branch == 2);
  CHECK(r.first == q("1/3"));

  CHECK(es_exponent_forest(q("1/2"), PatternStats{6, 6, 3, 2}) == q("2/3"));
  CHECK_THROWS_AS(es_exponent_forest(q("0"), PatternStats{6, 7, 4, 4}), Error);
  CHECK_THROWS_AS(es_exponent_forest(q("1"), c4), Error);
  CHECK_THROWS_AS(es_exponent_forest(q("1/2"), PatternStats{4, 4, 4, 1}), Error);
}

TEST_CASE("edge-rooted second branch equals alpha") {
  for (std::uint64_t h = 3; h <= 9; ++h) {
    for (std::uint64_t eh = 2; eh <= h * (h - 1) / 2; ++eh) {
      for (int a = 0; a < 12; ++a) {
        const Rational alpha(a, 12);
        auto r = es_exponent_forest_report(alpha, PatternStats{h, eh, 2, 1});
        CHECK(r.second == alpha);
      }
    }
  }
}

TEST_CASE("beta") {
  PatternStats s{3, 2, 2, 1};
  CHECK(es_beta(1, s, 1, 1) == q("1/24576"));
  const Rational inner = Rational(1) / (4 * 64 * 6);
  CHECK(es_beta(1, s, 1, 2) == inner * inner / 16);
  Rational prev = es_beta(q("1/3"), s, 2, 1);
  for (std::uint32_t copies = 2; copies <= 6; ++copies) {
    auto b = es_beta(q("1/3"), s, 2, copies);
    CHECK(b < prev);
    prev = b;
  }
  CHECK_THROWS_AS(es_beta(1, s, 0, 1), Error);
  CHECK_THROWS_AS(es_beta(1, s, 1, 0), Error);
}

TEST_CASE("cleaning threshold") {
  auto c4 = edge_rooted(graphs::cycle(4));
  auto t = cleaning_threshold(1000, c4, 1, q("1/2"), 1);
  CHECK(t.n_exponent[0] == q("-2/3"));
  CHECK(t.n_exponent[1] == q("-1/2"));
  CHECK(t.branch == 2);
  CHECK(t.value == doctest::Approx(std::pow(1000.0, -0.5)).epsilon(1e-12));

  auto c6 = edge_rooted(graphs::cycle(6));
  auto u = cleaning_threshold(1000, c6, 1, q("1/3"), 1);
  CHECK(u.n_exponent[0] == q("-4/5"));
  CHECK(u.n_exponent[1] == q("-2/3"));
  CHECK(u.branch == 2);

  double prev = 0;
  for (int k = 1; k <= 10; ++k) {
    auto g = cleaning_threshold(500, c6, Rational(1, k * k), q("1/3"), 3);
    CHECK(g.value > prev);
    prev = g.value;
  }
  // Very small gamma is evaluated in log space.
  auto tiny = cleaning_threshold(1000, c4, Rational(1, BigInt(1) << 2000), q("1/2"), 1);
  CHECK(std::isfinite(tiny.log_value));
  CHECK(tiny.log_value > 0);
  CHECK_THROWS_AS(cleaning_threshold(10, c4, 0, q("1/2"), 1), Error);
  CHECK_THROWS_AS(cleaning_threshold(10, PatternStats{6, 7, 4, 4}, 1, 0, 1), Error);
}

TEST_CASE("cleaning constant") {
  GoodnessParams params{q("1/2"), 1, 1};
  auto c4 = edge_rooted(graphs::cycle(4));
  CHECK(cleaning_constant(params, c4) >= std::pow(2.0, 1.0 / 3.0) - 1e-12);
  GoodnessParams big{q("1/2"), 1000, 1};
  // (16000)^1 * (8 * 2^-12 * 4)^(1/2) dominates.
  CHECK(cleaning_constant(big, c4) == doctest::Approx(16000.0 * std::sqrt(32.0 / 4096.0)));
  CHECK_THROWS_AS(cleaning_constant(GoodnessParams{1, 1, 1}, c4), Error);
}

TEST_CASE("deletion exponent and feasibility") {
  CHECK(deletion_exponent(graphs::cycle(4)) == q("4/3"));
  CHECK(deletion_exponent(graphs::cycle(6)) == q("6/5"));
  CHECK(deletion_exponent(graphs::complete_bipartite(3, 3)) == q("3/2"));
  CHECK_THROWS_AS(deletion_exponent(graphs::complete(2)), Error);
  CHECK(deletion_probability(64, graphs::cycle(4)) == doctest::Approx(1.0 / 64));

  CHECK(feasibility_check(graphs::complete(2), q("0")));
  CHECK(feasibility_value(2, 1, q("3/7")) == 1);
  CHECK(feasibility_check(graphs::cycle(4), q("1/2")));
  CHECK(feasibility_value(4, 4, q("1/2")) == q("3/2"));
  CHECK_FALSE(feasibility_check(graphs::cycle(4), q("0")));
  CHECK(feasibility_value(4, 4, 0) == 0);
}

TEST_CASE("binomial ratio examples") {
  auto a = binom_ratio_bounds(10, q("1/2"), 2);
  CHECK(a.lower == q("1/8"));
  CHECK(a.exact == q("2/9"));
  CHECK(a.upper == q("1/4"));
  auto b = binom_ratio_bounds(10, q("1/2"), 1);
  CHECK((b.lower == q("1/2") && b.exact == q("1/2") && b.upper == q("1/2")));
  auto c = binom_ratio_bounds(8, q("1/2"), 3);
  CHECK(c.lower == q("1/32"));
  CHECK(c.exact == q("1/14"));
  CHECK(c.upper == q("1/8"));
  CHECK_THROWS_AS(binom_ratio_bounds(10, q("1/3"), 1), Error);
  CHECK_THROWS_AS(binom_ratio_bounds(10, q("1/2"), 4), Error);
  CHECK_THROWS_AS(binom_ratio_bounds(10, q("3/2"), 1), Error);
  CHECK_THROWS_AS(binom_ratio_bounds(10, q("1/2"), 0), Error);
}

TEST_CASE("binomial ratio sandwich over the whole grid") {
  std::size_t points = 0;
  for (std::uint64_t n = 1; n <= 30; ++n) {
    for (std::uint64_t k = 1; k <= n; ++k) {
      const Rational qq(static_cast<long long>(k), static_cast<long long>(n));
      for (std::uint64_t s = 1; 2 * (s - 1) <= k && s <= k; ++s) {
        auto r = binom_ratio_bounds(n, qq, s);
        // Falling-factorial form of the ratio.
        Rational direct = 1;
        for (std::uint64_t i = 0; i < s; ++i) direct *= Rational(static_cast<long long>(k - i), static_cast<long long>(n - i));
        CHECK(r.exact == direct);
        CHECK(r.lower <= r.exact);
        CHECK(r.exact <= r.upper);
        ++points;
      }
    }
  }
  CHECK(points > 2000);
}

TEST_CASE("tree leaf exponent") {
  auto k13 = graphs::star(3);
  CHECK(tree_leaf_exponent(k13) == q("2/3"));
  auto p = extended_leaf_pattern(k13);
  CHECK(p.ell() == 4);
  CHECK(p.e_f() == 1);
  CHECK(es_exponent_forest(0, PatternStats::of(p)) == q("2/3"));
  CHECK_THROWS_AS(tree_leaf_exponent(graphs::cycle(4)), Error);
  CHECK_THROWS_AS(tree_leaf_exponent(graphs::path(2)), Error);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    auto t = random_tree(rng, 3 + rng() % 10);
    auto pat = extended_leaf_pattern(t);
    CHECK(pat.forest_is_induced());
    auto r = es_exponent_forest_report(0, PatternStats::of(pat));
    CHECK(r.value == tree_leaf_exponent(t));
    CHECK(r.value == r.second);
  }
}
