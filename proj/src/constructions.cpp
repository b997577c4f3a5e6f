#include "edgeglue/constructions.hpp"

#include "edgeglue/bounds.hpp"
#include "edgeglue/embedding.hpp"
#include "edgeglue/error.hpp"

#include <algorithm>
#include <cmath>

namespace edgeglue {

namespace {

std::size_t exact_part(const Rational& q, std::size_t total, const char* name) {
  const Rational part = q * Rational(static_cast<unsigned long long>(total));
  if (boost::multiprecision::denominator(part) != 1) {
    fail(ErrorCode::PartSizeMismatch, std::string(name) + " * part size is not an integer");
  }
  return boost::multiprecision::numerator(part).convert_to<std::size_t>();
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t SeededSampler::below(std::uint64_t bound) {
  if (bound == 0) fail(ErrorCode::PreconditionViolated, "empty sampling range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x <= limit) return x % bound;
  }
}

bool SeededSampler::bernoulli(const Rational& p) {
  const std::uint64_t x = engine_();
  if (p <= 0) return false;
  if (p >= 1) return true;
  // x / 2^64 < p  <=>  x * den < num * 2^64.
  const BigInt num = boost::multiprecision::numerator(p);
  const BigInt den = boost::multiprecision::denominator(p);
  return BigInt(x) * den < (num << 64);
}

bool SeededSampler::bernoulli(double p) {
  const std::uint64_t x = engine_();
  if (!(p > 0)) return false;
  if (p >= 1) return true;
  const auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 64));
  return x < threshold;
}

SeededSampler SeededSampler::split(std::uint64_t index) const {
  return SeededSampler(splitmix64(seed_ ^ splitmix64(index)));
}

LabeledGraph sample_gnp(std::size_t n, const Rational& p, SeededSampler& sampler) {
  if (p < 0 || p > 1) fail(ErrorCode::PreconditionViolated, "p must lie in [0, 1]");
  // Precomputed threshold keeps the loop in 128-bit integers.
  const BigInt num = boost::multiprecision::numerator(p);
  const BigInt den = boost::multiprecision::denominator(p);
  // x / 2^64 < p  <=>  x < ceil(p 2^64).
  const bool always = p == 1;
  const std::uint64_t threshold =
      always ? 0 : (((num << 64) + den - 1) / den).convert_to<std::uint64_t>();
  LabeledGraph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const std::uint64_t x = sampler.next();
      if (always || x < threshold) g.add_edge(a, b);
    }
  }
  return g;
}

LabeledGraph sample_gnp(std::size_t n, double p, SeededSampler& sampler) {
  if (!(p >= 0 && p <= 1)) fail(ErrorCode::PreconditionViolated, "p must lie in [0, 1]");
  LabeledGraph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (sampler.bernoulli(p)) g.add_edge(a, b);
  return g;
}

DeletionResult delete_per_copy(const LabeledGraph& g, const LabeledGraph& f) {
  DeletionResult out;
  out.graph = g;
  out.sampled_edges = g.edge_count();
  if (f.edge_count() == 0) fail(ErrorCode::PreconditionViolated, "the deleted pattern needs an edge");
  const auto f_edges = f.edges();
  Matcher matcher(f, VertexOrder::Lexicographic);
  for (;;) {
    std::vector<Vertex> first;
    matcher.visit(out.graph, {}, [&](std::span<const Vertex> map) {
      first.assign(map.begin(), map.end());
      return false;
    });
    if (first.empty()) break;
    Edge least{~Vertex{0}, ~Vertex{0}};
    for (auto e : f_edges) least = std::min(least, Edge{first[e.a], first[e.b]}.normalized());
    out.graph.remove_edge(least.a, least.b);
    ++out.deletions;
  }
  return out;
}

DeletionResult deletion_construction(std::size_t n, const LabeledGraph& f, SeededSampler& sampler) {
  const double p = deletion_probability(n, f);
  auto sampled = sample_gnp(n, p, sampler);
  auto out = delete_per_copy(sampled, f);
  out.p = p;
  return out;
}

bool almost_regular(const LabeledGraph& g, const Rational& k) {
  if (g.vertex_count() == 0) fail(ErrorCode::PreconditionViolated, "almost_regular needs a vertex");
  const auto lo = g.min_degree(), hi = g.max_degree();
  if (lo == 0) return hi == 0;
  return Rational(static_cast<unsigned long long>(hi)) <= k * Rational(static_cast<unsigned long long>(lo));
}

SignSplit random_sign_split(const LabeledGraph& g, SeededSampler& sampler) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[sampler.below(i)]);
  const std::size_t plus = (n + 1) / 2;
  SignSplit out;
  out.plus_vertices.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(plus));
  out.minus_vertices.assign(order.begin() + static_cast<std::ptrdiff_t>(plus), order.end());
  std::sort(out.plus_vertices.begin(), out.plus_vertices.end());
  std::sort(out.minus_vertices.begin(), out.minus_vertices.end());
  std::vector<std::pair<bool, Vertex>> where(n);
  for (Vertex i = 0; i < out.plus_vertices.size(); ++i) where[out.plus_vertices[i]] = {true, i};
  for (Vertex i = 0; i < out.minus_vertices.size(); ++i) where[out.minus_vertices[i]] = {false, i};
  out.graph = SignedBipartiteGraph(plus, n - plus);
  for (auto e : g.edges()) {
    auto [pa, ia] = where[e.a];
    auto [pb, ib] = where[e.b];
    if (pa == pb) continue;
    if (pa) {
      out.graph.add_edge(ia, ib);
    } else {
      out.graph.add_edge(ib, ia);
    }
  }
  return out;
}

SignedBipartiteGraph disjoint_blowup(const SignedBipartiteGraph& g0, const Rational& q1,
                                     const Rational& q2, std::size_t m, std::size_t n) {
  if (q1 <= 0 || q1 > 1 || q2 <= 0 || q2 > 1) {
    fail(ErrorCode::PreconditionViolated, "q1 and q2 must lie in (0, 1]");
  }
  const std::size_t a = exact_part(q1, m, "q1"), b = exact_part(q2, n, "q2");
  if (g0.plus_count() != a || g0.minus_count() != b) {
    fail(ErrorCode::PartSizeMismatch, "g0 has parts (" + std::to_string(g0.plus_count()) + ", " +
                                          std::to_string(g0.minus_count()) + "), expected (" +
                                          std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  const Rational q = std::max(q1, q2);
  const Rational inv = 1 / q;
  const auto copies = static_cast<std::size_t>(
      (boost::multiprecision::numerator(inv) / boost::multiprecision::denominator(inv)).convert_to<std::uint64_t>());
  SignedBipartiteGraph out(m, n);
  for (std::size_t c = 0; c < copies; ++c) {
    for (auto e : g0.edges()) {
      out.add_edge(static_cast<Vertex>(c * a + e.a), static_cast<Vertex>(c * b + e.b));
    }
  }
  return out;
}

}  // namespace edgeglue
