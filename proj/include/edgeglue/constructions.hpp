#pragma once

#include "edgeglue/graph.hpp"
#include "edgeglue/rational.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace edgeglue {

// Reproducible randomness: std::mt19937_64 (its output sequence is fixed by
// the C++ standard) consumed through integer-only transforms.
class SeededSampler {
 public:
  static constexpr std::string_view algorithm_id = "mt19937_64";

  explicit SeededSampler(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);
  // True with probability p, compared on the full 64-bit draw.
  bool bernoulli(const Rational& p);
  bool bernoulli(double p);

  // Independent stream for trial `index`, seeded by splitmix64.
  SeededSampler split(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Pairs (a, b), a < b, in lexicographic order, each kept independently.
LabeledGraph sample_gnp(std::size_t n, const Rational& p, SeededSampler& sampler);
LabeledGraph sample_gnp(std::size_t n, double p, SeededSampler& sampler);

struct DeletionResult {
  LabeledGraph graph;
  double p = 0;
  std::size_t sampled_edges = 0;
  std::size_t deletions = 0;
};

// Repeatedly takes the first embedding of f in lexicographic order and
// removes the least edge of its image, until g is f-free.
DeletionResult delete_per_copy(const LabeledGraph& g, const LabeledGraph& f);

// G(n, p) with p = n^-(v(f)-2)/(e(f)-1) / 4, then delete_per_copy.
// Throws TooFewEdges when e(f) < 2.
DeletionResult deletion_construction(std::size_t n, const LabeledGraph& f, SeededSampler& sampler);

// max degree <= k * min degree; with min degree 0 only the edgeless graph
// qualifies. Throws PreconditionViolated on the empty vertex set.
bool almost_regular(const LabeledGraph& g, const Rational& k);

struct SignSplit {
  SignedBipartiteGraph graph;
  // Original vertex of each + and - index.
  std::vector<Vertex> plus_vertices;
  std::vector<Vertex> minus_vertices;
};

// Uniform random equipartition (ceil(v/2) on +), crossing edges only.
SignSplit random_sign_split(const LabeledGraph& g, SeededSampler& sampler);

// floor(1/max(q1, q2)) disjoint copies of g0 inside an (m, n) host. g0 must
// have parts (q1 m, q2 n) (PartSizeMismatch otherwise) and 0 < q1, q2 <= 1.
SignedBipartiteGraph disjoint_blowup(const SignedBipartiteGraph& g0, const Rational& q1,
                                     const Rational& q2, std::size_t m, std::size_t n);

}  // namespace edgeglue
