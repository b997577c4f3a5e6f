#pragma once

#include "edgeglue/graph.hpp"
#include "edgeglue/rational.hpp"
#include "edgeglue/rooted_pattern.hpp"

#include <cstdint>

namespace edgeglue {

// (alpha, A, eta) of Erdos-Simonovits goodness.
struct GoodnessParams {
  Rational alpha;
  Rational big_a;
  Rational eta;

  // Throws PreconditionViolated unless 0 <= alpha < 1, A > 0, eta > 0.
  void validate() const;
};

// h = v(H), e_h = e(H), ell = v(F), e_f = e(F).
struct PatternStats {
  std::uint64_t h = 0;
  std::uint64_t e_h = 0;
  std::uint64_t ell = 0;
  std::uint64_t e_f = 0;

  static PatternStats of(const RootedPattern& p);
  // Throws PreconditionViolated unless 0 < ell < h and e_f < e_h.
  void validate() const;
};

// (ell - 1) + (1 - e_f)(1 - alpha); the lower-bound inequality asks for >= 1.
Rational feasibility_value(std::uint64_t ell, std::uint64_t e_f, const Rational& alpha);
bool feasibility_check(const PatternStats& s, const Rational& alpha);
bool feasibility_check(const LabeledGraph& f, const Rational& alpha);

struct ExponentReport {
  Rational value;
  // 1 or 2: which term of the max is larger (1 on ties).
  int branch = 1;
  Rational first;
  Rational second;
};

// alpha' = max{1 - (h-l)/(e_h-e_f), 1 - (1-alpha)/(l-1+(1-e_f)(1-alpha))}.
// Throws InfeasibleInput when feasibility_check fails.
ExponentReport es_exponent_forest_report(const Rational& alpha, const PatternStats& s);
Rational es_exponent_forest(const Rational& alpha, const PatternStats& s);

// beta = 4^-e_h * (eta / (4 * 8^e_h * (6K)^e_f))^copies.
Rational es_beta(const Rational& eta, const PatternStats& s, const Rational& k,
                 std::uint32_t copies);

// g = C max(n^a1 gamma^b1, (n gamma)^a2) with a1 = -(h-l)/(e_h-e_f),
// b1 = -1/(e_h-e_f), a2 = (alpha-1)/((l-1)+(1-alpha)(1-e_f)).
struct ThresholdReport {
  double value = 0;
  double log_value = 0;
  int branch = 1;
  // Each term is coefficient * n^exponent.
  Rational n_exponent[2];
  Rational gamma_exponent[2];
  double coefficient[2] = {0, 0};
};

// Requires n >= 1, 0 < gamma <= 1, c > 0. Throws InfeasibleInput when the
// second denominator is not positive, PreconditionViolated otherwise.
ThresholdReport cleaning_threshold(std::uint64_t n, const PatternStats& s, const Rational& gamma,
                                   const Rational& alpha, const Rational& c);

// The constant C after which the cleaning threshold holds, with
// eta' = eta / 2^(3 e_h):
// max{((16A)^(l-1) (8 eta' h)^(1-alpha))^(1/((l-1)+(1-e_f)(1-alpha))), 2^(1/(e_h-e_f))}.
double cleaning_constant(const GoodnessParams& params, const PatternStats& s);

// 2 - (v(F)-2)/(e(F)-1). Throws TooFewEdges when e(F) < 2.
Rational deletion_exponent(const LabeledGraph& f);
// p = n^-(v(F)-2)/(e(F)-1) / 4.
double deletion_probability(std::uint64_t n, const LabeledGraph& f);

struct BinomRatio {
  Rational lower;
  Rational exact;
  Rational upper;
};

// q (q/2)^(s-1) <= C(n-s, qn-s) / C(n, qn) <= q^s. Needs s >= 1, 0 < q <= 1,
// qn integral and qn >= 2(s-1), s <= qn; throws PreconditionViolated naming
// the failed clause.
BinomRatio binom_ratio_bounds(std::uint64_t n, const Rational& q, std::uint64_t s);

// Number of degree-one vertices.
std::size_t leaf_count(const LabeledGraph& t);

// 1 - 1/r for a tree on t >= 3 vertices with r leaves (NotATree otherwise).
Rational tree_leaf_exponent(const LabeledGraph& t);

// The rooted pattern behind that value: t with one leaf extended by a new
// vertex, rooted at the new edge plus the other r-1 leaves.
RootedPattern extended_leaf_pattern(const LabeledGraph& t);

}  // namespace edgeglue
