#include "edgeglue/bounds.hpp"

#include "edgeglue/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>

namespace edgeglue {

namespace {

Rational q_of(std::uint64_t v) { return Rational(BigInt(v)); }

double ln(const Rational& r) {
  // Numerator and denominator can be far outside double range.
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  auto log_big = [](const BigInt& x) {
    const std::size_t bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 1000) return std::log(x.convert_to<double>());
    const std::size_t shift = bits - 64;
    return std::log(static_cast<BigInt>(x >> shift).convert_to<double>()) +
           static_cast<double>(shift) * std::log(2.0);
  };
  return log_big(num) - log_big(den);
}

}  // namespace

void GoodnessParams::validate() const {
  if (alpha < 0 || alpha >= 1) fail(ErrorCode::PreconditionViolated, "alpha must lie in [0, 1)");
  if (big_a <= 0) fail(ErrorCode::PreconditionViolated, "A must be positive");
  if (eta <= 0) fail(ErrorCode::PreconditionViolated, "eta must be positive");
}

PatternStats PatternStats::of(const RootedPattern& p) {
  return PatternStats{p.h(), p.e_h(), p.ell(), p.e_f()};
}

void PatternStats::validate() const {
  if (ell == 0 || ell >= h) fail(ErrorCode::PreconditionViolated, "need 0 < v(F) < v(H)");
  if (e_f >= e_h) fail(ErrorCode::PreconditionViolated, "need e(F) < e(H)");
}

Rational feasibility_value(std::uint64_t ell, std::uint64_t e_f, const Rational& alpha) {
  return q_of(ell) - 1 + (1 - q_of(e_f)) * (1 - alpha);
}

bool feasibility_check(const PatternStats& s, const Rational& alpha) {
  return feasibility_value(s.ell, s.e_f, alpha) >= 1;
}

bool feasibility_check(const LabeledGraph& f, const Rational& alpha) {
  return feasibility_value(f.vertex_count(), f.edge_count(), alpha) >= 1;
}

ExponentReport es_exponent_forest_report(const Rational& alpha, const PatternStats& s) {
  s.validate();
  if (alpha < 0 || alpha >= 1) fail(ErrorCode::PreconditionViolated, "alpha must lie in [0, 1)");
  if (!feasibility_check(s, alpha)) {
    fail(ErrorCode::InfeasibleInput,
         "(l-1) + (1-e(F))(1-alpha) = " + to_fraction_string(feasibility_value(s.ell, s.e_f, alpha)) +
             " < 1");
  }
  ExponentReport r;
  r.first = 1 - (q_of(s.h) - q_of(s.ell)) / (q_of(s.e_h) - q_of(s.e_f));
  r.second = 1 - (1 - alpha) / feasibility_value(s.ell, s.e_f, alpha);
  r.branch = r.second > r.first ? 2 : 1;
  r.value = std::max(r.first, r.second);
  return r;
}

Rational es_exponent_forest(const Rational& alpha, const PatternStats& s) {
  return es_exponent_forest_report(alpha, s).value;
}

Rational es_beta(const Rational& eta, const PatternStats& s, const Rational& k,
                 std::uint32_t copies) {
  if (k <= 0) fail(ErrorCode::PreconditionViolated, "K must be positive");
  if (copies < 1) fail(ErrorCode::PreconditionViolated, "s must be at least 1");
  if (eta <= 0) fail(ErrorCode::PreconditionViolated, "eta must be positive");
  const auto eh = static_cast<std::uint32_t>(s.e_h);
  const auto ef = static_cast<std::uint32_t>(s.e_f);
  const Rational inner = eta / (4 * pow(Rational(8), eh) * pow(6 * k, ef));
  return pow(inner, copies) / pow(Rational(4), eh);
}

ThresholdReport cleaning_threshold(std::uint64_t n, const PatternStats& s, const Rational& gamma,
                                   const Rational& alpha, const Rational& c) {
  s.validate();
  if (n < 1) fail(ErrorCode::PreconditionViolated, "n must be at least 1");
  if (gamma <= 0 || gamma > 1) fail(ErrorCode::PreconditionViolated, "gamma must lie in (0, 1]");
  if (c <= 0) fail(ErrorCode::PreconditionViolated, "C must be positive");
  if (alpha < 0 || alpha >= 1) fail(ErrorCode::PreconditionViolated, "alpha must lie in [0, 1)");
  const Rational denom = feasibility_value(s.ell, s.e_f, alpha);
  if (denom <= 0) {
    fail(ErrorCode::InfeasibleInput,
         "(l-1) + (1-alpha)(1-e(F)) = " + to_fraction_string(denom) + " is not positive");
  }
  ThresholdReport r;
  const Rational de = q_of(s.e_h) - q_of(s.e_f);
  r.n_exponent[0] = -(q_of(s.h) - q_of(s.ell)) / de;
  r.gamma_exponent[0] = Rational(-1) / de;
  r.n_exponent[1] = (alpha - 1) / denom;
  r.gamma_exponent[1] = r.n_exponent[1];

  const double log_n = std::log(static_cast<double>(n));
  const double log_gamma = ln(gamma);
  const double log_c = ln(c);
  double log_term[2];
  for (int b = 0; b < 2; ++b) {
    const double log_coeff = log_c + to_double(r.gamma_exponent[b]) * log_gamma;
    r.coefficient[b] = std::exp(log_coeff);
    log_term[b] = log_coeff + to_double(r.n_exponent[b]) * log_n;
  }
  // With gamma = 1 both coefficients equal C, so the exponents decide.
  if (gamma == 1) {
    r.branch = n > 1 && r.n_exponent[1] > r.n_exponent[0] ? 2 : 1;
  } else {
    r.branch = log_term[1] > log_term[0] ? 2 : 1;
  }
  r.log_value = log_term[r.branch - 1];
  r.value = std::exp(r.log_value);
  return r;
}

double cleaning_constant(const GoodnessParams& params, const PatternStats& s) {
  params.validate();
  s.validate();
  const Rational denom = feasibility_value(s.ell, s.e_f, params.alpha);
  if (denom <= 0) fail(ErrorCode::InfeasibleInput, "cleaning constant needs a positive denominator");
  const double log_eta_prime = ln(params.eta) - 3.0 * static_cast<double>(s.e_h) * std::log(2.0);
  const double a = to_double(1 - params.alpha);
  const double log_first =
      (static_cast<double>(s.ell - 1) * (std::log(16.0) + ln(params.big_a)) +
       a * (std::log(8.0 * static_cast<double>(s.h)) + log_eta_prime)) /
      to_double(denom);
  const double log_second = std::log(2.0) / static_cast<double>(s.e_h - s.e_f);
  return std::exp(std::max(log_first, log_second));
}

Rational deletion_exponent(const LabeledGraph& f) {
  if (f.edge_count() < 2) fail(ErrorCode::TooFewEdges, "need a graph with at least two edges");
  return 2 - (q_of(f.vertex_count()) - 2) / (q_of(f.edge_count()) - 1);
}

double deletion_probability(std::uint64_t n, const LabeledGraph& f) {
  const Rational e = deletion_exponent(f) - 2;
  return 0.25 * std::pow(static_cast<double>(n), to_double(e));
}

BinomRatio binom_ratio_bounds(std::uint64_t n, const Rational& q, std::uint64_t s) {
  if (s < 1) fail(ErrorCode::PreconditionViolated, "clause s >= 1 fails");
  if (q <= 0 || q > 1) fail(ErrorCode::PreconditionViolated, "clause 0 < q <= 1 fails");
  const Rational qn_r = q * q_of(n);
  if (boost::multiprecision::denominator(qn_r) != 1) {
    fail(ErrorCode::PreconditionViolated, "clause qn integral fails: qn = " + to_fraction_string(qn_r));
  }
  const auto qn = boost::multiprecision::numerator(qn_r).convert_to<std::int64_t>();
  const auto si = static_cast<std::int64_t>(s);
  if (qn < 2 * (si - 1)) {
    fail(ErrorCode::PreconditionViolated,
         "clause qn >= 2(s-1) fails: qn = " + std::to_string(qn) + ", s = " + std::to_string(s));
  }
  if (qn < si) fail(ErrorCode::PreconditionViolated, "clause s <= qn fails");
  const auto ni = static_cast<std::int64_t>(n);
  BinomRatio r;
  r.exact = Rational(binomial(ni - si, qn - si), binomial(ni, qn));
  r.lower = q * pow(q / 2, static_cast<std::uint32_t>(s - 1));
  r.upper = pow(q, static_cast<std::uint32_t>(s));
  return r;
}

std::size_t leaf_count(const LabeledGraph& t) {
  std::size_t r = 0;
  for (Vertex v = 0; v < t.vertex_count(); ++v) r += t.degree(v) == 1 ? 1 : 0;
  return r;
}

Rational tree_leaf_exponent(const LabeledGraph& t) {
  if (!t.is_tree()) fail(ErrorCode::NotATree, "tree_leaf_exponent needs a tree");
  if (t.vertex_count() < 3) fail(ErrorCode::PreconditionViolated, "the tree needs at least 3 vertices");
  return 1 - Rational(1, static_cast<long long>(leaf_count(t)));
}

RootedPattern extended_leaf_pattern(const LabeledGraph& t) {
  if (!t.is_tree()) fail(ErrorCode::NotATree, "extended_leaf_pattern needs a tree");
  if (t.vertex_count() < 3) fail(ErrorCode::PreconditionViolated, "the tree needs at least 3 vertices");
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < t.vertex_count(); ++v)
    if (t.degree(v) == 1) leaves.push_back(v);
  const Vertex extended = leaves.front();
  const auto w = static_cast<Vertex>(t.vertex_count());
  LabeledGraph h(t.vertex_count() + 1);
  for (auto e : t.edges()) h.add_edge(e.a, e.b);
  h.add_edge(extended, w);
  std::vector<Vertex> roots{extended, w};
  roots.insert(roots.end(), leaves.begin() + 1, leaves.end());
  return RootedPattern(std::move(h), std::move(roots), {Edge{extended, w}}, Edge{extended, w});
}

}  // namespace edgeglue
