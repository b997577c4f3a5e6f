#include "edgeglue/supersat.hpp"

#include "edgeglue/error.hpp"
#include "edgeglue/graph6.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace edgeglue {

namespace {

std::uint64_t floor_cap(double log_value) {
  if (log_value >= std::log(18446744073709549568.0)) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::floor(std::exp(log_value) * (1 + 1e-12)));
}

std::uint64_t floor_rational(const Rational& r) {
  if (r <= 0) return 0;
  const BigInt q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  return q.convert_to<std::uint64_t>();
}

bool within(std::uint64_t value, const std::optional<std::uint64_t>& cap) { return !cap || value <= *cap; }

using CopyKey = std::pair<std::vector<Vertex>, std::vector<Edge>>;

CopyKey copy_key(const LabeledGraph& pattern, std::span<const Vertex> map) {
  CopyKey key;
  key.first.assign(map.begin(), map.end());
  std::sort(key.first.begin(), key.first.end());
  for (auto e : pattern.edges()) key.second.push_back(Edge{map[e.a], map[e.b]}.normalized());
  std::sort(key.second.begin(), key.second.end());
  return key;
}

std::vector<Vertex> root_images(const RootedPattern& p, std::span<const Vertex> map) {
  std::vector<Vertex> psi;
  psi.reserve(p.ell());
  for (auto r : p.root_vertices()) psi.push_back(map[r]);
  return psi;
}

Edge f_image(const RootedPattern& p, std::span<const Vertex> map) {
  const Edge f = *p.distinguished_edge();
  return Edge{map[f.a], map[f.b]}.normalized();
}

// Degree bookkeeping shared by the builder and the maximality scan.
class Ledger {
 public:
  Ledger(const BalancedFamily& fam, const FamilyConstraints& c, bool unlabeled)
      : fam_(fam), c_(c), unlabeled_(unlabeled) {
    for (const auto& m : fam.members) {
      members_.insert(m.map);
      if (unlabeled_) copies_.insert(copy_key(fam.pattern.pattern(), m.map));
    }
  }

  bool allows(std::span<const Vertex> map) const {
    const auto& p = fam_.pattern;
    auto it = fam_.edge_degree.find(f_image(p, map));
    const std::uint64_t ed = it == fam_.edge_degree.end() ? 0 : it->second;
    if (!within(ed + 1, c_.per_edge_cap)) return false;
    if (c_.per_pair_cap) {
      PairKey key{root_images(p, map), 0};
      for (Vertex x = 0; x < p.h(); ++x) {
        if (p.root_index(x)) continue;
        key.second = map[x];
        auto pit = fam_.pair_degree.find(key);
        const std::uint64_t pd = pit == fam_.pair_degree.end() ? 0 : pit->second;
        if (pd + 1 > *c_.per_pair_cap) return false;
      }
    }
    if (unlabeled_ && copies_.contains(copy_key(p.pattern(), map))) return false;
    return true;
  }

  bool is_member(std::span<const Vertex> map) const {
    return members_.contains(std::vector<Vertex>(map.begin(), map.end()));
  }

  void note(std::span<const Vertex> map) {
    members_.insert(std::vector<Vertex>(map.begin(), map.end()));
    if (unlabeled_) copies_.insert(copy_key(fam_.pattern.pattern(), map));
  }

 private:
  const BalancedFamily& fam_;
  const FamilyConstraints& c_;
  bool unlabeled_;
  std::set<std::vector<Vertex>> members_;
  std::set<CopyKey> copies_;
};

void add_member(BalancedFamily& fam, std::span<const Vertex> map) {
  const auto& p = fam.pattern;
  fam.members.push_back(Embedding{std::vector<Vertex>(map.begin(), map.end())});
  if (p.distinguished_edge()) ++fam.edge_degree[f_image(p, map)];
  auto psi = root_images(p, map);
  for (Vertex x = 0; x < p.h(); ++x) {
    if (!p.root_index(x)) ++fam.pair_degree[PairKey{psi, map[x]}];
  }
}

BalancedFamily build(LabeledGraph host, std::vector<std::uint8_t> colors, const RootedPattern& p,
                     const FamilyConstraints& c, const BuildOptions& options) {
  if (!p.distinguished_edge()) {
    fail(ErrorCode::PreconditionViolated, "the rooted pattern needs a distinguished edge");
  }
  if (p.h() > options.limits.max_pattern_vertices) {
    fail(ErrorCode::SizeExceeded, "pattern has " + std::to_string(p.h()) + " vertices; cap is " +
                                      std::to_string(options.limits.max_pattern_vertices));
  }
  if (host.vertex_count() > options.limits.max_host_vertices) {
    fail(ErrorCode::SizeExceeded, "host has " + std::to_string(host.vertex_count()) +
                                      " vertices; cap is " + std::to_string(options.limits.max_host_vertices));
  }
  BalancedFamily fam{std::move(host), std::move(colors), p, {}, {}, {}};
  auto edges = fam.host.edges();
  if (options.shuffle) {
    for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[options.shuffle->below(i)]);
  }
  const Edge f = *p.distinguished_edge();
  Ledger ledger(fam, c, options.unlabeled);
  Matcher matcher(fam.pattern_view(), VertexOrder::Lexicographic);
  const GraphView host_view = fam.host_view();
  auto full = [&] { return c.target_size && fam.members.size() >= *c.target_size; };
  for (auto e : edges) {
    if (full()) break;
    for (const Edge image : {e, e.reversed()}) {
      if (full()) break;
      if (c.per_edge_cap) {
        auto it = fam.edge_degree.find(e.normalized());
        if (it != fam.edge_degree.end() && it->second >= *c.per_edge_cap) break;
      }
      const std::pair<Vertex, Vertex> fixed[2] = {{f.a, image.a}, {f.b, image.b}};
      matcher.visit(host_view, fixed, [&](std::span<const Vertex> map) {
        if (ledger.allows(map)) {
          add_member(fam, map);
          ledger.note(map);
        }
        return !full();
      });
    }
  }
  return fam;
}

}  // namespace

FamilyConstraints derive_caps(std::uint64_t n, double p, const PatternStats& s, const Rational& gamma,
                              const Rational& epsilon, const Rational& eta, std::uint64_t host_edges) {
  s.validate();
  if (!(p > 0 && p <= 1)) fail(ErrorCode::PreconditionViolated, "p must lie in (0, 1]");
  if (gamma <= 0 || epsilon <= 0 || eta <= 0) {
    fail(ErrorCode::PreconditionViolated, "gamma, epsilon and eta must be positive");
  }
  FamilyConstraints c;
  c.gamma = gamma;
  c.epsilon = epsilon;
  const double ln_n = std::log(static_cast<double>(n));
  const double ln_p = std::log(p);
  c.per_pair_cap = floor_cap(std::log(to_double(gamma)) + static_cast<double>(s.e_h - s.e_f) * ln_p +
                             static_cast<double>(s.h - s.ell) * ln_n);
  const double ln_eta_prime = std::log(to_double(eta)) - 3.0 * static_cast<double>(s.e_h) * std::log(2.0);
  if (host_edges > 0) {
    c.per_edge_cap = floor_cap(std::log(to_double(1 + epsilon)) + ln_eta_prime +
                               static_cast<double>(s.e_h) * ln_p + static_cast<double>(s.h) * ln_n -
                               std::log(static_cast<double>(host_edges)));
  }
  c.derivation = {{"n", n},
                  {"p", p},
                  {"gamma", to_fraction_string(gamma)},
                  {"epsilon", to_fraction_string(epsilon)},
                  {"eta", to_fraction_string(eta)},
                  {"host_edges", host_edges},
                  {"h", s.h},
                  {"e_h", s.e_h},
                  {"ell", s.ell},
                  {"e_f", s.e_f}};
  return c;
}

FamilyConstraints derive_signed_caps(const Rational& a, const Rational& epsilon, const Rational& gamma) {
  if (a <= 0 || epsilon <= 0 || gamma <= 0) {
    fail(ErrorCode::PreconditionViolated, "A, epsilon and gamma must be positive");
  }
  FamilyConstraints c;
  c.gamma = gamma;
  c.epsilon = epsilon;
  c.per_pair_cap = floor_rational(gamma * a);
  c.per_edge_cap = floor_rational((1 + epsilon) * a);
  c.derivation = {{"A", to_fraction_string(a)},
                  {"epsilon", to_fraction_string(epsilon)},
                  {"gamma", to_fraction_string(gamma)}};
  return c;
}

BalancedFamily build_balanced_family(const LabeledGraph& g, const RootedPattern& p,
                                     const FamilyConstraints& c, const BuildOptions& options) {
  if (p.is_signed()) fail(ErrorCode::PreconditionViolated, "use the signed builder for signed patterns");
  return build(g, {}, p, c, options);
}

BalancedFamily build_signed_balanced_family(const SignedBipartiteGraph& g, const SignedBipartiteGraph& h,
                                            Edge f, const FamilyConstraints& c,
                                            const BuildOptions& options) {
  return build(g.as_labeled(), g.colors(), RootedPattern::signed_edge_rooted(h, f), c, options);
}

FamilyReport verify_family(const BalancedFamily& fam, const FamilyConstraints& c,
                           std::optional<double> target) {
  FamilyReport r;
  r.size = fam.members.size();
  const auto& p = fam.pattern;
  std::map<Edge, std::uint64_t> edge_degree;
  std::map<PairKey, std::uint64_t> pair_degree;
  std::set<std::vector<Vertex>> seen;
  const GraphView host = fam.host_view();
  const GraphView pattern = fam.pattern_view();
  for (const auto& m : fam.members) {
    if (m.map.size() != p.h() || !is_embedding(pattern, host, m.map)) {
      r.invalid_members.push_back(m);
      continue;
    }
    if (!seen.insert(m.map).second) r.duplicate_members = true;
    if (p.distinguished_edge()) ++edge_degree[f_image(p, m.map)];
    auto psi = root_images(p, m.map);
    for (Vertex x = 0; x < p.h(); ++x) {
      if (!p.root_index(x)) ++pair_degree[PairKey{psi, m.map[x]}];
    }
  }
  r.stats_consistent = r.invalid_members.empty() && edge_degree == fam.edge_degree &&
                       pair_degree == fam.pair_degree;
  for (const auto& [key, d] : pair_degree)
    if (!within(d, c.per_pair_cap)) r.pair_violations.emplace_back(key, d);
  for (const auto& [e, d] : edge_degree)
    if (!within(d, c.per_edge_cap)) r.edge_violations.emplace_back(e, d);
  r.target = target;
  if (target) r.target_met = static_cast<double>(r.size) >= *target;
  return r;
}

std::optional<Embedding> find_recruitable(const BalancedFamily& fam, const FamilyConstraints& c,
                                          bool unlabeled) {
  if (!fam.pattern.distinguished_edge()) {
    fail(ErrorCode::PreconditionViolated, "the rooted pattern needs a distinguished edge");
  }
  Ledger ledger(fam, c, unlabeled);
  std::optional<Embedding> found;
  enumerate_embeddings(fam.pattern_view(), fam.host_view(), [&](std::span<const Vertex> map) {
    if (ledger.is_member(map) || !ledger.allows(map)) return true;
    found = Embedding{std::vector<Vertex>(map.begin(), map.end())};
    return false;
  });
  return found;
}

std::map<std::vector<Vertex>, std::uint64_t> extension_degrees(const BalancedFamily& fam) {
  std::map<std::vector<Vertex>, std::uint64_t> out;
  for (const auto& m : fam.members) ++out[root_images(fam.pattern, m.map)];
  return out;
}

HeavyLightSplit heavy_light_split(const std::map<std::vector<Vertex>, std::uint64_t>& degrees,
                                  const Rational& threshold) {
  if (threshold < 0) fail(ErrorCode::PreconditionViolated, "threshold must be non-negative");
  HeavyLightSplit out;
  for (const auto& [psi, d] : degrees) {
    if (Rational(static_cast<unsigned long long>(d)) >= threshold) {
      out.heavy.push_back(psi);
      out.heavy_mass += d;
    } else {
      out.light.push_back(psi);
      out.light_mass += d;
    }
  }
  return out;
}

std::optional<GluedCopy> assemble_glued_copies(std::span<const BalancedFamily> families, Edge shared_edge) {
  if (families.empty()) fail(ErrorCode::PreconditionViolated, "no families to assemble");
  const Edge shared = shared_edge.normalized();
  std::vector<std::vector<const Embedding*>> candidates(families.size());
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (!families[i].pattern.distinguished_edge()) {
      fail(ErrorCode::PreconditionViolated, "every family needs a distinguished edge");
    }
    for (const auto& m : families[i].members)
      if (f_image(families[i].pattern, m.map) == shared) candidates[i].push_back(&m);
    if (candidates[i].empty()) {
      fail(ErrorCode::EmptyCandidateSet, "family " + std::to_string(i) + " has no member on edge (" +
                                             std::to_string(shared_edge.a) + "," +
                                             std::to_string(shared_edge.b) + ")");
    }
  }
  const std::size_t host_n = families[0].host.vertex_count();
  std::vector<bool> used(host_n, false);
  used[shared_edge.a] = used[shared_edge.b] = true;
  std::vector<const Embedding*> pick(families.size(), nullptr);
  auto dfs = [&](auto& self, std::size_t i) -> bool {
    if (i == families.size()) return true;
    const Edge f = *families[i].pattern.distinguished_edge();
    for (const Embedding* m : candidates[i]) {
      bool ok = true;
      for (Vertex x = 0; x < m->map.size() && ok; ++x) {
        if (x == f.a || x == f.b) continue;
        ok = m->map[x] < host_n && !used[m->map[x]];
      }
      if (!ok) continue;
      for (Vertex x = 0; x < m->map.size(); ++x)
        if (x != f.a && x != f.b) used[m->map[x]] = true;
      pick[i] = m;
      if (self(self, i + 1)) return true;
      for (Vertex x = 0; x < m->map.size(); ++x)
        if (x != f.a && x != f.b) used[m->map[x]] = false;
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;

  GluedCopy out;
  std::size_t total = 2;
  for (const auto& fam : families) total += fam.pattern.h() - 2;
  out.glued = LabeledGraph(total);
  out.map = {shared_edge.a, shared_edge.b};
  Vertex next = 2;
  for (std::size_t i = 0; i < families.size(); ++i) {
    const auto& pattern = families[i].pattern.pattern();
    const auto& map = pick[i]->map;
    std::vector<Vertex> image(pattern.vertex_count());
    for (Vertex x = 0; x < pattern.vertex_count(); ++x) {
      if (map[x] == shared_edge.a) {
        image[x] = 0;
      } else if (map[x] == shared_edge.b) {
        image[x] = 1;
      } else {
        image[x] = next++;
        out.map.push_back(map[x]);
      }
    }
    for (auto e : pattern.edges()) out.glued.add_edge(image[e.a], image[e.b]);
    out.members.push_back(*pick[i]);
  }
  return out;
}

RoughCountReport rough_count_check(const SignedBipartiteGraph& g, const SignedBipartiteGraph& h,
                                   std::uint64_t z, const Rational& k) {
  if (k < 4) fail(ErrorCode::PreconditionViolated, "K must be at least 4, got " + to_fraction_string(k));
  if (Rational(static_cast<unsigned long long>(g.edge_count())) < k * Rational(static_cast<unsigned long long>(z))) {
    fail(ErrorCode::PreconditionViolated, "e(G) = " + std::to_string(g.edge_count()) + " is below K*z = " +
                                              to_fraction_string(k * Rational(static_cast<unsigned long long>(z))));
  }
  RoughCountReport r;
  r.copies = count_copies(h, g);
  r.required = pow(k / 2, static_cast<std::uint32_t>(h.edge_count())) * Rational(static_cast<unsigned long long>(z));
  r.pass = Rational(static_cast<unsigned long long>(r.copies)) >= r.required;
  return r;
}

nlohmann::json to_json(const BalancedFamily& fam) {
  const auto& p = fam.pattern;
  nlohmann::json root_edges = nlohmann::json::array();
  for (auto e : p.root_edges()) root_edges.push_back({e.a, e.b});
  nlohmann::json members = nlohmann::json::array();
  for (const auto& m : fam.members) members.push_back(m.map);
  nlohmann::json pattern{{"graph", encode_graph6(p.pattern())}, {"roots", p.root_vertices()}, {"root_edges", root_edges}};
  if (p.distinguished_edge()) pattern["f"] = {p.distinguished_edge()->a, p.distinguished_edge()->b};
  if (p.is_signed()) pattern["plus"] = std::count(p.colors().begin(), p.colors().end(), 0);
  nlohmann::json j{{"host", encode_graph6(fam.host)}, {"pattern", pattern}, {"members", members}};
  if (!fam.host_colors.empty()) {
    j["host_plus"] = std::count(fam.host_colors.begin(), fam.host_colors.end(), 0);
  }
  return j;
}

BalancedFamily family_from_json(const nlohmann::json& j) {
  try {
    const auto& pj = j.at("pattern");
    LabeledGraph pattern = decode_graph6(pj.at("graph").get<std::string>());
    std::vector<std::uint8_t> pattern_colors;
    if (pj.contains("plus")) {
      const auto plus = pj.at("plus").get<std::size_t>();
      pattern_colors.assign(pattern.vertex_count(), 1);
      std::fill_n(pattern_colors.begin(), std::min(plus, pattern_colors.size()), 0);
    }
    std::vector<Edge> root_edges;
    for (const auto& e : pj.at("root_edges")) root_edges.push_back(Edge{e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
    std::optional<Edge> f;
    if (pj.contains("f")) f = Edge{pj.at("f").at(0).get<Vertex>(), pj.at("f").at(1).get<Vertex>()};
    RootedPattern p(std::move(pattern), pj.at("roots").get<std::vector<Vertex>>(), std::move(root_edges), f,
                    std::move(pattern_colors));
    LabeledGraph host = decode_graph6(j.at("host").get<std::string>());
    std::vector<std::uint8_t> host_colors;
    if (j.contains("host_plus")) {
      const auto plus = j.at("host_plus").get<std::size_t>();
      host_colors.assign(host.vertex_count(), 1);
      std::fill_n(host_colors.begin(), std::min(plus, host_colors.size()), 0);
    }
    BalancedFamily fam{std::move(host), std::move(host_colors), std::move(p), {}, {}, {}};
    for (const auto& m : j.at("members")) {
      auto map = m.get<std::vector<Vertex>>();
      if (map.size() != fam.pattern.h()) fail(ErrorCode::ParseError, "member has the wrong length");
      for (Vertex v : map)
        if (v >= fam.host.vertex_count()) fail(ErrorCode::ParseError, "member maps outside the host");
      add_member(fam, map);
    }
    return fam;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid family JSON: ") + e.what());
  }
}

}  // namespace edgeglue
