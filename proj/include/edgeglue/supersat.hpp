#pragma once

#include "edgeglue/bounds.hpp"
#include "edgeglue/constructions.hpp"
#include "edgeglue/embedding.hpp"
#include "edgeglue/graph.hpp"
#include "edgeglue/rational.hpp"
#include "edgeglue/rooted_pattern.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace edgeglue {

// Caps on a balanced family; an absent cap is unbounded.
struct FamilyConstraints {
  Rational epsilon = 1;
  Rational gamma = 1;
  // Members agreeing on the roots and covering a given extra vertex.
  std::optional<std::uint64_t> per_pair_cap;
  // Members sending the distinguished edge onto a given host edge.
  std::optional<std::uint64_t> per_edge_cap;
  std::optional<std::uint64_t> target_size;
  // Inputs used when the caps were derived from formulas.
  nlohmann::json derivation;
};

// Per-edge caps from floor(gamma p^(e_h-e_f) n^(h-l)) and
// floor((1+eps) eta' p^e_h n^h / e(G)), eta' = eta / 2^(3 e_h).
FamilyConstraints derive_caps(std::uint64_t n, double p, const PatternStats& s, const Rational& gamma,
                              const Rational& epsilon, const Rational& eta, std::uint64_t host_edges);

// Signed caps floor(gamma A) and floor((1+eps) A).
FamilyConstraints derive_signed_caps(const Rational& a, const Rational& epsilon, const Rational& gamma);

// (root images in root order, extra host vertex)
using PairKey = std::pair<std::vector<Vertex>, Vertex>;

struct BalancedFamily {
  LabeledGraph host;
  std::vector<std::uint8_t> host_colors;
  RootedPattern pattern;
  std::vector<Embedding> members;
  std::map<Edge, std::uint64_t> edge_degree;
  std::map<PairKey, std::uint64_t> pair_degree;

  GraphView host_view() const { return GraphView(host, host_colors); }
  GraphView pattern_view() const { return GraphView(pattern.pattern(), pattern.colors()); }
};

struct BuildOptions {
  // Shuffles the order in which host edges receive the distinguished edge.
  SeededSampler* shuffle = nullptr;
  // Keep at most one embedding per unlabelled copy.
  bool unlabeled = false;
  EmbeddingLimits limits;
};

// Greedy recruitment: every embedding is offered once, grouped by the image
// of the distinguished edge, and kept when it breaks no cap. Degrees only
// grow, so the result is maximal unless target_size stopped it.
// Throws PreconditionViolated without a distinguished edge, SizeExceeded.
BalancedFamily build_balanced_family(const LabeledGraph& g, const RootedPattern& p,
                                     const FamilyConstraints& c, const BuildOptions& options = {});

// Sign-respecting version with f = (plus index, minus index) of h.
BalancedFamily build_signed_balanced_family(const SignedBipartiteGraph& g, const SignedBipartiteGraph& h,
                                            Edge f, const FamilyConstraints& c,
                                            const BuildOptions& options = {});

struct FamilyReport {
  std::size_t size = 0;
  std::vector<Embedding> invalid_members;
  std::vector<std::pair<PairKey, std::uint64_t>> pair_violations;
  std::vector<std::pair<Edge, std::uint64_t>> edge_violations;
  bool duplicate_members = false;
  bool stats_consistent = true;
  std::optional<double> target;
  bool target_met = true;

  bool ok() const {
    return invalid_members.empty() && pair_violations.empty() && edge_violations.empty() &&
           !duplicate_members && stats_consistent;
  }
};

// Recomputes every degree from the members. `target` is a size the family
// should reach (for example eta' p^e_h n^h).
FamilyReport verify_family(const BalancedFamily& fam, const FamilyConstraints& c,
                           std::optional<double> target = std::nullopt);

// Any embedding outside the family that could still be added, found by a
// full scan; none means the family is maximal.
std::optional<Embedding> find_recruitable(const BalancedFamily& fam, const FamilyConstraints& c,
                                          bool unlabeled = false);

// deg(psi) = number of members restricting to psi on the roots.
std::map<std::vector<Vertex>, std::uint64_t> extension_degrees(const BalancedFamily& fam);

struct HeavyLightSplit {
  std::vector<std::vector<Vertex>> heavy;
  std::vector<std::vector<Vertex>> light;
  std::uint64_t heavy_mass = 0;
  std::uint64_t light_mass = 0;
};

// heavy = degree >= threshold. Throws PreconditionViolated on a negative threshold.
HeavyLightSplit heavy_light_split(const std::map<std::vector<Vertex>, std::uint64_t>& degrees,
                                  const Rational& threshold);

struct GluedCopy {
  // The patterns glued along their distinguished edges; vertices 0 and 1 are
  // the shared edge, then each part's other vertices in order.
  LabeledGraph glued;
  std::vector<Vertex> map;
  std::vector<Embedding> members;
};

// Picks one member from each family so that every pick meets the union of
// the earlier ones exactly in the shared edge's endpoints (backtracking).
// Throws EmptyCandidateSet when some family has no member on shared_edge;
// returns none when the picks cannot be completed.
std::optional<GluedCopy> assemble_glued_copies(std::span<const BalancedFamily> families, Edge shared_edge);

struct RoughCountReport {
  std::uint64_t copies = 0;
  Rational required;
  bool pass = false;
};

// Compares sign-respecting copies of h in g with (k/2)^e(h) z. Needs k >= 4
// and e(g) >= k z (PreconditionViolated otherwise).
RoughCountReport rough_count_check(const SignedBipartiteGraph& g, const SignedBipartiteGraph& h,
                                   std::uint64_t z, const Rational& k);

// {host, host_plus, pattern: {graph, roots, root_edges, f}, members}
nlohmann::json to_json(const BalancedFamily& fam);
// Inverse of to_json; degrees are recomputed from the members. Throws ParseError.
BalancedFamily family_from_json(const nlohmann::json& j);

}  // namespace edgeglue
