#include "cli.hpp"

#include "edgeglue/bounds.hpp"
#include "edgeglue/canonical.hpp"
#include "edgeglue/constructions.hpp"
#include "edgeglue/embedding.hpp"
#include "edgeglue/error.hpp"
#include "edgeglue/extremal.hpp"
#include "edgeglue/gluing.hpp"
#include "edgeglue/graph6.hpp"
#include "edgeglue/graph_io.hpp"
#include "edgeglue/rational.hpp"
#include "edgeglue/supersat.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace edgeglue::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string rat(const Rational& r) { return to_fraction_string(r); }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::uint64_t parse_uint(const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    if (text.empty() || text[0] == '-') throw std::invalid_argument("sign");
    const auto v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument("tail");
    return v;
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected a non-negative integer, got '" + text + "'");
  }
}

// An edge given as an index into the lexicographic edge list, or as "u,v".
Edge pick_edge(const LabeledGraph& g, const std::string& text, const std::string& flag) {
  if (text.find(',') != std::string::npos) {
    auto parts = split_list(text);
    if (parts.size() != 2) throw UsageError(flag + ": expected an index or u,v");
    return Edge{static_cast<Vertex>(parse_uint(parts[0], flag)), static_cast<Vertex>(parse_uint(parts[1], flag))};
  }
  const auto edges = g.edges();
  const auto i = parse_uint(text, flag);
  if (i >= edges.size()) {
    fail(ErrorCode::EdgeNotInGraph, flag + " index " + text + " but the graph has " +
                                        std::to_string(edges.size()) + " edges");
  }
  return edges[i];
}

std::vector<Vertex> parse_vertices(const std::string& text, const std::string& flag) {
  std::vector<Vertex> out;
  for (const auto& s : split_list(text)) out.push_back(static_cast<Vertex>(parse_uint(s, flag)));
  return out;
}

json read_json_arg(const std::string& text) {
  if (!text.empty() && (text[0] == '{' || text[0] == '[')) return json::parse(text);
  std::ifstream in(text);
  if (!in) fail(ErrorCode::IoError, "cannot open " + text);
  return json::parse(in);
}

std::string default_store(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("EDGEGLUE_STORE")) return env;
  return {};
}

json record_json(const ExtremalRecord& r) {
  json j = to_json(r);
  j.erase("runtime_ms");
  return j;
}

// Options describing a rooted pattern: --root-edge [--edge] or --roots [--f].
struct PatternOptions {
  std::string pattern;
  bool root_edge = false;
  std::string edge = "0";
  std::string roots;
  std::string f;

  void add(CLI::App* app, bool required = true) {
    auto* o = app->add_option("--pattern", pattern, "pattern graph (name or graph6)");
    if (required) o->required();
    app->add_flag("--root-edge", root_edge, "F = f = one edge of the pattern");
    app->add_option("--edge", edge, "root edge: index into the edge list or u,v");
    app->add_option("--roots", roots, "comma-separated root vertices; F is induced on them");
    app->add_option("--f", f, "distinguished edge for --roots (index or u,v)");
  }

  RootedPattern build() const {
    const LabeledGraph h = parse_graph_spec(pattern);
    if (root_edge == !roots.empty()) throw UsageError("give exactly one of --root-edge and --roots");
    if (root_edge) return RootedPattern::edge_rooted(h, pick_edge(h, edge, "--edge"));
    std::optional<Edge> fe;
    if (!f.empty()) fe = pick_edge(h, f, "--f");
    return RootedPattern::induced(h, parse_vertices(roots, "--roots"), fe);
  }
};

void cmd_glue(CLI::App& app, std::ostream& out) {
  const auto a = app.get_option("--a")->as<std::string>();
  const auto b = app.get_option("--b")->as<std::string>();
  const auto spec = app.get_option("--spec")->as<std::string>();
  const auto tree = app.get_option("--tree-of-cycles")->as<std::string>();
  const bool is_signed = app.get_option("--signed")->as<bool>();
  if (!spec.empty()) {
    const auto s = gluing_spec_from_json(read_json_arg(spec));
    if (s.mode == GluingMode::SignedUnique) {
      out << to_json(signed_glue(s)).dump() << '\n';
    } else {
      for (const auto& g : glue_family(s)) out << encode_graph6(g) << '\n';
    }
    return;
  }
  if (!tree.empty()) {
    out << encode_graph6(tree_of_cycles(tree_of_cycles_from_json(read_json_arg(tree)))) << '\n';
    return;
  }
  if (a.empty() || b.empty()) throw UsageError("glue needs --a and --b, --spec or --tree-of-cycles");
  const auto ea = app.get_option("--ea")->as<std::string>();
  const auto eb = app.get_option("--eb")->as<std::string>();
  if (is_signed) {
    GluingSpec s{GluingMode::SignedUnique, {}};
    for (auto [text, e, flag] : {std::tuple{a, ea, "--ea"}, std::tuple{b, eb, "--eb"}}) {
      auto g = parse_signed_graph_spec(text);
      s.parts.push_back(GluingPart{g, pick_edge(g.as_labeled(), e, flag)});
    }
    // Labelled edges are converted to (plus index, minus index).
    for (auto& part : s.parts) {
      const auto& g = std::get<SignedBipartiteGraph>(part.graph);
      Edge e = part.edge.normalized();
      part.edge = Edge{e.a, static_cast<Vertex>(e.b - g.plus_count())};
    }
    out << to_json(signed_glue(s)).dump() << '\n';
    return;
  }
  const auto ha = parse_graph_spec(a);
  const auto hb = parse_graph_spec(b);
  for (const auto& g : glue_along_edge(ha, pick_edge(ha, ea, "--ea"), hb, pick_edge(hb, eb, "--eb"))) {
    out << encode_graph6(g) << '\n';
  }
}

void cmd_count(CLI::App& app, std::ostream& out) {
  const auto pattern = app.get_option("--pattern")->as<std::string>();
  const auto host = app.get_option("--host")->as<std::string>();
  const auto threads = app.get_option("--threads")->as<unsigned>();
  json j;
  if (app.get_option("--signed")->as<bool>()) {
    const auto h = parse_signed_graph_spec(pattern);
    const auto g = parse_signed_graph_spec(host);
    j = {{"embeddings", count_embeddings(h, g, threads)},
         {"copies", count_copies(h, g, threads)},
         {"automorphisms", automorphism_count(h)}};
  } else {
    const auto h = parse_graph_spec(pattern);
    const auto g = parse_graph_spec(host);
    j = {{"embeddings", count_embeddings(h, g, threads)},
         {"copies", count_copies(h, g, threads)},
         {"automorphisms", automorphism_count(h)}};
  }
  out << j.dump() << '\n';
}

ExtremalCaps caps_from(CLI::App& app) {
  ExtremalCaps caps;
  if (auto* o = app.get_option_no_throw("--max-n"); o && o->count()) caps.turan_bnb_n = o->as<std::size_t>();
  if (auto* o = app.get_option_no_throw("--max-cells"); o && o->count()) {
    caps.zarankiewicz_bnb_cells = o->as<std::size_t>();
  }
  return caps;
}

template <typename Compute>
ExtremalRecord cached_search(const std::string& store_path, SearchMethod method, ExtremalKind kind,
                             const std::vector<CanonicalLabel>& forbidden,
                             const std::vector<std::uint64_t>& size, Compute compute) {
  if (method == SearchMethod::Cached) {
    if (store_path.empty()) {
      fail(ErrorCode::PreconditionViolated, "--method cached needs --store or EDGEGLUE_STORE");
    }
    RecordStore store(store_path);
    if (auto hit = store.find(kind, forbidden, size)) {
      hit->method = SearchMethod::Cached;
      return *hit;
    }
    auto r = compute(SearchMethod::BranchAndBound);
    store.store(r);
    return r;
  }
  auto r = compute(method);
  if (!store_path.empty()) RecordStore(store_path).store(r);
  return r;
}

void cmd_ex(CLI::App& app, std::ostream& out) {
  const auto n = app.get_option("--n")->as<std::size_t>();
  std::vector<LabeledGraph> forbidden;
  for (const auto& s : app.get_option("--forbid")->as<std::vector<std::string>>()) {
    forbidden.push_back(parse_graph_spec(s));
  }
  const auto method = parse_method(app.get_option("--method")->as<std::string>());
  const auto caps = caps_from(app);
  auto r = cached_search(default_store(app.get_option("--store")->as<std::string>()), method,
                         ExtremalKind::Turan, forbidden_key(forbidden), {n},
                         [&](SearchMethod m) { return exact_turan(n, forbidden, m, caps); });
  out << record_json(r).dump() << '\n';
}

void cmd_zex(CLI::App& app, std::ostream& out) {
  const auto m = app.get_option("--m")->as<std::size_t>();
  const auto n = app.get_option("--n")->as<std::size_t>();
  const auto h = parse_signed_graph_spec(app.get_option("--forbid")->as<std::string>());
  const auto method = parse_method(app.get_option("--method")->as<std::string>());
  const auto caps = caps_from(app);
  auto r = cached_search(default_store(app.get_option("--store")->as<std::string>()), method,
                         ExtremalKind::Zarankiewicz, forbidden_key(h), {m, n},
                         [&](SearchMethod sm) { return exact_zarankiewicz(m, n, h, sm, caps); });
  out << record_json(r).dump() << '\n';
}

void cmd_ratio(CLI::App& app, std::ostream& out) {
  const auto h = parse_signed_graph_spec(app.get_option("--pattern")->as<std::string>());
  std::vector<std::size_t> sizes;
  for (const auto& s : split_list(app.get_option("--sizes")->as<std::string>())) {
    sizes.push_back(parse_uint(s, "--sizes"));
  }
  const auto method = parse_method(app.get_option("--method")->as<std::string>());
  for (const auto& row : ratio_report(h, sizes, method, caps_from(app))) {
    json j{{"n", row.n}, {"skipped", row.skipped}};
    j["ex"] = row.ex ? json(*row.ex) : json(nullptr);
    j["z"] = row.z ? json(*row.z) : json(nullptr);
    j["ratio"] = row.ratio ? json(rat(*row.ratio)) : json(nullptr);
    if (!row.note.empty()) j["note"] = row.note;
    out << j.dump() << '\n';
  }
}

json stats_json(const PatternStats& s) {
  return {{"h", s.h}, {"e_h", s.e_h}, {"ell", s.ell}, {"e_f", s.e_f}};
}

void cmd_exponent(CLI::App& app, const PatternOptions& po, std::ostream& out) {
  const auto tree = app.get_option("--tree")->as<std::string>();
  if (!tree.empty()) {
    const auto t = parse_graph_spec(tree);
    out << json{{"tree", tree}, {"leaves", leaf_count(t)}, {"exponent", rat(tree_leaf_exponent(t))}}.dump()
        << '\n';
    return;
  }
  if (po.pattern.empty()) throw UsageError("exponent needs --pattern or --tree");
  const auto alpha = parse_rational(app.get_option("--alpha")->as<std::string>());
  const auto stats = PatternStats::of(po.build());
  const auto r = es_exponent_forest_report(alpha, stats);
  out << json{{"alpha", rat(alpha)},
              {"alpha_prime", rat(r.value)},
              {"branch", r.branch},
              {"first", rat(r.first)},
              {"second", rat(r.second)},
              {"pattern", stats_json(stats)}}
             .dump()
      << '\n';
}

void cmd_threshold(CLI::App& app, const PatternOptions& po, std::ostream& out) {
  const auto kind = app.get_option("--kind")->as<std::string>();
  auto rational_flag = [&](const char* flag) {
    auto* o = app.get_option(flag);
    if (!o->count()) throw UsageError(std::string(flag) + " is required for --kind " + kind);
    return parse_rational(o->as<std::string>());
  };
  auto uint_flag = [&](const char* flag) {
    auto* o = app.get_option(flag);
    if (!o->count()) throw UsageError(std::string(flag) + " is required for --kind " + kind);
    return parse_uint(o->as<std::string>(), flag);
  };
  json j{{"kind", kind}};
  if (kind == "cleaning") {
    const auto n = uint_flag("--n");
    const auto stats = PatternStats::of(po.build());
    const auto r = cleaning_threshold(n, stats, rational_flag("--gamma"), rational_flag("--alpha"),
                                      rational_flag("--c"));
    j["value"] = r.value;
    j["log_value"] = r.log_value;
    j["branch"] = r.branch;
    j["terms"] = json::array();
    for (int i = 0; i < 2; ++i) {
      j["terms"].push_back({{"coefficient", r.coefficient[i]},
                            {"n_exponent", rat(r.n_exponent[i])},
                            {"gamma_exponent", rat(r.gamma_exponent[i])}});
    }
    j["pattern"] = stats_json(stats);
  } else if (kind == "constant") {
    GoodnessParams params{rational_flag("--alpha"), rational_flag("--big-a"), rational_flag("--eta")};
    const auto stats = PatternStats::of(po.build());
    j["value"] = cleaning_constant(params, stats);
    j["pattern"] = stats_json(stats);
  } else if (kind == "beta") {
    const auto stats = PatternStats::of(po.build());
    j["value"] = rat(es_beta(rational_flag("--eta"), stats, rational_flag("--big-k"),
                             static_cast<std::uint32_t>(uint_flag("--copies"))));
    j["pattern"] = stats_json(stats);
  } else if (kind == "deletion") {
    const auto f = parse_graph_spec(po.pattern);
    j["exponent"] = rat(deletion_exponent(f));
    if (app.get_option("--n")->count()) j["p"] = deletion_probability(uint_flag("--n"), f);
  } else if (kind == "binom") {
    const auto r = binom_ratio_bounds(uint_flag("--n"), rational_flag("--q"), uint_flag("--s"));
    j["lower"] = rat(r.lower);
    j["exact"] = rat(r.exact);
    j["upper"] = rat(r.upper);
    j["holds"] = r.lower <= r.exact && r.exact <= r.upper;
  } else {
    throw UsageError("--kind must be cleaning, constant, beta, deletion or binom");
  }
  out << j.dump() << '\n';
}

std::uint64_t require_seed(CLI::App& app) {
  auto* o = app.get_option("--seed");
  if (!o->count()) throw UsageError("--seed is required");
  return parse_uint(o->as<std::string>(), "--seed");
}

void cmd_construct(CLI::App& app, std::ostream& out) {
  const auto seed = require_seed(app);
  const auto trials = parse_uint(app.get_option("--trials")->as<std::string>(), "--trials");
  SeededSampler base(seed);
  const auto split_host = app.get_option("--sign-split")->as<std::string>();
  if (!split_host.empty()) {
    const auto g = parse_graph_spec(split_host);
    for (std::uint64_t t = 0; t < trials; ++t) {
      auto s = base.split(t);
      auto r = random_sign_split(g, s);
      out << json{{"seed", seed}, {"trial", t}, {"algorithm", SeededSampler::algorithm_id},
                  {"plus", r.plus_vertices}, {"minus", r.minus_vertices},
                  {"graph", to_json(r.graph)}}
                 .dump()
          << '\n';
    }
    return;
  }
  auto* n_opt = app.get_option("--n");
  auto* f_opt = app.get_option("--forbid");
  if (!n_opt->count() || !f_opt->count()) throw UsageError("construct needs --n and --forbid (or --sign-split)");
  const auto n = n_opt->as<std::size_t>();
  const auto forbid = f_opt->as<std::string>();
  const auto f = parse_graph_spec(forbid);
  const auto p_text = app.get_option("--p")->as<std::string>();
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto s = base.split(t);
    json header{{"seed", seed}, {"trial", t}, {"algorithm", SeededSampler::algorithm_id}, {"n", n},
                {"forbidden", forbid}};
    DeletionResult r;
    if (p_text.empty()) {
      r = deletion_construction(n, f, s);
      header["p"] = r.p;
    } else {
      const auto p = parse_rational(p_text);
      r = delete_per_copy(sample_gnp(n, p, s), f);
      header["p"] = rat(p);
    }
    header["sampled_edges"] = r.sampled_edges;
    header["deletions"] = r.deletions;
    header["edges"] = r.graph.edge_count();
    out << header.dump() << '\n' << encode_graph6(r.graph) << '\n';
  }
}

json report_json(const FamilyReport& r) {
  json pv = json::array();
  for (const auto& [key, d] : r.pair_violations) pv.push_back({{"roots", key.first}, {"vertex", key.second}, {"degree", d}});
  json ev = json::array();
  for (const auto& [e, d] : r.edge_violations) ev.push_back({{"edge", {e.a, e.b}}, {"degree", d}});
  json inv = json::array();
  for (const auto& m : r.invalid_members) inv.push_back(m.map);
  json j{{"size", r.size},
         {"ok", r.ok()},
         {"invalid_members", inv},
         {"pair_violations", pv},
         {"edge_violations", ev},
         {"duplicate_members", r.duplicate_members},
         {"stats_consistent", r.stats_consistent}};
  if (r.target) {
    j["target"] = *r.target;
    j["target_met"] = r.target_met;
  }
  return j;
}

json constraints_json(const FamilyConstraints& c) {
  json j{{"epsilon", rat(c.epsilon)}, {"gamma", rat(c.gamma)}};
  j["per_pair_cap"] = c.per_pair_cap ? json(*c.per_pair_cap) : json(nullptr);
  j["per_edge_cap"] = c.per_edge_cap ? json(*c.per_edge_cap) : json(nullptr);
  j["target_size"] = c.target_size ? json(*c.target_size) : json(nullptr);
  if (!c.derivation.is_null()) j["derivation"] = c.derivation;
  return j;
}

FamilyConstraints constraints_from_json(const json& j) {
  FamilyConstraints c;
  c.epsilon = parse_rational(j.value("epsilon", std::string("1")));
  c.gamma = parse_rational(j.value("gamma", std::string("1")));
  if (j.contains("per_pair_cap") && !j["per_pair_cap"].is_null()) c.per_pair_cap = j["per_pair_cap"].get<std::uint64_t>();
  if (j.contains("per_edge_cap") && !j["per_edge_cap"].is_null()) c.per_edge_cap = j["per_edge_cap"].get<std::uint64_t>();
  if (j.contains("target_size") && !j["target_size"].is_null()) c.target_size = j["target_size"].get<std::uint64_t>();
  return c;
}

void apply_cap_flags(CLI::App& app, FamilyConstraints& c) {
  if (auto* o = app.get_option("--pair-cap"); o->count()) c.per_pair_cap = parse_uint(o->as<std::string>(), "--pair-cap");
  if (auto* o = app.get_option("--edge-cap"); o->count()) c.per_edge_cap = parse_uint(o->as<std::string>(), "--edge-cap");
}

void cmd_supersat(CLI::App& app, const PatternOptions& po, std::ostream& out) {
  const auto seed = require_seed(app);
  SeededSampler base(seed);
  SeededSampler host_stream = base.split(0);
  SeededSampler order_stream = base.split(1);
  const bool is_signed = app.get_option("--signed")->as<bool>();
  const auto host_text = app.get_option("--host")->as<std::string>();
  const auto gnp_n = app.get_option("--gnp-n");
  const auto p_text = app.get_option("--p")->as<std::string>();
  if (host_text.empty() == !gnp_n->count()) throw UsageError("give exactly one of --host and --gnp-n");
  if (gnp_n->count() && is_signed) throw UsageError("--gnp-n is for unsigned hosts");
  if (gnp_n->count() && p_text.empty()) throw UsageError("--gnp-n needs --p");

  FamilyConstraints c;
  const bool derive = app.get_option("--derive")->as<bool>();
  BuildOptions options;
  options.shuffle = &order_stream;
  options.unlabeled = app.get_option("--unlabeled")->as<bool>();

  BalancedFamily fam = [&] {
    if (is_signed) {
      const auto g = parse_signed_graph_spec(host_text);
      const auto h = parse_signed_graph_spec(po.pattern);
      const auto fe = po.f.empty() ? Edge{0, 0} : pick_edge(h.as_labeled(), po.f, "--f");
      if (derive) {
        auto* a = app.get_option("--big-a");
        if (!a->count()) throw UsageError("--derive with --signed needs --big-a");
        c = derive_signed_caps(parse_rational(a->as<std::string>()),
                               parse_rational(app.get_option("--epsilon")->as<std::string>()),
                               parse_rational(app.get_option("--gamma")->as<std::string>()));
      }
      apply_cap_flags(app, c);
      if (auto* o = app.get_option("--target"); o->count()) c.target_size = parse_uint(o->as<std::string>(), "--target");
      return build_signed_balanced_family(g, h, fe, c, options);
    }
    LabeledGraph g = host_text.empty()
                         ? sample_gnp(gnp_n->as<std::size_t>(), parse_rational(p_text), host_stream)
                         : parse_graph_spec(host_text);
    const auto p = po.build();
    if (derive) {
      if (p_text.empty()) throw UsageError("--derive needs --p");
      c = derive_caps(g.vertex_count(), to_double(parse_rational(p_text)), PatternStats::of(p),
                      parse_rational(app.get_option("--gamma")->as<std::string>()),
                      parse_rational(app.get_option("--epsilon")->as<std::string>()),
                      parse_rational(app.get_option("--eta")->as<std::string>()), g.edge_count());
    }
    apply_cap_flags(app, c);
    if (auto* o = app.get_option("--target"); o->count()) c.target_size = parse_uint(o->as<std::string>(), "--target");
    return build_balanced_family(g, p, c, options);
  }();

  const auto report = verify_family(fam, c);
  json j{{"seed", seed},
         {"algorithm", SeededSampler::algorithm_id},
         {"size", fam.members.size()},
         {"constraints", constraints_json(c)},
         {"report", report_json(report)}};
  if (!c.target_size) j["maximal"] = !find_recruitable(fam, c, options.unlabeled).has_value();
  const auto degrees = extension_degrees(fam);
  j["root_images"] = degrees.size();
  if (auto* o = app.get_option("--heavy"); o->count()) {
    const auto split = heavy_light_split(degrees, parse_rational(o->as<std::string>()));
    j["heavy"] = {{"threshold", rat(parse_rational(o->as<std::string>()))},
                  {"heavy", split.heavy.size()},
                  {"light", split.light.size()},
                  {"heavy_mass", split.heavy_mass},
                  {"light_mass", split.light_mass}};
  }
  if (app.get_option("--members")->as<bool>()) j["family"] = to_json(fam);
  out << j.dump() << '\n';
}

void verify_store(const std::string& path, std::ostream& out) {
  const auto records = RecordStore(path).load();
  json failures = json::array();
  for (const auto& r : records) {
    try {
      validate(r);
      const LabeledGraph w = decode_graph6(r.witness);
      if (w.edge_count() != r.value) fail(ErrorCode::InvariantViolation, "witness edge count differs from value");
      if (r.kind == ExtremalKind::Turan) {
        for (const auto& f : r.forbidden) {
          if (!is_free(w, decode_label(f))) fail(ErrorCode::InvariantViolation, "witness contains a forbidden graph");
        }
      } else {
        std::vector<std::uint8_t> colors(w.vertex_count(), 1);
        std::fill_n(colors.begin(), r.size.at(0), 0);
        const GraphView host(w, colors);
        for (const auto& f : r.forbidden) {
          const auto h = decode_signed_label(f);
          if (!is_free(host, h)) fail(ErrorCode::InvariantViolation, "witness contains the forbidden pattern");
        }
      }
    } catch (const Error& e) {
      failures.push_back({{"record", record_json(r)}, {"error", to_string(e.code())}, {"message", e.what()}});
    }
  }
  out << json{{"store", path}, {"records", records.size()}, {"ok", failures.empty()}, {"failures", failures}}.dump()
      << '\n';
  if (!failures.empty()) fail(ErrorCode::InvariantViolation, std::to_string(failures.size()) + " stored records failed");
}

void cmd_verify(CLI::App& app, std::ostream& out) {
  const auto family = app.get_option("--family")->as<std::string>();
  const auto store = app.get_option("--store")->as<std::string>();
  if (family.empty() == store.empty()) throw UsageError("give exactly one of --family and --store");
  if (!store.empty()) {
    verify_store(store, out);
    return;
  }
  const json doc = read_json_arg(family);
  const json& fj = doc.contains("family") ? doc.at("family") : doc;
  FamilyConstraints c = doc.contains("constraints") ? constraints_from_json(doc.at("constraints")) : FamilyConstraints{};
  apply_cap_flags(app, c);
  std::optional<double> target;
  if (auto* o = app.get_option("--target"); o->count()) target = o->as<double>();
  const auto fam = family_from_json(fj);
  const auto report = verify_family(fam, c, target);
  json j = report_json(report);
  j["maximal"] = !find_recruitable(fam, c, app.get_option("--unlabeled")->as<bool>()).has_value();
  out << j.dump() << '\n';
  if (!report.ok()) fail(ErrorCode::InvariantViolation, "family violates its constraints");
}

void cmd_cache(CLI::App& app, std::ostream& out) {
  const auto path = default_store(app.get_option("--store")->as<std::string>());
  if (path.empty()) throw UsageError("cache needs --store or EDGEGLUE_STORE");
  RecordQuery q;
  if (auto* o = app.get_option("--kind"); o->count()) q.kind = parse_kind(o->as<std::string>());
  if (auto* o = app.get_option("--size"); o->count()) {
    std::vector<std::uint64_t> size;
    for (const auto& s : split_list(o->as<std::string>())) size.push_back(parse_uint(s, "--size"));
    q.size = size;
  }
  for (const auto& r : load_records(path, q)) out << record_json(r).dump() << '\n';
}

void add_method(CLI::App* sub) {
  sub->add_option("--method", "oracle | branch-and-bound | cached")->default_val("branch-and-bound");
  sub->add_option("--store", "record store path (default $EDGEGLUE_STORE)")->default_val("");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge gluing, extremal numbers and balanced families", "edgeglue"};
  app.require_subcommand(1);

  auto* glue = app.add_subcommand("glue", "glue two graphs along an edge");
  glue->add_option("--a", "first graph")->default_val("");
  glue->add_option("--ea", "edge of --a (index or u,v)")->default_val("0");
  glue->add_option("--b", "second graph")->default_val("");
  glue->add_option("--eb", "edge of --b (index or u,v)")->default_val("0");
  glue->add_flag("--signed", "sign-preserving gluing of signed graphs");
  glue->add_option("--spec", "gluing spec JSON or file")->default_val("");
  glue->add_option("--tree-of-cycles", "tree-of-cycles JSON or file")->default_val("");

  auto* count = app.add_subcommand("count", "count embeddings and copies");
  count->add_option("--pattern", "pattern graph")->required();
  count->add_option("--host", "host graph")->required();
  count->add_flag("--signed", "read both graphs as signed bipartite");
  count->add_option("--threads", "worker threads")->default_val("1")->check(CLI::PositiveNumber);

  auto* ex = app.add_subcommand("ex", "exact Turan number");
  ex->add_option("--n", "vertices")->required()->check(CLI::NonNegativeNumber);
  ex->add_option("--forbid", "forbidden graph (repeatable)")->required()->expected(1, -1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  ex->add_option("--max-n", "branch-and-bound size cap");
  add_method(ex);

  auto* zex = app.add_subcommand("zex", "exact Zarankiewicz number");
  zex->add_option("--m", "+ side size")->required()->check(CLI::NonNegativeNumber);
  zex->add_option("--n", "- side size")->required()->check(CLI::NonNegativeNumber);
  zex->add_option("--forbid", "forbidden signed graph")->required();
  zex->add_option("--max-cells", "branch-and-bound m*n cap");
  add_method(zex);

  auto* ratio = app.add_subcommand("ratio", "ex(n, H) against z(n, n, H)");
  ratio->add_option("--pattern", "signed pattern")->required();
  ratio->add_option("--sizes", "comma-separated n values")->required();
  ratio->add_option("--max-n", "Turan size cap");
  ratio->add_option("--max-cells", "Zarankiewicz cell cap");
  ratio->add_option("--method", "oracle | branch-and-bound")->default_val("branch-and-bound");

  PatternOptions exp_pattern;
  auto* exponent = app.add_subcommand("exponent", "exponent of the glued family");
  exp_pattern.add(exponent, false);
  exponent->add_option("--alpha", "goodness exponent of H")->default_val("0");
  exponent->add_option("--tree", "tree for the leaf exponent 1 - 1/r")->default_val("");

  PatternOptions thr_pattern;
  auto* threshold = app.add_subcommand("threshold", "thresholds, constants and bounds");
  thr_pattern.add(threshold, false);
  threshold->add_option("--kind", "cleaning | constant | beta | deletion | binom")->default_val("cleaning");
  for (const char* flag : {"--n", "--gamma", "--alpha", "--c", "--big-a", "--eta", "--big-k", "--copies", "--q", "--s"}) {
    threshold->add_option(flag);
  }

  auto* construct = app.add_subcommand("construct", "seeded deletion construction");
  construct->add_option("--n", "vertices");
  construct->add_option("--forbid", "graph to destroy");
  construct->add_option("--p", "edge probability (default from the deletion exponent)")->default_val("");
  construct->add_option("--seed", "64-bit seed");
  construct->add_option("--trials", "independent runs")->default_val("1");
  construct->add_option("--sign-split", "randomly sign this graph instead")->default_val("");

  PatternOptions ss_pattern;
  auto* supersat = app.add_subcommand("supersat", "greedy balanced family");
  ss_pattern.add(supersat);
  supersat->add_option("--host", "host graph")->default_val("");
  supersat->add_option("--gnp-n", "sample a G(n, p) host");
  supersat->add_option("--p", "edge probability")->default_val("");
  supersat->add_option("--seed", "64-bit seed");
  supersat->add_flag("--signed", "signed host and pattern; --f is (plus, minus)");
  supersat->add_option("--pair-cap", "per (roots, vertex) cap");
  supersat->add_option("--edge-cap", "per host edge cap");
  supersat->add_option("--target", "stop at this size");
  supersat->add_flag("--derive", "derive caps from --gamma --epsilon --eta (or --big-a)");
  supersat->add_option("--gamma")->default_val("1");
  supersat->add_option("--epsilon")->default_val("1");
  supersat->add_option("--eta")->default_val("1");
  supersat->add_option("--big-a");
  supersat->add_option("--heavy", "heavy/light threshold on root-image degrees");
  supersat->add_flag("--unlabeled", "one embedding per copy");
  supersat->add_flag("--members", "include the family");

  auto* verify = app.add_subcommand("verify", "check a family or a record store");
  verify->add_option("--family", "family JSON (supersat --members output) or file")->default_val("");
  verify->add_option("--store", "record store to check")->default_val("");
  verify->add_option("--pair-cap");
  verify->add_option("--edge-cap");
  verify->add_option("--target");
  verify->add_flag("--unlabeled");

  auto* cache = app.add_subcommand("cache", "list stored records");
  cache->add_option("--store", "record store path (default $EDGEGLUE_STORE)")->default_val("");
  cache->add_option("--kind", "turan | zarankiewicz");
  cache->add_option("--size", "comma-separated size");

  if (!args.empty() && !args[0].starts_with("-") && app.get_subcommand_no_throw(args[0]) == nullptr) {
    err << "usage error: unknown subcommand '" << args[0] << "'\n" << app.help();
    return 2;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    if (auto subs = app.get_subcommands(); !subs.empty()) {
      err << subs.front()->help();
    } else {
      err << app.help();
    }
    return 2;
  }

  try {
    if (glue->parsed()) cmd_glue(*glue, out);
    else if (count->parsed()) cmd_count(*count, out);
    else if (ex->parsed()) cmd_ex(*ex, out);
    else if (zex->parsed()) cmd_zex(*zex, out);
    else if (ratio->parsed()) cmd_ratio(*ratio, out);
    else if (exponent->parsed()) cmd_exponent(*exponent, exp_pattern, out);
    else if (threshold->parsed()) cmd_threshold(*threshold, thr_pattern, out);
    else if (construct->parsed()) cmd_construct(*construct, out);
    else if (supersat->parsed()) cmd_supersat(*supersat, ss_pattern, out);
    else if (verify->parsed()) cmd_verify(*verify, out);
    else if (cache->parsed()) cmd_cache(*cache, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << json{{"error", to_string(e.code())}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const json::exception& e) {
    err << json{{"error", "ParseError"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace edgeglue::cli
