#include "caygen/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "caygen/cayley.hpp"
#include "caygen/error.hpp"

namespace caygen {

namespace {

constexpr std::pair<Claim, std::string_view> kClaimNames[] = {
    {Claim::part_a, "part_a"},
    {Claim::part_b, "part_b"},
    {Claim::whitney, "whitney"},
    {Claim::feng, "feng"},
    {Claim::restriction, "restriction"},
    {Claim::stabilizer, "stabilizer"},
    {Claim::arc_transitivity, "arc_transitivity"},
    {Claim::connectivity, "connectivity"},
    {Claim::bipartite, "bipartite"},
};

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_instance(Claim claim, const TranspositionSet& s, const VerifyOptions& options) {
  if (s.empty() || !is_generating(s)) {
    throw PreconditionError(std::string(claim_name(claim)) + ": transposition set does not generate S_" +
                            std::to_string(s.degree()));
  }
  const int limit = claim_max_degree(claim, options.extended_connectivity);
  if (s.degree() > limit) {
    throw CapacityError(std::string(claim_name(claim)) + ": brute-force side is limited to n <= " +
                        std::to_string(limit));
  }
}

VerificationReport start_report(Claim claim, const TranspositionSet& s) {
  VerificationReport r;
  r.claim = claim;
  r.n = s.degree();
  r.s = s;
  r.in_theorem_range = s.degree() >= claim_min_degree(claim);
  return r;
}

void finish(VerificationReport& r) { r.agree = r.fast == r.oracle; }

bool contains_k4(const SimpleGraph& g) {
  for (const Edge& e : g.edges()) {
    std::vector<int> common;
    const auto a = g.neighbors(e.u);
    const auto b = g.neighbors(e.v);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    for (std::size_t i = 0; i < common.size(); ++i) {
      for (std::size_t j = i + 1; j < common.size(); ++j) {
        if (g.has_edge(common[i], common[j])) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::string_view claim_name(Claim c) {
  for (const auto& [claim, name] : kClaimNames) {
    if (claim == c) return name;
  }
  return "?";
}

Claim parse_claim(std::string_view name) {
  for (const auto& [claim, claim_text] : kClaimNames) {
    if (claim_text == name) return claim;
  }
  throw InvalidArgument("unknown claim '" + std::string(name) + "'");
}

std::vector<Claim> all_claims() {
  std::vector<Claim> out;
  for (const auto& entry : kClaimNames) out.push_back(entry.first);
  return out;
}

int claim_min_degree(Claim c) {
  switch (c) {
    case Claim::part_a:
    case Claim::part_b:
    case Claim::whitney:
    case Claim::restriction:
    case Claim::stabilizer:
      return 5;
    case Claim::feng:
      return 3;
    case Claim::arc_transitivity:
    case Claim::connectivity:
    case Claim::bipartite:
      return 1;
  }
  return 5;
}

int claim_max_degree(Claim c, bool extended_connectivity) {
  switch (c) {
    case Claim::part_a:
    case Claim::part_b:
    case Claim::restriction:
    case Claim::stabilizer:
    case Claim::arc_transitivity:
      return 5;
    case Claim::connectivity:
      return extended_connectivity ? 5 : 4;
    case Claim::whitney:
    case Claim::feng:
    case Claim::bipartite:
      return kMaxEnumerationDegree;
  }
  return 5;
}

VerificationReport verify_part_a(const TranspositionSet& s, const TranspositionSet& s2) {
  require_instance(Claim::part_a, s, {});
  require_instance(Claim::part_a, s2, {});
  if (s.degree() != s2.degree()) throw PreconditionError("part_a: both sets must act on the same degree");
  auto r = start_report(Claim::part_a, s);
  r.s2 = s2;
  Stopwatch clock;

  const auto point_map = find_isomorphism(to_graph(s), to_graph(s2));
  bool sigma_verified = false;
  if (point_map) {
    try {
      const auto sigma = conjugation_isomorphism(s, s2, *point_map);
      // Independent scan over the materialized graphs.
      sigma_verified = is_isomorphism(build(s).graph, build(s2).graph, sigma);
    } catch (const InconsistencyError&) {
      sigma_verified = false;
    }
    r.detail["sigma_verified"] = sigma_verified;
  }
  r.fast = point_map.has_value() && sigma_verified;
  r.ms_fast = clock.lap_ms();

  const auto x = build(s);
  const auto y = build(s2);
  r.oracle = find_isomorphism(x.graph, y.graph, x.graph.num_vertices()).has_value();
  r.ms_oracle = clock.lap_ms();
  finish(r);
  return r;
}

VerificationReport verify_part_b(const TranspositionSet& s) {
  require_instance(Claim::part_b, s, {});
  auto r = start_report(Claim::part_b, s);
  Stopwatch clock;
  r.fast = fast_is_edge_transitive(s).edge_transitive;
  r.ms_fast = clock.lap_ms();

  const auto cg = build(s);
  AutomorphismOptions opts;
  opts.max_vertices = cg.graph.num_vertices();
  const auto group = automorphism_group(cg.graph, opts);
  const auto orbits = edge_orbits(cg.graph, group);
  r.oracle = orbits.size() == 1;
  r.ms_oracle = clock.lap_ms();
  r.detail["cayley_aut_order"] = group.order();
  r.detail["cayley_edge_orbits"] = orbits.size();
  finish(r);
  return r;
}

VerificationReport check_whitney(const TranspositionSet& s) {
  require_instance(Claim::whitney, s, {});
  auto r = start_report(Claim::whitney, s);
  const auto t = to_graph(s);
  Stopwatch clock;
  const auto aut_t = automorphism_group(t);
  const bool lifting_applies = t.num_vertices() >= 5;
  r.fast = {{"order", aut_t.order()}, {"lifts", lifting_applies ? nlohmann::json(true) : nlohmann::json()}};
  r.ms_fast = clock.lap_ms();

  const auto line = line_graph(t);
  const auto aut_line = automorphism_group(line.graph);
  nlohmann::json lifts;
  if (lifting_applies) {
    bool ok = true;
    for (const auto& a : aut_line.elements()) {
      try {
        if (induced_edge_action(t, whitney_lift(t, a)) != a) ok = false;
      } catch (const InconsistencyError&) {
        ok = false;
      }
    }
    for (const auto& h : aut_t.elements()) {
      try {
        if (whitney_lift(t, induced_edge_action(t, h)) != h) ok = false;
      } catch (const InconsistencyError&) {
        ok = false;
      }
    }
    lifts = ok;
  } else {
    r.detail["note"] = "lifting needs a connected graph on at least 5 vertices; only orders compared";
  }
  r.oracle = {{"order", aut_line.order()}, {"lifts", lifts}};
  r.ms_oracle = clock.lap_ms();
  finish(r);
  return r;
}

VerificationReport check_feng(const TranspositionSet& s) {
  require_instance(Claim::feng, s, {});
  auto r = start_report(Claim::feng, s);
  Stopwatch clock;
  const auto conjugations = aut_sns(s);
  r.fast = conjugations.size();
  r.ms_fast = clock.lap_ms();

  // Every automorphism of S_n is inner for n != 6; count conjugators fixing S directly.
  const int n = s.degree();
  const auto gens = s.permutations();
  const std::set<Permutation> gen_set(gens.begin(), gens.end());
  std::uint64_t fixing = 0;
  for (std::uint64_t k = 0; k < factorial(n); ++k) {
    const auto g = unrank(k, n);
    if (std::all_of(gens.begin(), gens.end(), [&](const Permutation& t) { return gen_set.count(conjugate(g, t)) > 0; })) {
      ++fixing;
    }
  }
  r.oracle = fixing;
  r.ms_oracle = clock.lap_ms();
  r.detail["aut_t_order"] = automorphism_group(to_graph(s)).order();
  finish(r);
  return r;
}

std::vector<VerificationReport> check_whitney_feng(const TranspositionSet& s) {
  return {check_whitney(s), check_feng(s)};
}

VerificationReport check_restriction_property(const TranspositionSet& s) {
  require_instance(Claim::restriction, s, {});
  auto r = start_report(Claim::restriction, s);
  Stopwatch clock;
  r.fast = true;
  r.ms_fast = clock.lap_ms();

  const auto cg = build(s);
  AutomorphismOptions opts;
  opts.fixed_vertices = {cg.identity_vertex};
  opts.max_vertices = cg.graph.num_vertices();
  const auto stabilizer = automorphism_group(cg.graph, opts);
  const auto line = line_graph(to_graph(s));
  bool all_ok = true;
  std::set<VertexMapping> restrictions;
  for (const auto& g : stabilizer.elements()) {
    const auto on_s = restriction_to_generators(cg, g);
    if (!on_s || !is_automorphism(line.graph, *on_s)) {
      all_ok = false;
      continue;
    }
    restrictions.insert(*on_s);
  }
  r.oracle = all_ok;
  r.ms_oracle = clock.lap_ms();
  r.detail["stabilizer_order"] = stabilizer.order();
  r.detail["distinct_restrictions"] = restrictions.size();
  r.detail["line_graph_aut_order"] = automorphism_group(line.graph).order();
  finish(r);
  return r;
}

VerificationReport check_stabilizer_decomposition(const TranspositionSet& s) {
  require_instance(Claim::stabilizer, s, {});
  auto r = start_report(Claim::stabilizer, s);
  Stopwatch clock;
  const auto aut_t = automorphism_group(to_graph(s));
  r.ms_fast = clock.lap_ms();

  const auto cg = build(s);
  const auto d = stabilizer_decomposition(cg);
  r.fast = {{"order", d.kernel.order() * aut_t.order()},
            {"trivial_intersection", true},
            {"kernel_normal", true},
            {"factors", true}};
  r.oracle = {{"order", d.stabilizer.order()},
              {"trivial_intersection", d.trivial_intersection},
              {"kernel_normal", d.kernel_normal},
              {"factors", d.factors}};
  r.ms_oracle = clock.lap_ms();
  r.detail["stabilizer_order"] = d.stabilizer.order();
  r.detail["kernel_order"] = d.kernel.order();
  r.detail["aut_sns_order"] = d.conjugations.size();
  r.detail["certified"] = d.certified();
  finish(r);
  return r;
}

VerificationReport check_arc_transitivity(const TranspositionSet& s) {
  require_instance(Claim::arc_transitivity, s, {});
  auto r = start_report(Claim::arc_transitivity, s);
  const auto cg = build(s);
  Stopwatch clock;
  AutomorphismOptions opts;
  opts.max_vertices = cg.graph.num_vertices();
  const auto group = automorphism_group(cg.graph, opts);
  const bool edge_transitive = edge_orbits(cg.graph, group).size() == 1;
  r.fast = {{"rt_swaps_arc", true}, {"arc_transitive", edge_transitive}};
  r.ms_fast = clock.lap_ms();

  bool swaps = true;
  const auto gens = s.permutations();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto rt = right_multiplication(cg.n, gens[i]);
    const int t = cg.generator_vertices[i];
    swaps = swaps && is_automorphism(cg.graph, rt) && rt(cg.identity_vertex) == t && rt(t) == cg.identity_vertex;
  }
  const auto arcs = arc_orbits(cg.graph, group);
  r.oracle = {{"rt_swaps_arc", swaps}, {"arc_transitive", arcs.size() == 1}};
  r.ms_oracle = clock.lap_ms();
  r.detail["edge_transitive"] = edge_transitive;
  r.detail["arc_orbits"] = arcs.size();
  finish(r);
  return r;
}

VerificationReport check_connectivity_corollary(const TranspositionSet& s, const VerifyOptions& options) {
  require_instance(Claim::connectivity, s, options);
  auto r = start_report(Claim::connectivity, s);
  Stopwatch clock;
  r.fast = {{"kappa", s.size()}, {"bipartite", true}, {"k4_free", true}};
  r.ms_fast = clock.lap_ms();

  const auto cg = build(s);
  r.oracle = {{"kappa", vertex_connectivity(cg.graph)},
              {"bipartite", is_bipartite(cg.graph).has_value()},
              {"k4_free", !contains_k4(cg.graph)}};
  r.ms_oracle = clock.lap_ms();
  r.detail["min_degree"] = cg.graph.min_degree();
  finish(r);
  return r;
}

VerificationReport check_bipartite(const TranspositionSet& s) {
  require_instance(Claim::bipartite, s, {});
  auto r = start_report(Claim::bipartite, s);
  Stopwatch clock;
  r.fast = true;
  r.ms_fast = clock.lap_ms();

  const auto cg = build(s);
  const auto coloring = is_bipartite(cg.graph);
  bool parity_classes = coloring.has_value();
  if (coloring) {
    // Vertex 0 is the identity (even); colour classes must be the parity classes.
    for (int v = 0; v < cg.graph.num_vertices() && parity_classes; ++v) {
      const int odd = parity(unrank(static_cast<std::uint64_t>(v), cg.n)) == Parity::odd ? 1 : 0;
      parity_classes = (*coloring)[static_cast<std::size_t>(v)] == odd;
    }
  }
  r.oracle = parity_classes;
  r.ms_oracle = clock.lap_ms();
  finish(r);
  return r;
}

VerificationReport run_claim(Claim claim, const TranspositionSet& s, const std::optional<TranspositionSet>& s2,
                             const VerifyOptions& options) {
  if (claim == Claim::part_a) {
    if (!s2) throw InvalidArgument("part_a needs a second transposition set");
    return verify_part_a(s, *s2);
  }
  if (s2) throw InvalidArgument(std::string(claim_name(claim)) + " takes a single transposition set");
  switch (claim) {
    case Claim::part_b:
      return verify_part_b(s);
    case Claim::whitney:
      return check_whitney(s);
    case Claim::feng:
      return check_feng(s);
    case Claim::restriction:
      return check_restriction_property(s);
    case Claim::stabilizer:
      return check_stabilizer_decomposition(s);
    case Claim::arc_transitivity:
      return check_arc_transitivity(s);
    case Claim::connectivity:
      return check_connectivity_corollary(s, options);
    case Claim::bipartite:
      return check_bipartite(s);
    case Claim::part_a:
      break;
  }
  throw InvalidArgument("unhandled claim");
}

std::vector<VerificationReport> sweep(Claim claim, int n, const VerifyOptions& options) {
  const int limit = claim_max_degree(claim, options.extended_connectivity);
  if (n > limit) {
    throw CapacityError(std::string(claim_name(claim)) + ": brute-force side is limited to n <= " +
                        std::to_string(limit));
  }
  const auto classes = enumerate_connected(n);
  std::vector<VerificationReport> out;
  if (claim == Claim::part_a) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = i; j < classes.size(); ++j) out.push_back(verify_part_a(classes[i], classes[j]));
    }
    return out;
  }
  for (const auto& s : classes) out.push_back(run_claim(claim, s, std::nullopt, options));
  return out;
}

VerificationReport replay(const VerificationReport& report, const VerifyOptions& options) {
  return run_claim(report.claim, report.s, report.s2, options);
}

nlohmann::json pairs_to_json(const TranspositionSet& s) {
  auto out = nlohmann::json::array();
  for (const auto& t : s.pairs()) out.push_back({t.a, t.b});
  return out;
}

TranspositionSet pairs_from_json(int n, const nlohmann::json& j) {
  std::vector<Transposition> pairs;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw InvalidArgument("each transposition must be a pair [i, j]");
    pairs.push_back(Transposition::make(p[0].get<int>(), p[1].get<int>()));
  }
  return TranspositionSet(n, std::move(pairs));
}

nlohmann::json to_json(const VerificationReport& r, bool include_timings) {
  nlohmann::json j;
  j["claim"] = claim_name(r.claim);
  j["n"] = r.n;
  j["s"] = pairs_to_json(r.s);
  if (r.s2) j["s2"] = pairs_to_json(*r.s2);
  j["fast"] = r.fast;
  j["oracle"] = r.oracle;
  j["agree"] = r.agree;
  j["in_theorem_range"] = r.in_theorem_range;
  j["detail"] = r.detail;
  j["ms_fast"] = include_timings && r.ms_fast ? nlohmann::json(*r.ms_fast) : nlohmann::json();
  j["ms_oracle"] = include_timings && r.ms_oracle ? nlohmann::json(*r.ms_oracle) : nlohmann::json();
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    VerificationReport r;
    r.claim = parse_claim(j.at("claim").get<std::string>());
    r.n = j.at("n").get<int>();
    r.s = pairs_from_json(r.n, j.at("s"));
    if (j.contains("s2") && !j["s2"].is_null()) r.s2 = pairs_from_json(r.n, j["s2"]);
    r.fast = j.at("fast");
    r.oracle = j.at("oracle");
    r.agree = j.at("agree").get<bool>();
    r.in_theorem_range = j.value("in_theorem_range", r.n >= claim_min_degree(r.claim));
    r.detail = j.value("detail", nlohmann::json::object());
    if (j.contains("ms_fast") && !j["ms_fast"].is_null()) r.ms_fast = j["ms_fast"].get<double>();
    if (j.contains("ms_oracle") && !j["ms_oracle"].is_null()) r.ms_oracle = j["ms_oracle"].get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace caygen
