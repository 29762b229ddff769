#include "caygen/analyze.hpp"

#include "caygen/cayley.hpp"
#include "caygen/error.hpp"

namespace caygen {

Analysis analyze(const TranspositionSet& s, bool materialize) {
  Analysis a;
  a.n = s.degree();
  a.size = s.size();
  a.pairs = s.pairs();
  a.generating = !s.empty() && is_generating(s);
  a.in_theorem_range = a.n >= 5;
  if (!a.generating) {
    a.note = "T(S) is disconnected, so S does not generate S_" + std::to_string(a.n) + "; analysis stopped";
    return a;
  }
  if (materialize && a.n > kMaxAnalyzeMaterializeDegree) {
    throw CapacityError("--materialize is limited to n <= " + std::to_string(kMaxAnalyzeMaterializeDegree));
  }
  const auto t = to_graph(s);
  const auto aut_t = automorphism_group(t);
  a.t_aut_order = aut_t.order();
  a.t_aut_generators = format_generators(aut_t);
  a.t_edge_transitive = edge_orbits(t, aut_t).size() <= 1;
  a.cayley_edge_transitive = fast_is_edge_transitive(s).edge_transitive;
  if (!a.in_theorem_range) {
    a.note = "n < 5: the Cayley verdict is read off T(S) outside the range where the equivalence is asserted";
  }
  if (materialize) {
    const auto cg = build(s);
    CayleySummary c;
    c.vertices = cg.graph.num_vertices();
    c.edges = cg.graph.num_edges();
    c.bipartite = is_bipartite(cg.graph).has_value();
    AutomorphismOptions opts;
    opts.max_vertices = c.vertices;
    c.aut_order = automorphism_group(cg.graph, opts).order();
    const auto d = stabilizer_decomposition(cg);
    c.stabilizer_order = d.stabilizer.order();
    c.kernel_order = d.kernel.order();
    c.connectivity = vertex_connectivity(cg.graph);
    a.cayley = c;
  }
  return a;
}

nlohmann::json to_json(const Analysis& a) {
  nlohmann::json j;
  j["n"] = a.n;
  j["size"] = a.size;
  auto pairs = nlohmann::json::array();
  for (const auto& t : a.pairs) pairs.push_back({t.a, t.b});
  j["s"] = pairs;
  j["generating"] = a.generating;
  j["t_edge_transitive"] = a.t_edge_transitive ? nlohmann::json(*a.t_edge_transitive) : nlohmann::json();
  j["t_aut_order"] = a.t_aut_order ? nlohmann::json(*a.t_aut_order) : nlohmann::json();
  j["t_aut_generators"] = a.t_aut_generators;
  j["cayley_edge_transitive"] =
      a.cayley_edge_transitive ? nlohmann::json(*a.cayley_edge_transitive) : nlohmann::json();
  j["in_theorem_range"] = a.in_theorem_range;
  if (a.cayley) {
    const auto& c = *a.cayley;
    j["cayley"] = {{"vertices", c.vertices},       {"edges", c.edges},
                   {"bipartite", c.bipartite},     {"aut_order", c.aut_order},
                   {"stabilizer_order", c.stabilizer_order}, {"kernel_order", c.kernel_order},
                   {"connectivity", c.connectivity}};
  } else {
    j["cayley"] = nullptr;
  }
  j["note"] = a.note;
  return j;
}

}  // namespace caygen
