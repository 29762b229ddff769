#include "caygen/cayley.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

#include "caygen/error.hpp"

namespace caygen {

int max_cayley_vertices() {
  if (const char* env = std::getenv("CAYGEN_MAX_VERTICES")) {
    int value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
  }
  return kDefaultMaxCayleyVertices;
}

namespace {

Permutation as_permutation(const VertexMapping& f) { return Permutation::from_images({f.images().begin(), f.images().end()}); }

void require_materializable(int n) {
  const int limit = max_cayley_vertices();
  if (n > 12 || factorial(n) > static_cast<std::uint64_t>(limit)) {
    throw CapacityError("Cay(S_" + std::to_string(n) + ", S) has " + (n > 20 ? std::string("more than 2^64")
                                                                         : std::to_string(factorial(n))) +
                        " vertices, above the materialization limit of " + std::to_string(limit) +
                        "; use cayley_neighbors() for on-demand adjacency or raise CAYGEN_MAX_VERTICES");
  }
}

}  // namespace

CayleyGraph build(const TranspositionSet& s) {
  if (s.empty()) throw InvalidArgument("Cayley graph needs a nonempty generating set");
  const int n = s.degree();
  require_materializable(n);
  const auto count = static_cast<int>(factorial(n));
  const auto gens = s.permutations();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(count) * gens.size() / 2);
  for (int v = 0; v < count; ++v) {
    const Permutation p = unrank(static_cast<std::uint64_t>(v), n);
    for (const auto& t : gens) {
      const auto w = static_cast<int>(rank(compose(t, p)));
      if (v < w) edges.push_back({v, w});
    }
  }
  CayleyGraph cg;
  cg.n = n;
  cg.gens = s;
  cg.graph = SimpleGraph(count, std::move(edges));
  cg.identity_vertex = 0;
  for (const auto& t : gens) cg.generator_vertices.push_back(static_cast<int>(rank(t)));
  return cg;
}

std::vector<std::uint64_t> cayley_neighbors(const TranspositionSet& s, std::uint64_t v) {
  const Permutation p = unrank(v, s.degree());
  std::vector<std::uint64_t> out;
  for (const auto& t : s.permutations()) out.push_back(rank(compose(t, p)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> neighbors(const CayleyGraph& cg, int v) {
  if (v < 0 || v >= cg.graph.num_vertices()) throw InvalidArgument("vertex id out of range");
  const auto nbrs = cg.graph.neighbors(v);
  return {nbrs.begin(), nbrs.end()};
}

VertexMapping right_multiplication(int n, const Permutation& g) {
  const auto count = static_cast<int>(factorial(n));
  std::vector<int> images(static_cast<std::size_t>(count));
  for (int v = 0; v < count; ++v) {
    images[static_cast<std::size_t>(v)] = static_cast<int>(rank(compose(unrank(static_cast<std::uint64_t>(v), n), g)));
  }
  return VertexMapping(std::move(images));
}

namespace {

VertexMapping conjugation_on_vertices(const Permutation& f) {
  const int n = f.degree();
  require_materializable(n);
  const auto count = static_cast<int>(factorial(n));
  const Permutation f_inv = inverse(f);
  std::vector<int> images(static_cast<std::size_t>(count));
  for (int v = 0; v < count; ++v) {
    const Permutation x = unrank(static_cast<std::uint64_t>(v), n);
    images[static_cast<std::size_t>(v)] = static_cast<int>(rank(compose(compose(f, x), f_inv)));
  }
  return VertexMapping(std::move(images));
}

// Edge preservation of sigma checked through on-demand adjacency only.
bool preserves_cayley_edges(const TranspositionSet& s, const TranspositionSet& s2, const VertexMapping& sigma) {
  const auto n = s.degree();
  const auto count = factorial(n);
  for (std::uint64_t v = 0; v < count; ++v) {
    const auto image_nbrs = cayley_neighbors(s2, static_cast<std::uint64_t>(sigma(static_cast<int>(v))));
    for (const auto w : cayley_neighbors(s, v)) {
      const auto img = static_cast<std::uint64_t>(sigma(static_cast<int>(w)));
      if (!std::binary_search(image_nbrs.begin(), image_nbrs.end(), img)) return false;
    }
  }
  return true;
}

}  // namespace

VertexMapping conjugation_isomorphism(const TranspositionSet& s, const TranspositionSet& s2, const VertexMapping& f) {
  if (s.degree() != s2.degree() || f.size() != s.degree()) {
    throw PreconditionError("conjugation isomorphism needs equal degrees and a point map of that size");
  }
  if (!is_isomorphism(to_graph(s), to_graph(s2), f)) {
    throw PreconditionError("point map is not an isomorphism of the transposition graphs");
  }
  VertexMapping sigma = conjugation_on_vertices(as_permutation(f));
  if (sigma(0) != 0 || !preserves_cayley_edges(s, s2, sigma)) {
    throw InconsistencyError("conjugation map failed the Cayley edge-preservation check");
  }
  return sigma;
}

VertexMapping GroupAutomorphismOnS::on_vertices() const { return conjugation_on_vertices(conjugator_); }

VertexMapping GroupAutomorphismOnS::on_generators(const TranspositionSet& s) const {
  const auto& pairs = s.pairs();
  std::vector<int> images;
  images.reserve(pairs.size());
  for (const auto& t : pairs) {
    const auto img = Transposition::make(conjugator_(t.a - 1) + 1, conjugator_(t.b - 1) + 1);
    const auto it = std::lower_bound(pairs.begin(), pairs.end(), img);
    if (it == pairs.end() || *it != img) throw InvalidArgument("conjugation does not fix the generating set");
    images.push_back(static_cast<int>(it - pairs.begin()));
  }
  return VertexMapping(std::move(images));
}

std::vector<GroupAutomorphismOnS> aut_sns(const TranspositionSet& s) {
  if (!is_generating(s)) throw PreconditionError("transposition set does not generate S_n");
  const auto tgraph = to_graph(s);
  const auto group = automorphism_group(tgraph);
  std::vector<GroupAutomorphismOnS> out;
  std::set<VertexMapping> actions;
  const auto gens = s.permutations();
  const std::set<Permutation> gen_set(gens.begin(), gens.end());
  for (const auto& h : group.elements()) {
    GroupAutomorphismOnS c(as_permutation(h));
    for (const auto& t : gens) {
      if (!gen_set.count(c.apply(t))) throw InconsistencyError("conjugation by a graph automorphism moved S");
    }
    if (!actions.insert(c.on_generators(s)).second) {
      throw InconsistencyError("two conjugations act identically on S");
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<VertexMapping> restriction_to_generators(const CayleyGraph& cg, const VertexMapping& g) {
  std::map<int, int> position;
  for (std::size_t i = 0; i < cg.generator_vertices.size(); ++i) {
    position.emplace(cg.generator_vertices[i], static_cast<int>(i));
  }
  std::vector<int> images;
  for (int v : cg.generator_vertices) {
    const auto it = position.find(g(v));
    if (it == position.end()) return std::nullopt;
    images.push_back(it->second);
  }
  try {
    return VertexMapping(std::move(images));
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
}

StabilizerDecomposition stabilizer_decomposition(const CayleyGraph& cg) {
  if (cg.n > kMaxStabilizerDegree) {
    throw CapacityError("stabilizer decomposition is limited to n <= " + std::to_string(kMaxStabilizerDegree));
  }
  AutomorphismOptions opts;
  opts.fixed_vertices = {cg.identity_vertex};
  opts.max_vertices = cg.graph.num_vertices();
  PermutationGroup stabilizer = automorphism_group(cg.graph, opts);
  std::vector<int> ball = cg.generator_vertices;
  ball.push_back(cg.identity_vertex);
  PermutationGroup kernel = stabilizer.pointwise_stabilizer(ball);
  StabilizerDecomposition out{stabilizer, kernel, aut_sns(cg.gens)};

  out.order_identity = stabilizer.order() == kernel.order() * out.conjugations.size();

  // Restriction to S identifies each conjugation; the identity is the only one acting trivially.
  std::map<VertexMapping, VertexMapping> conj_by_action;
  int trivial_on_s = 0;
  bool inside_stabilizer = true;
  for (const auto& c : out.conjugations) {
    const auto on_s = c.on_generators(cg.gens);
    if (on_s.is_identity()) ++trivial_on_s;
    auto as_vertices = c.on_vertices();
    if (!stabilizer.contains(as_vertices)) inside_stabilizer = false;
    conj_by_action.emplace(on_s, std::move(as_vertices));
  }
  out.trivial_intersection = trivial_on_s == 1 && inside_stabilizer;

  out.kernel_normal = true;
  for (const auto& g : stabilizer.generators()) {
    const auto g_inv = inverse(g);
    for (const auto& l : kernel.elements()) {
      if (!kernel.contains(compose(compose(g, l), g_inv))) {
        out.kernel_normal = false;
        break;
      }
    }
    if (!out.kernel_normal) break;
  }

  out.factors = inside_stabilizer;
  for (const auto& g : stabilizer.elements()) {
    if (!out.factors) break;
    const auto on_s = restriction_to_generators(cg, g);
    const auto match = on_s ? conj_by_action.find(*on_s) : conj_by_action.end();
    out.factors = match != conj_by_action.end() && kernel.contains(compose(g, inverse(match->second)));
  }
  return out;
}

EdgeTransitivityVerdict fast_is_edge_transitive(const TranspositionSet& s) {
  if (!is_generating(s)) throw PreconditionError("transposition set does not generate S_n");
  return {is_edge_transitive(to_graph(s)), s.degree() >= 5};
}

}  // namespace caygen
