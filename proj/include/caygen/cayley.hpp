#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "caygen/graph.hpp"
#include "caygen/perm.hpp"
#include "caygen/symmetry.hpp"
#include "caygen/tgraph.hpp"

namespace caygen {

/// Default bound on materialized Cayley graphs (7! vertices).
inline constexpr int kDefaultMaxCayleyVertices = 5040;

/// The materialization bound, overridable through CAYGEN_MAX_VERTICES.
int max_cayley_vertices();

/// Cay(S_n, S) with vertex id = lexicographic rank of the permutation.
///
/// Adjacency is left multiplication: h ~ s o h for s in S. Right
/// multiplications x -> x o g are then automorphisms.
struct CayleyGraph {
  int n = 0;
  TranspositionSet gens;
  SimpleGraph graph;
  int identity_vertex = 0;
  /// Vertex ids of the generators, i.e. the neighbours of the identity, in gens order.
  std::vector<int> generator_vertices;
};

/// Throws CapacityError when n! exceeds max_cayley_vertices(); use
/// cayley_neighbors() for larger degrees. Throws InvalidArgument for empty S.
CayleyGraph build(const TranspositionSet& s);

/// Ranks of s o unrank(v) for s in S, ascending. Works without materializing.
std::vector<std::uint64_t> cayley_neighbors(const TranspositionSet& s, std::uint64_t v);
std::vector<int> neighbors(const CayleyGraph& cg, int v);

/// x -> x o g on vertex ids.
VertexMapping right_multiplication(int n, const Permutation& g);

/// sigma: x -> f o x o f^-1 on vertex ids, where f: T(S) -> T(S2) is an
/// isomorphism of transposition graphs given on 0-based points.
/// Throws PreconditionError when f is not such an isomorphism, and
/// InconsistencyError if sigma fails its edge-preservation re-check.
VertexMapping conjugation_isomorphism(const TranspositionSet& s, const TranspositionSet& s2, const VertexMapping& f);

/// A group automorphism of S_n fixing S setwise, realized as conjugation.
class GroupAutomorphismOnS {
 public:
  explicit GroupAutomorphismOnS(Permutation conjugator) : conjugator_(std::move(conjugator)) {}

  const Permutation& conjugator() const noexcept { return conjugator_; }
  /// g o x o g^-1
  Permutation apply(const Permutation& x) const { return conjugate(conjugator_, x); }
  /// The same map on Cayley vertex ids.
  VertexMapping on_vertices() const;
  /// Induced permutation of S, indexed by position in s.pairs().
  VertexMapping on_generators(const TranspositionSet& s) const;

 private:
  Permutation conjugator_;
};

/// Aut(S_n, S): one conjugation per automorphism of T(S), in the order of
/// Aut(T(S)).elements(). Throws PreconditionError for non-generating S and
/// InconsistencyError if an entry fails to fix S or two entries act alike on S.
std::vector<GroupAutomorphismOnS> aut_sns(const TranspositionSet& s);

/// The permutation of S (positions in gens.pairs()) induced by a vertex map
/// fixing the identity, or nullopt when it does not map S onto S.
std::optional<VertexMapping> restriction_to_generators(const CayleyGraph& cg, const VertexMapping& g);

struct StabilizerDecomposition {
  PermutationGroup stabilizer;  // G_e
  PermutationGroup kernel;      // L_e: fixes e and each neighbour
  std::vector<GroupAutomorphismOnS> conjugations;  // Aut(S_n, S)
  bool order_identity = false;       // |G_e| == |L_e| * |Aut(S_n,S)|
  bool trivial_intersection = false;
  bool kernel_normal = false;
  bool factors = false;              // every element of G_e is l * c for l in L_e, c in Aut(S_n,S)
  bool certified() const { return order_identity && trivial_intersection && kernel_normal && factors; }
};

/// Largest degree stabilizer_decomposition() accepts.
inline constexpr int kMaxStabilizerDegree = 5;

StabilizerDecomposition stabilizer_decomposition(const CayleyGraph& cg);

struct EdgeTransitivityVerdict {
  bool edge_transitive = false;
  /// False for n < 5, where the equivalence is not asserted.
  bool in_theorem_range = false;
};

/// Cayley edge-transitivity decided on T(S) alone.
EdgeTransitivityVerdict fast_is_edge_transitive(const TranspositionSet& s);

}  // namespace caygen
