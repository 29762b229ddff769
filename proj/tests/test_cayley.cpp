#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "caygen/cayley.hpp"
#include "caygen/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using caygen::Family;
using caygen::Permutation;
using caygen::TranspositionSet;

namespace {

// The oracle lists vertices in lexicographic order, which is exactly the rank order.
void expect_matches_oracle(const TranspositionSet& s) {
  const auto cg = caygen::build(s);
  const auto ref = oracle::cayley(s.degree(), support::zero_based(s));
  ASSERT_EQ(cg.graph.num_vertices(), ref.graph.n);
  EXPECT_EQ(support::from_simple(cg.graph).adj, ref.graph.adj);
}

}  // namespace

TEST(Cayley, MatchesDefinition) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& s : caygen::enumerate_connected(n)) expect_matches_oracle(s);
}

TEST(Cayley, PathOnThreePointsIsAHexagon) {
  const auto cg = caygen::build(caygen::family(Family::path, 3));
  const oracle::Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  EXPECT_TRUE(oracle::isomorphic(support::from_simple(cg.graph), c6));
}

TEST(Cayley, SizesAndIdentityNeighbours) {
  const auto s = caygen::family(Family::path, 5);
  const auto cg = caygen::build(s);
  EXPECT_EQ(cg.graph.num_vertices(), 120);
  EXPECT_EQ(cg.graph.num_edges(), 240);
  EXPECT_EQ(cg.identity_vertex, 0);
  ASSERT_EQ(cg.generator_vertices.size(), s.size());
  for (std::size_t k = 0; k < s.size(); ++k)
    EXPECT_EQ(static_cast<std::uint64_t>(cg.generator_vertices[k]), caygen::rank(s.permutations()[k]));
  for (int v = 0; v < cg.graph.num_vertices(); ++v) {
    EXPECT_EQ(cg.graph.degree(v), 4);
    for (int w : caygen::neighbors(cg, v)) EXPECT_TRUE(cg.graph.has_edge(w, v));
  }
}

TEST(Cayley, NeighboursWithoutMaterializing) {
  const auto s = caygen::family(Family::star, 8);
  const std::uint64_t v = 12345;
  const auto nbrs = caygen::cayley_neighbors(s, v);
  ASSERT_EQ(nbrs.size(), 7u);
  const auto x = caygen::unrank(v, 8);
  for (std::uint64_t w : nbrs) {
    const auto back = caygen::cayley_neighbors(s, w);
    EXPECT_TRUE(std::find(back.begin(), back.end(), v) != back.end());
    EXPECT_NE(caygen::parity(caygen::unrank(w, 8)), caygen::parity(x));
  }
}

TEST(Cayley, CapacityBound) {
  EXPECT_THROW(caygen::build(caygen::family(Family::path, 8)), caygen::CapacityError);
  EXPECT_THROW(caygen::build(TranspositionSet(3, {})), caygen::InvalidArgument);
  EXPECT_EQ(caygen::max_cayley_vertices(), caygen::kDefaultMaxCayleyVertices);
  setenv("CAYGEN_MAX_VERTICES", "100", 1);
  EXPECT_EQ(caygen::max_cayley_vertices(), 100);
  EXPECT_THROW(caygen::build(caygen::family(Family::path, 5)), caygen::CapacityError);
  unsetenv("CAYGEN_MAX_VERTICES");
  EXPECT_NO_THROW(caygen::build(caygen::family(Family::path, 5)));
}

TEST(Cayley, RightMultiplicationsAreAutomorphisms) {
  std::mt19937 rng(1);
  for (int n = 2; n <= 5; ++n)
    for (const auto& s : caygen::enumerate_connected(n)) {
      const auto cg = caygen::build(s);
      std::vector<Permutation> samples;
      if (n <= 4) {
        for (const auto& p : oracle::all_perms(n)) samples.push_back(Permutation::from_images(p));
      } else {
        std::uniform_int_distribution<std::uint64_t> pick(0, caygen::factorial(n) - 1);
        for (int k = 0; k < 20; ++k) samples.push_back(caygen::unrank(pick(rng), n));
      }
      for (const auto& g : samples) {
        const auto r = caygen::right_multiplication(n, g);
        EXPECT_TRUE(caygen::is_automorphism(cg.graph, r));
        EXPECT_EQ(static_cast<std::uint64_t>(r(0)), caygen::rank(g));
      }
    }
}

TEST(Cayley, RightMultiplicationByAGeneratorSwapsTheArc) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& s : caygen::enumerate_connected(n)) {
      const auto cg = caygen::build(s);
      for (std::size_t k = 0; k < s.size(); ++k) {
        const auto r = caygen::right_multiplication(n, s.permutations()[k]);
        const int t = cg.generator_vertices[k];
        EXPECT_EQ(r(0), t);
        EXPECT_EQ(r(t), 0);
      }
    }
}

TEST(Cayley, ConjugationIsomorphism) {
  const auto s = caygen::family(Family::path, 5);
  // Relabel points by the 5-cycle i -> i+1.
  const auto c = Permutation::from_images({1, 2, 3, 4, 0});
  std::vector<caygen::Transposition> moved;
  for (const auto& t : s.pairs()) moved.push_back(caygen::Transposition::make(c(t.a - 1) + 1, c(t.b - 1) + 1));
  const TranspositionSet s2(5, moved);
  const caygen::VertexMapping f({1, 2, 3, 4, 0});
  const auto sigma = caygen::conjugation_isomorphism(s, s2, f);
  EXPECT_EQ(sigma(0), 0);
  EXPECT_TRUE(caygen::is_isomorphism(caygen::build(s).graph, caygen::build(s2).graph, sigma));
  for (int v = 0; v < 120; ++v) {
    const auto x = caygen::unrank(static_cast<std::uint64_t>(v), 5);
    EXPECT_EQ(static_cast<std::uint64_t>(sigma(v)), caygen::rank(caygen::conjugate(c, x)));
  }
  EXPECT_THROW(caygen::conjugation_isomorphism(s, s2, caygen::VertexMapping::identity(5)), caygen::PreconditionError);
}

TEST(AutSnS, SizesMatchConjugatorCount) {
  EXPECT_EQ(caygen::aut_sns(caygen::family(Family::path, 5)).size(), 2u);
  EXPECT_EQ(caygen::aut_sns(caygen::family(Family::star, 5)).size(), 24u);
  EXPECT_EQ(caygen::aut_sns(caygen::family(Family::complete, 5)).size(), 120u);
  EXPECT_EQ(caygen::aut_sns(caygen::family(Family::cycle, 5)).size(), 10u);
  EXPECT_THROW(caygen::aut_sns(support::tset(4, {{1, 2}, {3, 4}})), caygen::PreconditionError);
}

TEST(AutSnS, EntriesFixSAndActOnVertices) {
  const auto s = caygen::family(Family::cycle, 5);
  const auto cg = caygen::build(s);
  for (const auto& a : caygen::aut_sns(s)) {
    const auto on_s = a.on_generators(s);
    EXPECT_EQ(on_s.size(), 5);
    const auto on_v = a.on_vertices();
    EXPECT_EQ(on_v(0), 0);
    EXPECT_TRUE(caygen::is_automorphism(cg.graph, on_v));
    const auto restricted = caygen::restriction_to_generators(cg, on_v);
    ASSERT_TRUE(restricted.has_value());
    EXPECT_EQ(*restricted, on_s);
  }
}

TEST(Stabilizer, DecompositionCertifiesOnSmallClasses) {
  for (int n = 3; n <= 4; ++n)
    for (const auto& s : caygen::enumerate_connected(n)) {
      const auto d = caygen::stabilizer_decomposition(caygen::build(s));
      EXPECT_TRUE(d.certified()) << caygen::format_pairs(s);
      EXPECT_EQ(d.stabilizer.order(), d.kernel.order() * d.conjugations.size());
    }
}

TEST(Stabilizer, KnownOrdersAtFivePoints) {
  const auto star = caygen::stabilizer_decomposition(caygen::build(caygen::family(Family::star, 5)));
  EXPECT_EQ(star.stabilizer.order(), 24u);
  EXPECT_EQ(star.kernel.order(), 1u);
  const auto complete = caygen::stabilizer_decomposition(caygen::build(caygen::family(Family::complete, 5)));
  EXPECT_EQ(complete.stabilizer.order(), 240u);
  EXPECT_EQ(complete.kernel.order(), 2u);
  EXPECT_TRUE(complete.certified());
  EXPECT_THROW(caygen::stabilizer_decomposition(caygen::build(caygen::family(Family::path, 6))), caygen::Error);
}

// Rooted search against filtering the full automorphism group, and |Aut| = n! |G_e|.
TEST(Stabilizer, RootedSearchMatchesFilteredGroup) {
  for (const auto& s : caygen::enumerate_connected(4)) {
    const auto cg = caygen::build(s);
    const auto full = caygen::automorphism_group(cg.graph);
    const std::vector<int> root{0};
    const auto filtered = full.pointwise_stabilizer(root);
    const auto d = caygen::stabilizer_decomposition(cg);
    EXPECT_EQ(d.stabilizer.order(), filtered.order());
    for (const auto& g : d.stabilizer.generators()) EXPECT_TRUE(filtered.contains(g));
    EXPECT_EQ(full.order(), 24u * d.kernel.order() * caygen::automorphism_group(caygen::to_graph(s)).order());
  }
}

TEST(FastVerdict, NamedFamiliesAtFivePoints) {
  EXPECT_FALSE(caygen::fast_is_edge_transitive(caygen::family(Family::path, 5)).edge_transitive);
  EXPECT_TRUE(caygen::fast_is_edge_transitive(caygen::family(Family::star, 5)).edge_transitive);
  EXPECT_TRUE(caygen::fast_is_edge_transitive(caygen::family(Family::cycle, 5)).edge_transitive);
  EXPECT_TRUE(caygen::fast_is_edge_transitive(caygen::family(Family::complete, 5)).edge_transitive);
  EXPECT_TRUE(caygen::fast_is_edge_transitive(caygen::family(Family::star, 5)).in_theorem_range);
  EXPECT_FALSE(caygen::fast_is_edge_transitive(caygen::family(Family::star, 4)).in_theorem_range);
  // Works far past the materialization bound.
  EXPECT_TRUE(caygen::fast_is_edge_transitive(caygen::family(Family::cycle, 12)).edge_transitive);
}
