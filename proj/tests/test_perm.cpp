#include <gtest/gtest.h>

#include <set>

#include "caygen/error.hpp"
#include "caygen/perm.hpp"
#include "oracles.hpp"
#include "support.hpp"

using caygen::Permutation;

namespace {

std::vector<Permutation> all_of(int n) {
  std::vector<Permutation> out;
  for (const auto& p : oracle::all_perms(n)) out.push_back(Permutation::from_images(p));
  return out;
}

}  // namespace

TEST(Permutation, IdentityAndImages) {
  Permutation e(4);
  EXPECT_TRUE(e.is_identity());
  EXPECT_EQ(e.degree(), 4);
  const auto p = Permutation::from_images({1, 2, 0});
  EXPECT_FALSE(p.is_identity());
  EXPECT_EQ(p(0), 1);
  EXPECT_EQ(p(2), 0);
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), caygen::InvalidArgument);
  EXPECT_THROW(Permutation::from_images({0, 3, 1}), caygen::InvalidArgument);
  EXPECT_THROW(Permutation(0), caygen::InvalidArgument);
  EXPECT_THROW(Permutation::transposition(3, 2, 2), caygen::InvalidArgument);
  EXPECT_THROW(Permutation::transposition(3, 1, 4), caygen::InvalidArgument);
}

// Multiplication table of S_3 against direct image composition.
TEST(Permutation, ComposeMatchesOracleOnS3) {
  for (const auto& p : oracle::all_perms(3))
    for (const auto& q : oracle::all_perms(3)) {
      const auto pq = caygen::compose(Permutation::from_images(p), Permutation::from_images(q));
      EXPECT_EQ(support::to_perm(pq), oracle::mul(p, q));
    }
}

TEST(Permutation, ComposeAppliesRightOperandFirst) {
  // (1 2) then (2 3): 1 -> 2 -> 3
  const auto a = Permutation::transposition(3, 1, 2);
  const auto b = Permutation::transposition(3, 2, 3);
  EXPECT_EQ(caygen::compose(b, a)(0), 2);
  EXPECT_THROW(caygen::compose(Permutation(3), Permutation(4)), caygen::InvalidArgument);
}

TEST(Permutation, GroupAxiomsOnS4) {
  const auto elems = all_of(4);
  const Permutation e(4);
  std::set<Permutation> closed(elems.begin(), elems.end());
  for (const auto& p : elems) {
    EXPECT_EQ(caygen::compose(p, e), p);
    EXPECT_EQ(caygen::compose(e, p), p);
    EXPECT_TRUE(caygen::compose(p, caygen::inverse(p)).is_identity());
    EXPECT_TRUE(caygen::compose(caygen::inverse(p), p).is_identity());
    for (const auto& q : elems) {
      EXPECT_TRUE(closed.count(caygen::compose(p, q)));
      for (const auto& r : elems)
        EXPECT_EQ(caygen::compose(caygen::compose(p, q), r), caygen::compose(p, caygen::compose(q, r)));
    }
  }
}

// g (a b) g^-1 = (g(a) g(b))
TEST(Permutation, ConjugationRelabelsTranspositions) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : all_of(n))
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
          const auto lhs = caygen::conjugate(g, Permutation::transposition(n, a, b));
          EXPECT_EQ(lhs, Permutation::transposition(n, g(a - 1) + 1, g(b - 1) + 1));
        }
}

TEST(Permutation, ParityMatchesInversionCount) {
  int even = 0;
  for (const auto& p : all_of(5)) {
    const bool is_even = caygen::parity(p) == caygen::Parity::even;
    EXPECT_EQ(is_even, oracle::is_even(support::to_perm(p)));
    even += is_even;
  }
  EXPECT_EQ(even, 60);
}

TEST(Permutation, ParityIsAHomomorphism) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : all_of(n))
      for (const auto& q : all_of(n)) {
        const bool same = caygen::parity(p) == caygen::parity(q);
        EXPECT_EQ(caygen::parity(caygen::compose(p, q)) == caygen::Parity::even, same);
      }
}

TEST(Permutation, Factorial) {
  EXPECT_EQ(caygen::factorial(0), 1u);
  EXPECT_EQ(caygen::factorial(5), 120u);
  EXPECT_EQ(caygen::factorial(20), 2432902008176640000ull);
  EXPECT_THROW(caygen::factorial(21), caygen::CapacityError);
}

// Rank is the position in lexicographic order.
TEST(Permutation, RankUnrankRoundTripOnS7) {
  const auto perms = oracle::all_perms(7);
  ASSERT_EQ(perms.size(), 5040u);
  for (std::size_t r = 0; r < perms.size(); ++r) {
    const auto p = Permutation::from_images(perms[r]);
    ASSERT_EQ(caygen::rank(p), r);
    ASSERT_EQ(caygen::unrank(r, 7), p);
  }
  EXPECT_THROW(caygen::unrank(5040, 7), caygen::InvalidArgument);
}

TEST(Permutation, ParseAndFormat) {
  const auto p = caygen::parse_permutation("3 1 2");
  EXPECT_EQ(caygen::format_one_line(p), "3 1 2");
  EXPECT_EQ(caygen::format_cycles(p), "(1 3 2)");
  EXPECT_EQ(caygen::parse_permutation("(1 3 2)", 3), p);
  EXPECT_EQ(caygen::parse_permutation("(1 2)(3 4)", 5), Permutation::from_images({1, 0, 3, 2, 4}));
  EXPECT_EQ(caygen::format_cycles(Permutation(4)), "()");
  EXPECT_TRUE(caygen::parse_permutation("()", 4).is_identity());
  for (const auto& q : all_of(4)) {
    EXPECT_EQ(caygen::parse_permutation(caygen::format_cycles(q), 4), q);
    EXPECT_EQ(caygen::parse_permutation(caygen::format_one_line(q)), q);
  }
}

TEST(Permutation, ParseRejectsMalformedText) {
  EXPECT_THROW(caygen::parse_permutation("1 1 2"), caygen::Error);
  EXPECT_THROW(caygen::parse_permutation("(1 2", 3), caygen::Error);
  EXPECT_THROW(caygen::parse_permutation("(1 2)(2 3)", 3), caygen::Error);
  EXPECT_THROW(caygen::parse_permutation("(1 4)", 3), caygen::Error);
  EXPECT_THROW(caygen::parse_permutation("2 1", 3), caygen::Error);
  EXPECT_THROW(caygen::parse_permutation("a b"), caygen::Error);
}

TEST(Transposition, Normalizes) {
  const auto t = caygen::Transposition::make(4, 2);
  EXPECT_EQ(t.a, 2);
  EXPECT_EQ(t.b, 4);
  EXPECT_EQ(t.to_permutation(4), Permutation::from_images({0, 3, 2, 1}));
  EXPECT_THROW(caygen::Transposition::make(3, 3), caygen::InvalidArgument);
  EXPECT_THROW(caygen::Transposition::make(0, 3), caygen::InvalidArgument);
}
