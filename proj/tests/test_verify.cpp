#include <gtest/gtest.h>

#include "caygen/analyze.hpp"
#include "caygen/error.hpp"
#include "caygen/verify.hpp"
#include "support.hpp"

using caygen::Claim;
using caygen::Family;

TEST(Claims, NamesRoundTrip) {
  for (auto c : caygen::all_claims()) EXPECT_EQ(caygen::parse_claim(caygen::claim_name(c)), c);
  EXPECT_EQ(caygen::all_claims().size(), 9u);
  EXPECT_THROW(caygen::parse_claim("part_c"), caygen::InvalidArgument);
  EXPECT_EQ(caygen::claim_max_degree(Claim::connectivity, false), 4);
  EXPECT_EQ(caygen::claim_max_degree(Claim::connectivity, true), 5);
}

TEST(Reports, PartBOnNamedFamilies) {
  const auto path = caygen::verify_part_b(caygen::family(Family::path, 5));
  EXPECT_EQ(path.fast, false);
  EXPECT_EQ(path.oracle, false);
  EXPECT_TRUE(path.agree);
  EXPECT_TRUE(path.in_theorem_range);
  EXPECT_FALSE(path.failed());
  const auto star = caygen::verify_part_b(caygen::family(Family::star, 5));
  EXPECT_EQ(star.fast, true);
  EXPECT_EQ(star.oracle, true);
}

TEST(Reports, SmallDegreesAreExploratory) {
  const auto r = caygen::verify_part_b(caygen::family(Family::star, 4));
  EXPECT_FALSE(r.in_theorem_range);
  EXPECT_FALSE(r.failed());
}

TEST(Reports, PartAPairs) {
  const auto iso = caygen::verify_part_a(caygen::family(Family::star, 5), support::tset(5, {{1, 5}, {2, 5}, {3, 5}, {4, 5}}));
  EXPECT_EQ(iso.fast, true);
  EXPECT_TRUE(iso.agree);
  EXPECT_EQ(iso.detail["sigma_verified"], true);
  const auto non = caygen::verify_part_a(caygen::family(Family::star, 5), caygen::family(Family::path, 5));
  EXPECT_EQ(non.fast, false);
  EXPECT_EQ(non.oracle, false);
  EXPECT_THROW(caygen::verify_part_a(caygen::family(Family::star, 5), caygen::family(Family::star, 4)),
               caygen::Error);
}

TEST(Reports, WhitneyFeng) {
  const auto both = caygen::check_whitney_feng(caygen::family(Family::cycle, 5));
  ASSERT_EQ(both.size(), 2u);
  EXPECT_EQ(both[0].claim, Claim::whitney);
  EXPECT_EQ(both[0].fast["order"], 10);
  EXPECT_EQ(both[0].oracle["order"], 10);
  EXPECT_EQ(both[1].claim, Claim::feng);
  EXPECT_EQ(both[1].fast, 10);
  EXPECT_EQ(both[1].oracle, 10);
}

TEST(Reports, EveryClaimAgreesOnTheStar) {
  const auto s = caygen::family(Family::star, 4);
  for (auto c : caygen::all_claims()) {
    if (c == Claim::part_a) continue;
    const auto r = caygen::run_claim(c, s, std::nullopt);
    EXPECT_TRUE(r.agree) << caygen::claim_name(c) << ": " << caygen::to_json(r).dump();
  }
  EXPECT_THROW(caygen::run_claim(Claim::part_a, s, std::nullopt), caygen::InvalidArgument);
  EXPECT_THROW(caygen::run_claim(Claim::part_b, s, s), caygen::InvalidArgument);
}

TEST(Reports, ConnectivityNeedsTheExtendedFlagAtFivePoints) {
  const auto s = caygen::family(Family::star, 5);
  EXPECT_THROW(caygen::check_connectivity_corollary(s), caygen::CapacityError);
  caygen::VerifyOptions opts;
  opts.extended_connectivity = true;
  const auto r = caygen::check_connectivity_corollary(s, opts);
  EXPECT_TRUE(r.agree);
  EXPECT_EQ(r.oracle["kappa"], 4);
}

TEST(Reports, NonGeneratingInputIsRejected) {
  EXPECT_THROW(caygen::verify_part_b(support::tset(5, {{1, 2}, {3, 4}})), caygen::PreconditionError);
}

TEST(Reports, JsonRoundTripAndReplay) {
  for (const auto& r : caygen::sweep(Claim::stabilizer, 4)) {
    const auto j = caygen::to_json(r, false);
    EXPECT_TRUE(j["ms_fast"].is_null());
    const auto back = caygen::report_from_json(j);
    EXPECT_EQ(caygen::to_json(back, false), j);
    const auto again = caygen::replay(back);
    EXPECT_EQ(caygen::to_json(again, false), j);
  }
  const auto timed = caygen::to_json(caygen::verify_part_b(caygen::family(Family::path, 4)), true);
  EXPECT_TRUE(timed["ms_fast"].is_number());
  EXPECT_TRUE(timed["ms_oracle"].is_number());
}

TEST(Reports, SweepSizes) {
  EXPECT_EQ(caygen::sweep(Claim::part_b, 4).size(), 6u);
  EXPECT_EQ(caygen::sweep(Claim::part_a, 4).size(), 21u);
  EXPECT_THROW(caygen::sweep(Claim::part_b, 6), caygen::CapacityError);
}

TEST(Analyze, StarWithMaterialization) {
  const auto a = caygen::analyze(caygen::family(Family::star, 5), true);
  EXPECT_TRUE(a.generating);
  EXPECT_EQ(a.t_aut_order, 24u);
  EXPECT_EQ(a.cayley_edge_transitive, true);
  ASSERT_TRUE(a.cayley.has_value());
  EXPECT_EQ(a.cayley->vertices, 120);
  EXPECT_EQ(a.cayley->edges, 240);
  EXPECT_EQ(a.cayley->aut_order, 2880u);
  EXPECT_EQ(a.cayley->stabilizer_order, 24u);
  EXPECT_EQ(a.cayley->kernel_order, 1u);
  EXPECT_EQ(a.cayley->connectivity, 4);
  EXPECT_TRUE(a.cayley->bipartite);
  EXPECT_EQ(caygen::to_json(a)["cayley"]["aut_order"], 2880);
}

TEST(Analyze, NonGeneratingInputGetsANote) {
  const auto a = caygen::analyze(support::tset(4, {{1, 2}, {3, 4}}), false);
  EXPECT_FALSE(a.generating);
  EXPECT_FALSE(a.note.empty());
  EXPECT_FALSE(a.cayley.has_value());
  EXPECT_THROW(caygen::analyze(caygen::family(Family::star, 6), true), caygen::CapacityError);
}
