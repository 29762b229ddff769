#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "caygen/error.hpp"
#include "caygen/symmetry.hpp"
#include "caygen/tgraph.hpp"
#include "oracles.hpp"
#include "support.hpp"

using caygen::Family;
using caygen::TranspositionSet;

TEST(TranspositionSet, SortsAndValidates) {
  const auto s = support::tset(4, {{3, 4}, {2, 1}, {1, 3}});
  EXPECT_EQ(caygen::format_pairs(s), "1-2 1-3 3-4");
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.permutations()[0], caygen::Permutation::transposition(4, 1, 2));
  EXPECT_THROW(support::tset(3, {{1, 2}, {2, 1}}), caygen::InvalidArgument);
  EXPECT_THROW(support::tset(3, {{1, 4}}), caygen::InvalidArgument);
}

TEST(TranspositionSet, GraphRoundTrip) {
  const auto s = support::tset(5, {{1, 2}, {2, 5}, {3, 4}});
  const auto g = caygen::to_graph(s);
  EXPECT_EQ(g.num_vertices(), 5);
  EXPECT_TRUE(g.has_edge(1, 4));
  EXPECT_EQ(caygen::to_set(g), s);
}

TEST(Families, Examples) {
  EXPECT_EQ(caygen::format_pairs(caygen::family(Family::path, 4)), "1-2 2-3 3-4");
  EXPECT_EQ(caygen::format_pairs(caygen::family(Family::cycle, 4)), "1-2 1-4 2-3 3-4");
  EXPECT_EQ(caygen::format_pairs(caygen::family(Family::star, 4)), "1-2 1-3 1-4");
  EXPECT_EQ(caygen::family(Family::complete, 5).size(), 10u);
  EXPECT_THROW(caygen::family(Family::cycle, 2), caygen::InvalidArgument);
  EXPECT_THROW(caygen::family(Family::path, 1), caygen::InvalidArgument);
  EXPECT_EQ(caygen::parse_family("star"), Family::star);
  EXPECT_EQ(caygen::family_name(Family::complete), "complete");
  EXPECT_THROW(caygen::parse_family("wheel"), caygen::InvalidArgument);
}

// S generates S_n exactly when its closure has n! elements.
TEST(Generating, AgreesWithClosureOracle) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) slots.emplace_back(a, b);
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<caygen::Transposition> list;
      std::vector<oracle::Perm> gens;
      for (std::size_t k = 0; k < slots.size(); ++k)
        if (mask & (1u << k)) {
          list.push_back(caygen::Transposition::make(slots[k].first, slots[k].second));
          gens.push_back(oracle::swap_perm(n, slots[k].first - 1, slots[k].second - 1));
        }
      const TranspositionSet s(n, list);
      EXPECT_EQ(caygen::is_generating(s), oracle::closure_size(n, gens) == caygen::factorial(n));
    }
  }
}

TEST(Enumeration, ClassCountsMatchCanonicalFormOracle) {
  for (int n = 2; n <= 5; ++n) {
    const auto classes = caygen::enumerate_connected(n);
    EXPECT_EQ(classes.size(), oracle::connected_class_count(n)) << "n=" << n;
  }
}

TEST(Enumeration, RepresentativesArePairwiseDistinctAndSorted) {
  const auto classes = caygen::enumerate_connected(5);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto gi = support::from_simple(caygen::to_graph(classes[i]));
    EXPECT_TRUE(oracle::connected(gi));
    EXPECT_TRUE(caygen::is_generating(classes[i]));
    if (i > 0) {
      const bool ordered = classes[i - 1].size() < classes[i].size() ||
                           (classes[i - 1].size() == classes[i].size() && classes[i - 1].pairs() < classes[i].pairs());
      EXPECT_TRUE(ordered);
    }
    for (std::size_t j = 0; j < i; ++j)
      EXPECT_FALSE(oracle::isomorphic(gi, support::from_simple(caygen::to_graph(classes[j]))));
  }
  EXPECT_EQ(caygen::format_pairs(classes.front()), "1-2 1-3 1-4 1-5");
  EXPECT_EQ(classes.back(), caygen::family(Family::complete, 5));
}

TEST(Enumeration, RejectsOutOfRange) {
  EXPECT_THROW(caygen::enumerate_connected(1), caygen::InvalidArgument);
  EXPECT_THROW(caygen::enumerate_connected(8), caygen::Error);
}

TEST(EdgeList, ParsesCommentsAndBlankLines) {
  const auto s = caygen::parse_edge_list("# star\n\n4 3\n1 2\n1 3\n# middle\n1 4\n");
  EXPECT_EQ(s, caygen::family(Family::star, 4));
}

TEST(EdgeList, RoundTrip) {
  for (const auto& s : caygen::enumerate_connected(5)) {
    EXPECT_EQ(caygen::parse_edge_list(caygen::format_edge_list(s)), s);
  }
  EXPECT_EQ(caygen::format_edge_list(caygen::family(Family::path, 3)), "3 2\n1 2\n2 3\n");
}

namespace {

void expect_parse_error(const std::string& text, int line, int column) {
  try {
    caygen::parse_edge_list(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const caygen::ParseError& e) {
    EXPECT_EQ(e.line(), line) << text << " -> " << e.what();
    EXPECT_EQ(e.column(), column) << text << " -> " << e.what();
  }
}

}  // namespace

TEST(EdgeList, Diagnostics) {
  expect_parse_error("", 1, 1);
  expect_parse_error("3 2\n1 2\n", 2, 1);           // missing edge line
  expect_parse_error("3 1\n1 2\n2 3\n", 3, 1);      // extra edge line
  expect_parse_error("3 1\n2 1\n", 2, 1);           // i >= j
  expect_parse_error("3 2\n1 2\n1 2\n", 3, 1);      // duplicate
  expect_parse_error("3 1\n1 4\n", 2, 3);           // out of range
  expect_parse_error("3 1\n1 x\n", 2, 3);           // not a number
  expect_parse_error("3 1\n1 2 3\n", 2, 5);         // trailing token
  expect_parse_error("0 0\n", 1, 1);
  expect_parse_error("65 0\n", 1, 1);
}

TEST(FamilyUri, Parses) {
  EXPECT_EQ(caygen::parse_family_uri("family:cycle:5"), caygen::family(Family::cycle, 5));
  EXPECT_THROW(caygen::parse_family_uri("family:cycle"), caygen::ParseError);
  EXPECT_THROW(caygen::parse_family_uri("family:cycle:x"), caygen::ParseError);
  EXPECT_THROW(caygen::parse_family_uri("family:wheel:5"), caygen::Error);
}

TEST(LoadInput, FilesAndUris) {
  EXPECT_EQ(caygen::load_input("family:star:4"), caygen::family(Family::star, 4));
  const std::string path = testing::TempDir() + "caygen_load_input.txt";
  {
    std::ofstream out(path);
    out << "4 3\n1 2\n2 3\n3 4\n";
  }
  EXPECT_EQ(caygen::load_input(path), caygen::family(Family::path, 4));
  std::remove(path.c_str());
  EXPECT_THROW(caygen::load_input(path), caygen::IoError);
}
