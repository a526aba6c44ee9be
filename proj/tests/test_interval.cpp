#include <gtest/gtest.h>

#include "generators.hpp"
#include "shexd/bag.hpp"
#include "shexd/error.hpp"
#include "shexd/interval.hpp"
#include "shexd/matching.hpp"
#include "shexd/shexc.hpp"

using namespace shexd;
using test::tc_expr;

namespace {

ShapeExpr rep(ShapeExpr e, std::uint32_t l, std::uint32_t u) { return ShapeExpr::repeat(std::move(e), l, u); }

// C1, C2, C3+, C4+
ShapeExpr issue_expr() {
  return ShapeExpr::group({tc_expr(1), tc_expr(2), rep(tc_expr(3), 1, kUnbounded), rep(tc_expr(4), 1, kUnbounded)});
}

}  // namespace

TEST(Interval, Arithmetic) {
  EXPECT_TRUE(Interval::none().empty());
  EXPECT_EQ(Interval::of(1, 3).intersect(Interval::of(2, 5)), Interval::of(2, 3));
  EXPECT_TRUE(Interval::of(1, 2).intersect(Interval::of(3, 4)).empty());
  EXPECT_EQ(Interval::of(1, 2).plus(Interval::of(3, kUnbounded)), Interval::of(4, kUnbounded));
  EXPECT_TRUE(Interval::of(1, 2).plus(Interval::none()).empty());
  EXPECT_EQ(Interval::of(0, kUnbounded).to_string(), "[0;*]");
}

TEST(Interval, TripleConstraintCount) {
  EXPECT_EQ(interval(tc_expr(1), {{1, 3}}), Interval::of(3, 3));
  EXPECT_EQ(interval(tc_expr(1), {}), Interval::of(0, 0));
}

TEST(Interval, RepeatedTripleConstraint) {
  // C[2;3] with 7 copies: n*2 <= 7 <= n*3 for n in [3;3]
  EXPECT_EQ(interval(rep(tc_expr(1), 2, 3), {{1, 7}}), Interval::of(3, 3));
  EXPECT_EQ(interval(rep(tc_expr(1), 0, 1), {}), Interval::of(0, kUnbounded));
  EXPECT_EQ(interval(rep(tc_expr(1), 1, kUnbounded), {{1, 4}}), Interval::of(1, 4));
  EXPECT_TRUE(interval(rep(tc_expr(1), 0, 0), {{1, 1}}).empty());
}

TEST(Interval, IssueShapeBags) {
  EXPECT_TRUE(interval(issue_expr(), {{1, 1}, {2, 1}, {3, 2}, {4, 1}}).contains(1));
  EXPECT_FALSE(interval(issue_expr(), {{1, 2}, {2, 1}, {3, 1}, {4, 1}}).contains(1));
  EXPECT_TRUE(bag_matches(issue_expr(), {{1, 1}, {2, 1}, {3, 1}, {4, 3}}));
  EXPECT_FALSE(bag_matches(issue_expr(), {{1, 1}, {2, 1}, {4, 1}}));
}

TEST(Interval, SomeOfAndEmpty) {
  ShapeExpr e = ShapeExpr::some_of({tc_expr(1), tc_expr(2)});
  EXPECT_FALSE(bag_matches(e, {{1, 1}, {2, 1}}));
  EXPECT_TRUE(bag_matches(e, {{2, 1}}));
  EXPECT_EQ(interval(ShapeExpr::empty(), {}), Interval::of(0, kUnbounded));
  EXPECT_TRUE(interval(ShapeExpr::empty(), {{1, 1}}).empty());
}

TEST(Interval, ForeignSymbolsGiveEmpty) { EXPECT_TRUE(interval(tc_expr(1), {{1, 1}, {9, 1}}).empty()); }

TEST(Interval, RejectsNonSingleOccurrence) {
  ShapeExpr dup = ShapeExpr::group({tc_expr(1), tc_expr(1)});
  EXPECT_FALSE(is_single_occurrence(dup));
  EXPECT_THROW(interval(dup, {}), NotSingleOccurrence);
  EXPECT_FALSE(is_single_occurrence(rep(ShapeExpr::group({tc_expr(1), tc_expr(2)}), 2, 4)));
}

TEST(Unfold, GroupRepetition) {
  ShapeExpr g = ShapeExpr::group({tc_expr(1), tc_expr(2)});
  ShapeExpr u = unfold_repetitions(rep(g, 2, 4));
  ShapeExpr expected = ShapeExpr::group({g, g, rep(g, 0, 1), rep(g, 0, 1)});
  EXPECT_EQ(u, expected);
  EXPECT_EQ(unfold_repetitions(rep(g, 2, kUnbounded)), ShapeExpr::group({g, g, rep(g, 0, kUnbounded)}));
  EXPECT_EQ(unfold_repetitions(rep(g, 0, 0)), ShapeExpr::empty());
}

TEST(Unfold, LeavesAllowedFormsAlone) {
  ShapeExpr t = rep(tc_expr(1), 3, 7);
  EXPECT_EQ(unfold_repetitions(t), t);
  ShapeExpr g = rep(ShapeExpr::group({tc_expr(1), tc_expr(2)}), 1, kUnbounded);
  EXPECT_EQ(unfold_repetitions(g), g);
}

TEST(BruteMatch, Basics) {
  EXPECT_TRUE(brute_match(tc_expr(1), {{1, 1}}));
  EXPECT_FALSE(brute_match(tc_expr(1), {{1, 2}}));
  EXPECT_TRUE(brute_match(issue_expr(), {{1, 1}, {2, 1}, {3, 2}, {4, 1}}));
  EXPECT_FALSE(brute_match(ShapeExpr::some_of({tc_expr(1), tc_expr(2)}), {{1, 1}, {2, 1}}));
  EXPECT_TRUE(brute_match(ShapeExpr::empty(), {}));
}

TEST(BruteMatch, DuplicatedIdsAfterUnfolding) {
  // (C1 | C2){2,3}: two or three picks of C1 or C2
  ShapeExpr e = rep(ShapeExpr::some_of({tc_expr(1), tc_expr(2)}), 2, 3);
  EXPECT_TRUE(brute_match(e, {{1, 1}, {2, 1}}));
  EXPECT_TRUE(brute_match(e, {{1, 3}}));
  EXPECT_FALSE(brute_match(e, {{1, 2}, {2, 2}}));
  EXPECT_FALSE(brute_match(e, {{2, 1}}));
  EXPECT_TRUE(expr_matches(e, {{1, 2}, {2, 1}}));
  EXPECT_FALSE(expr_matches(e, {{1, 4}}));
}

TEST(BruteMatch, BagBound) {
  EXPECT_THROW(brute_match(rep(tc_expr(1), 0, kUnbounded), {{1, 17}}), BagTooLarge);
  EXPECT_TRUE(brute_match(rep(tc_expr(1), 0, kUnbounded), {{1, 17}}, 20));
  MatchOptions forced{16, true};
  EXPECT_THROW(expr_matches(rep(tc_expr(1), 0, kUnbounded), {{1, 40}}, forced), BagTooLarge);
  EXPECT_TRUE(expr_matches(rep(tc_expr(1), 0, kUnbounded), {{1, 40}}));
}

TEST(IntervalProperty, AgreesWithBruteMatch) {
  test::Rng rng(20151215);
  int checked = 0;
  for (int round = 0; round < 3000; ++round) {
    int alphabet = static_cast<int>(test::pick(rng, 1, 6));
    ShapeExpr e = unfold_repetitions(test::ExprGenerator(rng, alphabet, 4)());
    if (!is_single_occurrence(e)) continue;
    ConsumerBag bag = test::random_bag(rng, alphabet, 10);
    bool fast = interval(e, bag).contains(1);
    bool slow = brute_match(e, bag);
    ASSERT_EQ(fast, slow) << expr_to_shexc(e) << " on bag of " << bag_total(bag);
    ++checked;
  }
  EXPECT_GE(checked, 1000);
}

TEST(IntervalProperty, UnfoldingPreservesLanguage) {
  test::Rng rng(7);
  for (int round = 0; round < 500; ++round) {
    ShapeExpr inner = test::ExprGenerator(rng, 3, 2)();
    std::uint32_t l = test::pick(rng, 0, 2);
    std::uint32_t u = test::coin(rng, 0.3) ? kUnbounded : l + test::pick(rng, 0, 2);
    ShapeExpr e = ShapeExpr::repeat(inner, l, u);
    ConsumerBag bag = test::random_bag(rng, 3, 6);
    ASSERT_EQ(brute_match(e, bag), brute_match(unfold_repetitions(e), bag)) << expr_to_shexc(e);
  }
}
