#include <gtest/gtest.h>

#include "hyperseq/errors.hpp"
#include "hyperseq/golden_ratio.hpp"
#include "hyperseq/sequence.hpp"

using namespace hyperseq;

TEST(ComparePhi, Bracket) {
  EXPECT_EQ(compare_with_phi(1618033, 1000000), PhiSide::below_phi);
  EXPECT_EQ(compare_with_phi(1618034, 1000000), PhiSide::above_phi);
  EXPECT_EQ(compare_with_phi(2, 1), PhiSide::above_phi);
  EXPECT_EQ(compare_with_phi(1, 1), PhiSide::below_phi);
  EXPECT_EQ(compare_with_phi(-3, 1), PhiSide::below_phi);
  EXPECT_EQ(compare_with_phi(0, 7), PhiSide::below_phi);
  EXPECT_THROW(compare_with_phi(1, 0), DomainError);
  EXPECT_THROW(compare_with_phi(1, -1), DomainError);
}

TEST(ComparePhi, SideNames) {
  EXPECT_EQ(to_string(PhiSide::above_phi), "above_phi");
  EXPECT_EQ(to_string(PhiSide::below_phi), "below_phi");
}

TEST(RatioGap, Examples) {
  auto c = ratio_gap_within(0, 2, 1, 2);
  EXPECT_TRUE(c.within);
  EXPECT_EQ(c.gap.side, PhiSide::above_phi);
  EXPECT_EQ(c.gap.numerator, Nat(2));
  EXPECT_EQ(c.gap.denominator, Nat(1));

  c = ratio_gap_within(1, 1, 1, 2);
  EXPECT_TRUE(c.within);
  EXPECT_EQ(c.gap.numerator, Nat(2));

  c = ratio_gap_within(0, 1, 1, 2);
  EXPECT_FALSE(c.within);
  EXPECT_EQ(c.gap.side, PhiSide::below_phi);
}

TEST(RatioGap, EpsilonBoundaryIsStrict) {
  // 8/5 = 1.6 sits 0.018034... below phi.
  EXPECT_TRUE(ratio_within(8, 5, 1804, 100000).within);
  EXPECT_FALSE(ratio_within(8, 5, 1803, 100000).within);
  // 5/3 = 1.666... sits 0.048633... above phi.
  EXPECT_TRUE(ratio_within(5, 3, 4864, 100000).within);
  EXPECT_FALSE(ratio_within(5, 3, 4863, 100000).within);
  // eps larger than the ratio itself.
  EXPECT_TRUE(ratio_within(1, 1000, 2, 1).within);
  EXPECT_FALSE(ratio_within(1, 1000, 0, 1).within);
}

TEST(RatioGap, DomainErrors) {
  EXPECT_THROW(ratio_gap_within(0, 0, 1, 2), DomainError);
  EXPECT_THROW(ratio_gap_within(0, 5, 1, 0), DomainError);
  EXPECT_THROW(ratio_within(1, 0, 1, 2), DomainError);
}

TEST(RatioGap, FibonacciSidesAlternate) {
  for (SeqIndex n = 2; n <= 60; ++n) {
    const auto a = ratio_gap_within(0, n, 1, 1).gap.side;
    const auto b = ratio_gap_within(0, n + 1, 1, 1).gap.side;
    ASSERT_NE(a, b) << n;
    ASSERT_EQ(a, n % 2 == 0 ? PhiSide::above_phi : PhiSide::below_phi) << n;
  }
}

TEST(RatioGap, HigherGenerationsStayAbove) {
  for (Generation r = 1; r <= 6; ++r)
    for (SeqIndex n = 1; n <= 200; ++n)
      ASSERT_EQ(ratio_gap_within(r, n, 1, 1).gap.side, PhiSide::above_phi) << r << ' ' << n;
}
