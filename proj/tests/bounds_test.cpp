#include <gtest/gtest.h>

#include "waring/bounds.hpp"
#include "waring/errors.hpp"

namespace waring {
namespace {

TEST(BbsBound, Examples) {
  EXPECT_EQ(bbs_bound(3, 3), 6);
  for (int d = 1; d <= 12; ++d) EXPECT_EQ(bbs_bound(2, d), d);
  EXPECT_EQ(bbs_bound(4, 4), 20);
}

TEST(ImprovedBound, Examples) {
  EXPECT_EQ(improved_bound(3, 3), 5);
  EXPECT_EQ(improved_bound(3, 4), 9);
  EXPECT_EQ(improved_bound(4, 3), 9);
  EXPECT_EQ(improved_bound(4, 4), 18);
  EXPECT_THROW(improved_bound(2, 5), InvalidInput);
  EXPECT_THROW(improved_bound(5, 2), InvalidInput);
}

TEST(RecursionBound, Examples) {
  EXPECT_EQ(recursion_bound(3, 3, BaseMode::bbs), 6);
  EXPECT_EQ(recursion_bound(4, 3, BaseMode::improved), 9);
  EXPECT_EQ(recursion_bound(5, 5, BaseMode::improved), improved_bound(5, 5));
  EXPECT_EQ(recursion_bound(5, 3, BaseMode::improved), 14);
  EXPECT_EQ(recursion_bound(1, 7, BaseMode::improved), 1);
  EXPECT_EQ(recursion_bound(6, 1, BaseMode::bbs), 1);
}

TEST(Properties, RecursionMatchesClosedForms) {
  BoundTable bbs(12, 12, BaseMode::bbs);
  BoundTable improved(12, 12, BaseMode::improved);
  for (int n = 2; n <= 12; ++n)
    for (int d = 2; d <= 12; ++d) {
      EXPECT_EQ(bbs.at(n, d), bbs_bound(n, d)) << n << "," << d;
      if (n >= 3 && d >= 3) EXPECT_EQ(improved.at(n, d), improved_bound(n, d)) << n << "," << d;
    }
}

TEST(Properties, Pascal) {
  for (int n = 3; n <= 12; ++n)
    for (int d = 3; d <= 12; ++d) EXPECT_EQ(bbs_bound(n, d), bbs_bound(n - 1, d) + bbs_bound(n, d - 1));
}

TEST(Properties, NoOverflow) {
  Integer big = bbs_bound(200, 200);
  EXPECT_GT(big, Integer("1000000000000000000000000000000"));
  EXPECT_EQ(recursion_bound(60, 60, BaseMode::bbs), bbs_bound(60, 60));
}

}  // namespace
}  // namespace waring
