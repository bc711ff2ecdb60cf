#include "heis/element.hpp"

#include <gtest/gtest.h>

#include <random>

using heis::element;
using heis::integer;

namespace {

// Independent oracle: n-fold product with the group law written out by hand.
element naive_power(const element &g, long n)
{
  element out{0, 0, 0};
  element step = n >= 0 ? g : element{-g.a, -g.b, g.a * g.b - g.c};
  for (long i = 0; i < std::labs(n); ++i)
    out = element{out.a + step.a, out.b + step.b, out.c + step.c + out.a * step.b};
  return out;
}

element random_element(std::mt19937_64 &rng, long bound = 1'000'000'000)
{
  std::uniform_int_distribution<long> dist(-bound, bound);
  return {dist(rng), dist(rng), dist(rng)};
}

} // namespace

TEST(Element, MultiplyExamples)
{
  EXPECT_EQ(heis::multiply({0, 0, 0}, {5, -3, 7}), (element{5, -3, 7}));
  EXPECT_EQ(heis::multiply({2, 0, 0}, {0, 3, 0}), (element{2, 3, 6}));
  EXPECT_EQ(heis::multiply({1, 0, 0}, {0, 1, 0}), (element{1, 1, 1}));
  // the other order does not pick up a1*b2
  EXPECT_EQ(heis::multiply({0, 1, 0}, {1, 0, 0}), (element{1, 1, 0}));
}

TEST(Element, InverseExamples)
{
  EXPECT_EQ(heis::inverse({0, 0, 0}), (element{0, 0, 0}));
  EXPECT_EQ(heis::inverse({1, 0, 0}), (element{-1, 0, 0}));
  EXPECT_EQ(heis::inverse({1, 1, 0}), (element{-1, -1, 1}));
  EXPECT_EQ(heis::inverse({0, 1, 0}), (element{0, -1, 0}));
}

TEST(Element, PowerExamples)
{
  EXPECT_EQ(heis::power(element{1, 1, 0}, 0), (element{0, 0, 0}));
  EXPECT_EQ(heis::power(element{1, 1, 0}, 2), (element{2, 2, 1}));
  EXPECT_EQ(heis::power(element{0, 1, 0}, -1), (element{0, -1, 0}));
  EXPECT_EQ(naive_power({1, 1, 0}, 2), (element{2, 2, 1}));
}

TEST(Element, PowerMatchesIteratedProduct)
{
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_element(rng, 1000);
    for (long n = -50; n <= 50; ++n)
      ASSERT_EQ(naive_power(g, n), heis::power(g, n)) << heis::to_string(g) << "^" << n;
  }
}

TEST(Element, CommutatorExamples)
{
  EXPECT_EQ(heis::commutator(heis::gen_x(), heis::gen_y()), heis::gen_z());
  EXPECT_EQ(heis::commutator({2, 0, 0}, {0, 3, 0}), (element{0, 0, 6}));
  element g{7, -4, 11};
  EXPECT_EQ(heis::commutator(g, g), heis::identity_element());
}

TEST(Element, CommutatorIsDeterminantOfAbelianization)
{
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    auto g = random_element(rng), h = random_element(rng);
    EXPECT_EQ(heis::commutator(g, h), (element{0, 0, g.a * h.b - h.a * g.b}));
  }
}

TEST(Element, LambdaAndCenter)
{
  EXPECT_EQ(heis::lambda_project({0, 0, 7}), (heis::ab_pair{0, 0}));
  EXPECT_EQ(heis::lambda_project({1, 0, 0}), (heis::ab_pair{1, 0}));
  EXPECT_EQ(heis::lambda_project({3, -2, 9}), (heis::ab_pair{3, -2}));

  EXPECT_TRUE(heis::is_central({0, 0, -4}));
  EXPECT_TRUE(heis::is_central({0, 0, 0}));
  EXPECT_FALSE(heis::is_central({1, 0, 5}));
  // witness for the last one
  element g{1, 0, 5};
  EXPECT_NE(g * heis::gen_y(), heis::gen_y() * g);
}

TEST(Element, GroupLaws)
{
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    auto g1 = random_element(rng), g2 = random_element(rng), g3 = random_element(rng);
    ASSERT_EQ((g1 * g2) * g3, g1 * (g2 * g3));
    ASSERT_EQ(g1 * heis::inverse(g1), heis::identity_element());
    ASSERT_EQ(heis::inverse(g1) * g1, heis::identity_element());
    ASSERT_EQ(heis::lambda_project(g1 * g2), heis::lambda_project(g1) + heis::lambda_project(g2));
  }
}

TEST(Element, GeneratorOrderConvention)
{
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    auto g = random_element(rng);
    EXPECT_EQ(heis::power(heis::gen_z(), g.c) * heis::power(heis::gen_y(), g.b) *
                  heis::power(heis::gen_x(), g.a),
              g);
  }
  EXPECT_EQ(heis::power(heis::gen_x(), 3) * heis::power(heis::gen_y(), 4), (element{3, 4, 12}));
}

TEST(Element, ExactBeyondSixtyFourBits)
{
  element g{integer("123456789012345678901234567890"), integer("-98765432109876543210"), 0};
  auto sq = heis::power(g, 2);
  EXPECT_EQ(sq.c, g.a * g.b);
  EXPECT_EQ(heis::power(g, -3) * heis::power(g, 3), heis::identity_element());
}

TEST(ElementSyntax, ParseAndPrint)
{
  EXPECT_EQ(heis::parse_element("(1,-2,3)"), (element{1, -2, 3}));
  EXPECT_EQ(heis::parse_element("  ( 1 , -2 ,3 ) "), (element{1, -2, 3}));
  EXPECT_EQ(heis::to_string(element{-5, 0, 12}), "(-5,0,12)");
  std::string big = "(99999999999999999999999,-1,0)";
  EXPECT_EQ(heis::to_string(heis::parse_element(big)), big);
}

TEST(ElementSyntax, Rejects)
{
  for (const char *bad : {"", "(1,2)", "(1,2,3", "1,2,3", "(1,2,3,4)", "(1,+2,3)", "(a,b,c)",
                          "(1,2,3)x", "(1,- 2,3)", "(--1,0,0)"})
    EXPECT_THROW(heis::parse_element(bad), heis::parse_error) << bad;
}
