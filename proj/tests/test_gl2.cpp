#include "heis/gl2.hpp"

#include <gtest/gtest.h>

#include <random>

using heis::generator_word;
using heis::gl2_matrix;
using heis::symbol;

namespace {

// Plain 2x2 product on raw integers, independent of gl2_matrix.
std::array<heis::integer, 4> raw_product(const std::array<heis::integer, 4> &l,
                                         const std::array<heis::integer, 4> &r)
{
  return {l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3], l[2] * r[0] + l[3] * r[2],
          l[2] * r[1] + l[3] * r[3]};
}

generator_word random_word(std::mt19937_64 &rng, std::size_t max_len = 20)
{
  std::uniform_int_distribution<int> len(0, static_cast<int>(max_len)), sym(0, 2), ex(-4, 4);
  generator_word w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int s = sym(rng);
    int e = 0;
    while (e == 0)
      e = ex(rng);
    w.push_back(static_cast<symbol>(s), e);
  }
  return w;
}

} // namespace

TEST(Gl2, RejectsNonUnimodular)
{
  EXPECT_THROW(gl2_matrix(0, 0, 0, 0), heis::invalid_matrix);
  EXPECT_THROW(gl2_matrix(2, 0, 0, 1), heis::invalid_matrix);
  EXPECT_THROW(gl2_matrix(1, 1, 1, 1), heis::invalid_matrix);
  EXPECT_NO_THROW(gl2_matrix(2, 1, 1, 1));
  EXPECT_EQ(gl2_matrix(0, 1, 1, 0).det(), -1);
}

TEST(Gl2, MultiplyExamples)
{
  auto m = gl2_matrix(2, 3, 1, 2);
  EXPECT_EQ(gl2_matrix::identity() * m, m);
  EXPECT_EQ(heis::matrix_a() * heis::matrix_b(), gl2_matrix(0, 1, -1, 1));
  EXPECT_EQ(heis::matrix_d() * heis::matrix_d(), gl2_matrix::identity());

  auto raw = raw_product({1, 1, 0, 1}, {1, 0, -1, 1});
  EXPECT_EQ(gl2_matrix(raw[0], raw[1], raw[2], raw[3]), heis::matrix_a() * heis::matrix_b());
}

TEST(Gl2, InverseExamples)
{
  EXPECT_EQ(mat_inverse(gl2_matrix::identity()), gl2_matrix::identity());
  EXPECT_EQ(mat_inverse(heis::matrix_a()), gl2_matrix(1, -1, 0, 1));
  EXPECT_EQ(mat_inverse(heis::matrix_d()), heis::matrix_d());
  auto m = gl2_matrix(0, 1, 1, 5);
  EXPECT_EQ(m * mat_inverse(m), gl2_matrix::identity());
}

TEST(Gl2, PowerMatchesRepeatedProduct)
{
  auto m = gl2_matrix(2, 1, 1, 1);
  gl2_matrix acc;
  for (int n = 0; n < 12; ++n) {
    EXPECT_EQ(heis::mat_power(m, n), acc);
    EXPECT_EQ(heis::mat_power(m, -n) * acc, gl2_matrix::identity());
    acc = acc * m;
  }
}

TEST(Gl2, EvalWordExamples)
{
  EXPECT_EQ(heis::eval_word({}), gl2_matrix::identity());
  EXPECT_EQ(heis::eval_word(heis::rho() + heis::tau() + heis::rho()), gl2_matrix(0, 1, -1, 0));
  EXPECT_EQ(heis::eval_word(heis::kappa() + heis::kappa()), gl2_matrix::identity());
  EXPECT_EQ(heis::eval_word(heis::rho(5)), gl2_matrix(1, 5, 0, 1));
  EXPECT_EQ(heis::eval_word(heis::tau(-3)), gl2_matrix(1, 0, 3, 1));
}

TEST(Gl2, LetterMatrixAgreesWithRepeatedGenerator)
{
  for (int e = -6; e <= 6; ++e) {
    EXPECT_EQ(heis::letter_matrix(symbol::rho, e), heis::mat_power(heis::matrix_a(), e));
    EXPECT_EQ(heis::letter_matrix(symbol::tau, e), heis::mat_power(heis::matrix_b(), e));
    EXPECT_EQ(heis::letter_matrix(symbol::kappa, e), heis::mat_power(heis::matrix_d(), e));
  }
}

TEST(Gl2, DecomposeExamples)
{
  EXPECT_TRUE(heis::decompose(gl2_matrix::identity()).empty());
  EXPECT_EQ(heis::decompose(gl2_matrix(1, 5, 0, 1)), heis::rho(5));
  auto s = gl2_matrix(0, 1, -1, 0);
  for (auto strategy : {heis::decompose_strategy::left_floor, heis::decompose_strategy::right_nearest})
    EXPECT_EQ(heis::eval_word(heis::decompose(s, strategy)), s);
}

TEST(Gl2, DecomposeSpecialShapes)
{
  std::vector<gl2_matrix> cases = {
      gl2_matrix(-1, 0, 0, -1), gl2_matrix(-1, 7, 0, -1), heis::matrix_d(),
      gl2_matrix(0, 1, 1, 0),   gl2_matrix(0, -1, 1, 0),  gl2_matrix(1, 0, 9, 1),
      gl2_matrix(13, 8, 8, 5),  gl2_matrix(-13, 8, 8, -5), gl2_matrix(1, 0, 0, -1),
  };
  for (const auto &m : cases)
    for (auto strategy :
         {heis::decompose_strategy::left_floor, heis::decompose_strategy::right_nearest}) {
      auto w = heis::decompose(m, strategy);
      EXPECT_EQ(heis::eval_word(w), m) << heis::to_string(m) << " -> " << heis::to_string(w);
      EXPECT_TRUE(w.is_normalized());
    }
}

TEST(Gl2, DecomposeRoundtripOnRandomWords)
{
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    auto w = random_word(rng);
    auto m = heis::eval_word(w);
    ASSERT_EQ(heis::eval_word(heis::decompose(m, heis::decompose_strategy::left_floor)), m);
    ASSERT_EQ(heis::eval_word(heis::decompose(m, heis::decompose_strategy::right_nearest)), m);
  }
}

TEST(Gl2, DecomposeHugeEntries)
{
  // consecutive Fibonacci numbers, far beyond 64 bits
  heis::integer f0 = 0, f1 = 1;
  for (int i = 0; i < 300; ++i) {
    heis::integer next = f0 + f1;
    f0 = f1;
    f1 = next;
  }
  heis::integer f2 = f0 + f1;
  // [[F(n+1), F(n)], [F(n), F(n-1)]] has determinant (-1)^n
  gl2_matrix m(f2, f1, f1, f0);
  EXPECT_EQ(heis::eval_word(heis::decompose(m)), m);
  EXPECT_EQ(heis::eval_word(heis::decompose(m, heis::decompose_strategy::right_nearest)), m);
}

TEST(Gl2, DeterminantParity)
{
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    auto w = random_word(rng);
    EXPECT_EQ(heis::eval_word(w).det(), heis::kappa_count(w) % 2 == 0 ? 1 : -1);
  }
}

TEST(Gl2, Normalization)
{
  auto w = heis::rho(2) + heis::rho(-2) + heis::kappa() + heis::kappa(-1) + heis::tau() +
           heis::kappa(3) + heis::tau(4);
  auto n = w.normalized();
  EXPECT_EQ(n, heis::tau() + heis::kappa() + heis::tau(4));
  EXPECT_TRUE(n.is_normalized());
  EXPECT_FALSE(w.is_normalized());

  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    auto r = random_word(rng);
    auto rn = r.normalized();
    ASSERT_TRUE(rn.is_normalized());
    ASSERT_EQ(rn, rn.normalized());
    ASSERT_EQ(heis::eval_word(rn), heis::eval_word(r));
  }
}

TEST(Gl2, ZeroExponentRejected)
{
  generator_word w;
  EXPECT_THROW(w.push_back(symbol::rho, 0), std::invalid_argument);
  EXPECT_THROW(heis::parse_word("A^0"), heis::parse_error);
}

TEST(Gl2, PresentationRelations)
{
  auto checks = heis::check_presentation_relations();
  ASSERT_EQ(checks.size(), 5u);
  for (const auto &c : checks)
    EXPECT_TRUE(c.holds) << c.name;
  // relators stay unreduced
  EXPECT_EQ(heis::presentation_relators().back().word.size(), 2u);
  EXPECT_TRUE(heis::presentation_relators().back().word.normalized().empty());
}

TEST(Gl2Syntax, Matrix)
{
  EXPECT_EQ(heis::parse_matrix("[[0,1],[-1,0]]"), gl2_matrix(0, 1, -1, 0));
  EXPECT_EQ(heis::parse_matrix(" [ [ 1 , 5 ] , [ 0 , 1 ] ] "), gl2_matrix(1, 5, 0, 1));
  EXPECT_EQ(heis::to_string(gl2_matrix(-1, 0, 0, 1)), "[[-1,0],[0,1]]");
  EXPECT_THROW(heis::parse_matrix("[[2,0],[0,1]]"), heis::parse_error);
  EXPECT_THROW(heis::parse_matrix("[[1,0],[0,1]"), heis::parse_error);
  EXPECT_THROW(heis::parse_matrix("[[1,0,0],[0,1]]"), heis::parse_error);
}

TEST(Gl2Syntax, Word)
{
  auto w = heis::parse_word("A B A D A^-3");
  EXPECT_EQ(w, heis::rho() + heis::tau() + heis::rho() + heis::kappa() + heis::rho(-3));
  EXPECT_EQ(heis::to_string(w), "A B A D A^-3");
  EXPECT_TRUE(heis::parse_word("").empty());
  EXPECT_TRUE(heis::parse_word("   ").empty());
  EXPECT_EQ(heis::parse_word("AB"), heis::rho() + heis::tau());
  EXPECT_EQ(heis::parse_word("D^-1"), heis::kappa(-1));
  EXPECT_THROW(heis::parse_word("C"), heis::parse_error);
  EXPECT_THROW(heis::parse_word("A^"), heis::parse_error);

  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    auto r = random_word(rng);
    ASSERT_EQ(heis::parse_word(heis::to_string(r)), r);
  }
}
