#include "gext/polynomial.hpp"

#include "gtest/gtest.h"

namespace gext {
namespace {

Polynomial P(std::vector<int> c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return Polynomial(std::move(b));
}

TEST(PolynomialTest, TrimsAndDegree) {
  EXPECT_TRUE(P({0, 0}).is_zero());
  EXPECT_EQ(P({}).degree(), -1);
  EXPECT_EQ(P({1, 2, 0}).degree(), 1);
  EXPECT_EQ(P({0, 0, 3}).valuation(), 2);
  EXPECT_EQ(Polynomial().valuation(), -1);
}

TEST(PolynomialTest, Arithmetic) {
  const auto a = P({1, 1});   // 1 + t
  const auto b = P({-1, 1});  // -1 + t
  EXPECT_EQ(a * b, P({-1, 0, 1}));
  EXPECT_EQ(a + b, P({0, 2}));
  EXPECT_EQ(a - a, Polynomial());
  EXPECT_EQ(a * Polynomial(), Polynomial());
}

TEST(PolynomialTest, Monomials) {
  EXPECT_TRUE(Polynomial::monomial(-3, 4).is_monomial());
  EXPECT_FALSE(P({1, 1}).is_monomial());
  EXPECT_FALSE(Polynomial().is_monomial());
}

TEST(PolynomialTest, ContentAndPrimitive) {
  EXPECT_EQ(P({4, -6}).content(), 2);
  EXPECT_EQ(P({4, -6}).primitive(), P({-2, 3}));
  EXPECT_EQ(P({-4, -6}).primitive(), P({2, 3}));
}

TEST(PolynomialTest, ExactDivision) {
  auto [q, ok] = P({-1, 0, 1}).divide_exact(P({1, 1}));
  EXPECT_TRUE(ok);
  EXPECT_EQ(q, P({-1, 1}));
  EXPECT_FALSE(P({1, 0, 1}).divide_exact(P({1, 1})).second);
  EXPECT_FALSE(P({1, 2}).divide_exact(P({0, 2})).second);
  EXPECT_FALSE(P({1}).divide_exact(P({0, 1})).second);
  EXPECT_THROW(P({1}).divide_exact(Polynomial()), Error);
}

TEST(PolynomialTest, Gcd) {
  // (t - 1)(t + 2) and (t - 1)(t - 3)
  const auto f = P({-2, 1, 1}), g = P({3, -4, 1});
  EXPECT_EQ(gcd(f, g), P({-1, 1}));
  EXPECT_EQ(gcd(Polynomial::monomial(2, 3), Polynomial::monomial(-5, 2)), Polynomial::monomial(1, 2));
  EXPECT_EQ(gcd(Polynomial(), Polynomial()), Polynomial());
  EXPECT_EQ(gcd(Polynomial(), P({0, -2})), P({0, 1}));
  EXPECT_EQ(gcd(P({1, 1}), P({1, 2})), P({1}));
}

TEST(PolynomialTest, ToString) {
  EXPECT_EQ(P({-1, 0, 1}).to_string(), "t^2 - 1");
  EXPECT_EQ(Polynomial::monomial(-1, 1).to_string(), "-t");
  EXPECT_EQ(P({3, -2}).to_string(), "-2t + 3");
  EXPECT_EQ(Polynomial().to_string(), "0");
}

TEST(PolynomialTest, LargeCoefficientsStayExact) {
  Polynomial x = P({1, 1});
  Polynomial p = Polynomial::constant(1);
  for (int i = 0; i < 80; ++i) p = p * x;
  EXPECT_GT(p.coeff(40), BigInt(1) << 70);
  auto [q, ok] = p.divide_exact(x);
  EXPECT_TRUE(ok);
  EXPECT_EQ(q * x, p);
}

}  // namespace
}  // namespace gext
