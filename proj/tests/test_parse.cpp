#include <gtest/gtest.h>

#include "cliff/parse.hpp"
#include "cliff/sampling.hpp"

using namespace cliff;

TEST(Parse, Examples) {
  const CliffordPolynomial p = parse_polynomial("x1^2*e1 - 1/2*x2^2*e1", 2);
  EXPECT_EQ(p.terms().size(), 2u);
  CliffordPolynomial q(2);
  q.add_term(Monomial({2, 0}), Multivector::basis_vector(2, 1));
  q.add_term(Monomial({0, 2}), Multivector::basis_vector(2, 1) * Rational(-1, 2));
  EXPECT_EQ(p, q);
  EXPECT_EQ(parse_polynomial("e12*x1*x2", 2), parse_polynomial("x1*x2*e12", 2));
}

TEST(Parse, BladeWordsMultiplyInOrder) {
  EXPECT_EQ(parse_polynomial("e21", 2), parse_polynomial("-e12", 2));
  EXPECT_EQ(parse_polynomial("e11", 2), parse_polynomial("-1", 2));
  EXPECT_EQ(parse_polynomial("e{1,12}", 12).to_string(), "e{1,12}");
  EXPECT_EQ(parse_polynomial("e{2,1}", 3), parse_polynomial("-e12", 3));
}

TEST(Parse, Grouping) {
  EXPECT_EQ(parse_polynomial("(x1 + x2)^2", 2), parse_polynomial("x1^2 + 2*x1*x2 + x2^2", 2));
  EXPECT_EQ(parse_polynomial("-(x1 - e1)", 2), parse_polynomial("e1 - x1", 2));
  EXPECT_EQ(parse_polynomial("2 * - x1", 2), parse_polynomial("-2*x1", 2));
  EXPECT_EQ(parse_polynomial("  3/6 ", 1), CliffordPolynomial::constant(1, Rational(1, 2)));
  EXPECT_TRUE(parse_polynomial("x1 - x1", 2).is_zero());
}

TEST(Parse, Errors) {
  try {
    parse_polynomial("x3", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("index out of range"), std::string::npos);
    EXPECT_EQ(e.position(), 0u);
  }
  EXPECT_THROW(parse_polynomial("x1 +", 2), ParseError);
  EXPECT_THROW(parse_polynomial("x1 x2", 2), ParseError);
  EXPECT_THROW(parse_polynomial("1/0", 2), ParseError);
  EXPECT_THROW(parse_polynomial("(x1", 2), ParseError);
  EXPECT_THROW(parse_polynomial("e3", 2), ParseError);
  EXPECT_THROW(parse_polynomial("y1", 2), ParseError);
  EXPECT_THROW(parse_polynomial("", 2), ParseError);
  EXPECT_THROW(parse_polynomial("x1", 13), PreconditionError);
}

TEST(Parse, RoundTrip) {
  Rng rng(71);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 1 + trial % 6;
    const CliffordPolynomial p = random_polynomial(m, trial % 5, rng, 1 + trial % 4, std::nullopt, 3);
    ASSERT_EQ(parse_polynomial(p.to_string(), m), p) << p.to_string();
  }
  Rng big(72);
  for (int trial = 0; trial < 20; ++trial) {
    const CliffordPolynomial p = random_polynomial(11, 2, big, 3);
    ASSERT_EQ(parse_polynomial(p.to_string(), 11), p) << p.to_string();
  }
}
