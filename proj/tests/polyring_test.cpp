#include <random>

#include <gtest/gtest.h>

#include "nuforge/parse.hpp"
#include "nuforge/polynomial.hpp"

namespace nuforge {
namespace {

TEST(ParsePolynomial, FermatQuintic) {
  const auto f = parse_polynomial("z0^5+z1^5+z2^5+z3^5+z4^5", 5);
  ASSERT_EQ(f.size(), 5u);
  for (const auto& [m, c] : f.terms()) {
    EXPECT_EQ(c, 1);
    EXPECT_EQ(m.total_degree(), 5u);
  }
}

TEST(ParsePolynomial, ZeroIsEmpty) {
  const auto f = parse_polynomial("0", 5);
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.num_vars(), 5u);
}

TEST(ParsePolynomial, MixedSignsAndConstant) {
  const auto f = parse_polynomial("z0^2*z1 - z1^2 + 3", 3);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f.coefficient(Monomial{2, 1, 0}), 1);
  EXPECT_EQ(f.coefficient(Monomial{0, 2, 0}), -1);
  EXPECT_EQ(f.coefficient(Monomial{0, 0, 0}), 3);
}

TEST(ParsePolynomial, ImplicitProductAndLeadingMinus) {
  const auto f = parse_polynomial("-2 z0 z1^3 + z2", 3);
  EXPECT_EQ(f.coefficient(Monomial{1, 3, 0}), -2);
  EXPECT_EQ(f.coefficient(Monomial{0, 0, 1}), 1);
}

TEST(ParsePolynomial, LikeTermsCombineAndCancel) {
  EXPECT_TRUE(parse_polynomial("z0 - z0", 1).is_zero());
  EXPECT_EQ(parse_polynomial("z0 + 2*z0", 1).coefficient(Monomial{1}), 3);
}

TEST(ParsePolynomial, RejectsMalformedInput) {
  EXPECT_THROW(parse_polynomial("", 2), ParseError);
  EXPECT_THROW(parse_polynomial("z0 +", 2), ParseError);
  EXPECT_THROW(parse_polynomial("z0^", 2), ParseError);
  EXPECT_THROW(parse_polynomial("x^2", 2), ParseError);
  EXPECT_THROW(parse_polynomial("z0 ++ z1", 2), ParseError);
  EXPECT_THROW(parse_polynomial("z0^2)", 2), ParseError);
}

TEST(ParsePolynomial, RejectsVariableOutOfRange) {
  try {
    parse_polynomial("z0 + z5", 5);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
}

TEST(ParsePolynomial, RoundTripsThroughRender) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-9, 9), exp(0, 4), nterms(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial p(4);
    for (int t = nterms(rng); t > 0; --t) {
      Monomial m(4);
      for (std::size_t i = 0; i < 4; ++i) m[i] = static_cast<Exponent>(exp(rng));
      p.add_term(m, coeff(rng));
    }
    const auto text = render(p);
    EXPECT_EQ(parse_polynomial(text, 4), p) << text;
  }
}

TEST(Render, ZeroAndOrder) {
  EXPECT_EQ(render(Polynomial(3)), "0");
  EXPECT_EQ(render(parse_polynomial("3 - z1^2 + z0^2*z1", 3)), "z0^2*z1 - z1^2 + 3");
}

TEST(WeightedDegree, Examples) {
  EXPECT_EQ(weighted_degree(Monomial{5, 0, 0, 0, 1}, Weights{10, 12, 13, 15, 25}), 75u);
  EXPECT_EQ(weighted_degree(Monomial{0, 0, 0, 0, 0}, Weights{3, 1, 4, 1, 5}), 0u);
  EXPECT_EQ(weighted_degree(Monomial{3, 3, 3, 3, 3}, Weights{1, 1, 1, 1, 1}), 15u);
  EXPECT_THROW(weighted_degree(Monomial{1, 1}, Weights{1, 1, 1}), InvalidInput);
}

TEST(MonomialOrder, GrevlexAndLexDiffer) {
  const auto grevlex = MonomialOrder::grevlex(3);
  const auto lex = MonomialOrder::lex(3);
  const Monomial a{1, 0, 2}, b{0, 2, 0};
  // Total degree decides grevlex; the first exponent decides lex.
  EXPECT_TRUE(grevlex.less(b, a));
  EXPECT_TRUE(lex.less(b, a));
  const Monomial c{1, 0, 1}, d{0, 2, 0};
  EXPECT_TRUE(grevlex.less(c, d));  // smaller last exponent wins
  EXPECT_TRUE(lex.less(d, c));
}

TEST(MonomialOrder, IsTotalMultiplicativeWellOrder) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> exp(0, 3);
  auto random_monomial = [&] {
    Monomial m(3);
    for (std::size_t i = 0; i < 3; ++i) m[i] = static_cast<Exponent>(exp(rng));
    return m;
  };
  for (const auto& order : {MonomialOrder::grevlex(3), MonomialOrder::lex(3)}) {
    for (int t = 0; t < 500; ++t) {
      const auto a = random_monomial(), b = random_monomial(), c = random_monomial();
      const auto ab = order.compare(a, b);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(order.compare(b, a), 0 <=> ab);
      EXPECT_EQ(order.compare(a * c, b * c), ab) << order.name();
      EXPECT_FALSE(order.less(a, Monomial(3))) << "1 is the smallest monomial";
    }
  }
}

TEST(PartialDerivative, Examples) {
  const auto f = parse_polynomial("z0^5*z4", 5);
  EXPECT_EQ(partial_derivative(parse_polynomial("z0^5", 5), 0), parse_polynomial("5*z0^4", 5));
  EXPECT_EQ(partial_derivative(f, 4), parse_polynomial("z0^5", 5));
  EXPECT_TRUE(partial_derivative(parse_polynomial("7", 5), 0).is_zero());
  EXPECT_THROW(partial_derivative(f, 5), InvalidInput);
}

TEST(PartialDerivative, EulerIdentityForWeightedHomogeneous) {
  // sum_i w_i z_i df/dz_i = d f
  const Weights w{1, 18, 32, 39, 45};
  const auto f = parse_polynomial("z0^135+z1^5*z4+z2^3*z3+z3^3*z1+z4^3", 5);
  Polynomial lhs(5);
  for (std::size_t i = 0; i < 5; ++i)
    lhs += Polynomial::variable(5, i) * partial_derivative(f, i) * Rational(static_cast<long>(w[i]));
  EXPECT_EQ(lhs, f * Rational(135));
}

TEST(WeightedHomogeneity, Examples) {
  EXPECT_TRUE(check_weighted_homogeneous({parse_polynomial("z0^5+z1^5+z2^5+z3^5+z4^5", 5), {1, 1, 1, 1, 1}, 5}).ok);
  EXPECT_TRUE(check_weighted_homogeneous(
                  {parse_polynomial("z0^135+z1^5*z4+z2^3*z3+z3^3*z1+z4^3", 5), {1, 18, 32, 39, 45}, 135})
                  .ok);
  const auto bad = check_weighted_homogeneous({parse_polynomial("z0+z1^2", 2), {1, 1}, 1});
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.offending);
  EXPECT_EQ(*bad.offending, (Monomial{0, 2}));
  EXPECT_EQ(bad.offending_degree, 2u);
}

TEST(WeightedHomogeneity, RejectsBadInput) {
  EXPECT_THROW(check_weighted_homogeneous({Polynomial(2), {1, 1}, 1}), InvalidInput);
  EXPECT_THROW(check_weighted_homogeneous({parse_polynomial("z0", 2), {1}, 1}), InvalidInput);
  EXPECT_THROW(check_weighted_homogeneous({parse_polynomial("z0", 2), {1, 0}, 1}), InvalidInput);
}

}  // namespace
}  // namespace nuforge
