#include <gtest/gtest.h>

#include "conres/errors.hpp"
#include "conres/poly.hpp"

using conres::GradedDims;
using conres::QPoly;
using conres::Coeff;

TEST(Laurent, ZeroCoefficientsAreDropped) {
  auto p = GradedDims::from_terms({{1, 2}, {3, 0}, {1, -2}, {4, 1}});
  EXPECT_EQ(p.term_count(), 1u);
  EXPECT_EQ(p[4], 1);
  EXPECT_EQ(p[1], 0);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Laurent, ArithmeticAndPow) {
  auto x = GradedDims::dense({1, 1});
  EXPECT_EQ(x.pow(3), GradedDims::dense({1, 3, 3, 1}));
  EXPECT_EQ(x * x - GradedDims::dense({1, 2, 1}), GradedDims{});
  EXPECT_EQ(x.pow(0), GradedDims::constant(1));
  EXPECT_EQ((x * 3)[1], 3);
}

TEST(Laurent, NegativeExponentsOnlyInT) {
  auto p = GradedDims::monomial(-2, 5);
  EXPECT_EQ(p.min_exponent(), -2);
  EXPECT_EQ(p.shifted(2), GradedDims::constant(5));
  EXPECT_THROW(QPoly::monomial(-1), conres::DomainError);
  EXPECT_THROW(QPoly::monomial(1).shifted(-2), conres::DomainError);
}

TEST(Laurent, ExactDivision) {
  auto a = GradedDims::dense({1, -1});
  auto b = GradedDims::dense({1, 1, 1});
  EXPECT_EQ((a * b).divided_exactly(b), a);
  EXPECT_EQ((a * b).shifted(5).divided_exactly(a), b.shifted(5));
  EXPECT_THROW(b.divided_exactly(a), conres::ConsistencyError);
  EXPECT_EQ((b * 6).divided_exactly(Coeff{3}), b * 2);
  EXPECT_THROW(b.divided_exactly(Coeff{2}), conres::ConsistencyError);
}

TEST(Laurent, SubstituteAndTruncate) {
  auto p = QPoly::dense({1, 2, 3});
  EXPECT_EQ(p.substitute_power(3), QPoly::from_terms({{0, 1}, {3, 2}, {6, 3}}));
  EXPECT_EQ(p.truncated(1), QPoly::dense({1, 2}));
  EXPECT_EQ(p.at_one(), 6);
  EXPECT_EQ(conres::to_t(p), GradedDims::from_terms({{0, 1}, {2, 2}, {4, 3}}));
}

TEST(Laurent, Predicates) {
  EXPECT_TRUE(GradedDims::dense({1, 2, 1}, 3).is_palindromic());
  EXPECT_FALSE(GradedDims::dense({1, 2, 2}).is_palindromic());
  EXPECT_FALSE(GradedDims::dense({1, -1}).nonnegative());
}

TEST(Laurent, ToString) {
  EXPECT_EQ(GradedDims::from_terms({{0, 1}, {1, -1}, {3, 2}}).to_string(), "1 - t + 2t^3");
  EXPECT_EQ(QPoly{}.to_string(), "0");
  EXPECT_EQ(QPoly::monomial(2, -1).to_string(), "-q^2");
}

TEST(Laurent, OverflowIsReported) {
  const auto big = GradedDims::constant(std::int64_t{1} << 62);
  EXPECT_THROW(big * big, std::overflow_error);
  EXPECT_THROW(big + big, std::overflow_error);
}

TEST(Laurent, QFactorialProduct) {
  // (1 - q)(1 - q^2)
  EXPECT_EQ(conres::q_factorial_product<conres::QVariable>(2, 1), QPoly::from_terms({{0, 1}, {1, -1}, {2, -1}, {3, 1}}));
  EXPECT_EQ(conres::q_factorial_product<conres::QVariable>(0, 3), QPoly::constant(1));
}
