#include "wpb/error.hpp"
#include "wpb/exact_scalar.hpp"

#include <gtest/gtest.h>

using namespace wpb;

TEST(ExactScalar, SquareFactorsAreExtracted) {
  const ExactScalar r8 = ExactScalar::sqrt(8);
  EXPECT_EQ(r8.re(), 2);
  EXPECT_EQ(r8.radical(), 2);
  EXPECT_EQ(r8, ExactScalar(2) * ExactScalar::sqrt(2));
}

TEST(ExactScalar, RationalRadicandIsRationalised) {
  // √(3/4) = √3 / 2
  const ExactScalar s = ExactScalar::sqrt(Rational(3, 4));
  EXPECT_EQ(s.re(), Rational(1, 2));
  EXPECT_EQ(s.radical(), 3);
  // √(1/2) = √2 / 2
  EXPECT_EQ(ExactScalar::sqrt(Rational(1, 2)), ExactScalar(Rational(1, 2)) * ExactScalar::sqrt(2));
}

TEST(ExactScalar, RadicalsMultiplyToCanonicalForm) {
  EXPECT_EQ(ExactScalar::sqrt(2) * ExactScalar::sqrt(2), ExactScalar(2));
  EXPECT_EQ(ExactScalar::sqrt(6) * ExactScalar::sqrt(10), ExactScalar(2) * ExactScalar::sqrt(15));
  EXPECT_TRUE((ExactScalar::sqrt(3) * ExactScalar::sqrt(3)).is_rational());
}

TEST(ExactScalar, AdditionNeedsMatchingRadicals) {
  EXPECT_EQ(ExactScalar::sqrt(2) + ExactScalar::sqrt(8), ExactScalar(3) * ExactScalar::sqrt(2));
  EXPECT_THROW(ExactScalar::sqrt(2) + ExactScalar::sqrt(3), RadicalMismatch);
  EXPECT_THROW(ExactScalar(1) + ExactScalar::sqrt(3), RadicalMismatch);
}

TEST(ExactScalar, ZeroIsCompatibleWithEveryRadical) {
  const ExactScalar zero;
  EXPECT_EQ(zero + ExactScalar::sqrt(5), ExactScalar::sqrt(5));
  EXPECT_EQ(ExactScalar::sqrt(5) - ExactScalar::sqrt(5), zero);
  EXPECT_EQ((ExactScalar::sqrt(5) - ExactScalar::sqrt(5)).radical(), 1);
}

TEST(ExactScalar, SqrtFactorialMatchesDirectSquareRoot) {
  EXPECT_EQ(ExactScalar::sqrt_factorial(0), ExactScalar(1));
  EXPECT_EQ(ExactScalar::sqrt_factorial(2), ExactScalar::sqrt(2));
  EXPECT_EQ(ExactScalar::sqrt_factorial(4), ExactScalar(2) * ExactScalar::sqrt(6));
  for (unsigned n = 0; n <= 30; ++n) {
    const ExactScalar s = ExactScalar::sqrt_factorial(n);
    EXPECT_EQ(s * s, ExactScalar(Rational(factorial(n)))) << n;
  }
}

TEST(ExactScalar, InverseAndConjugate) {
  const ExactScalar z(Rational(1), Rational(2));
  const ExactScalar w = z * ExactScalar::sqrt(6);
  EXPECT_EQ(w * w.inverse(), ExactScalar(1));
  EXPECT_EQ(w.conj(), z.conj() * ExactScalar::sqrt(6));
  EXPECT_EQ(ExactScalar::imaginary_unit() * ExactScalar::imaginary_unit(), ExactScalar(-1));
  EXPECT_THROW(ExactScalar().inverse(), InvalidArgument);
}

TEST(ExactScalar, Rendering) {
  EXPECT_EQ(ExactScalar(Rational(3, 2)).to_string(), "3/2");
  EXPECT_EQ(ExactScalar(0, -1).to_string(), "-i");
  EXPECT_EQ(ExactScalar::sqrt(2).to_string(), "sqrt(2)");
  EXPECT_EQ((ExactScalar(1, 2) * ExactScalar::sqrt(6)).to_string(), "(1+2i)*sqrt(6)");
}

TEST(ExactScalar, ToComplexUsesWorkingPrecision) {
  PrecisionScope scope(40);
  const Complex z = (ExactScalar(1, -1) * ExactScalar::sqrt(2)).to_complex();
  const Real root2 = boost::multiprecision::sqrt(Real(2));
  EXPECT_LT(boost::multiprecision::abs(z.re - root2), Real("1e-38"));
  EXPECT_LT(boost::multiprecision::abs(z.im + root2), Real("1e-38"));
}

TEST(SquareFree, Decomposition) {
  const auto p = square_free_parts(Integer(72));  // 72 = 6² · 2
  EXPECT_EQ(p.square, 6);
  EXPECT_EQ(p.free, 2);
  const auto q = square_free_parts(Integer(1));
  EXPECT_EQ(q.square, 1);
  EXPECT_EQ(q.free, 1);
  // Large prime squared beyond the trial-division bound.
  const Integer big = Integer(1000003) * Integer(1000003) * 7;
  const auto r = square_free_parts(big);
  EXPECT_EQ(r.square, 1000003);
  EXPECT_EQ(r.free, 7);
}
