#include "contour.hpp"

#include "wpb/error.hpp"
#include "wpb/families.hpp"
#include "wpb/pairing.hpp"
#include "wpb/serialization.hpp"
#include "wpb/test_function.hpp"
#include "wpb/weak_distribution.hpp"

#include <gtest/gtest.h>

using namespace wpb;

namespace {

WeakDistribution x(int n, ExactScalar c = 1) { return WeakDistribution::monomial(n, std::move(c)); }
WeakDistribution d(int n, ExactScalar c = 1) { return WeakDistribution::delta(n, std::move(c)); }

}  // namespace

TEST(WeakDistribution, ZeroCoefficientsArePruned) {
  const WeakDistribution f({{2, ExactScalar(0)}, {3, ExactScalar(1)}}, {{0, ExactScalar(0)}});
  EXPECT_EQ(f, x(3));
  EXPECT_FALSE(f.has_delta());
  EXPECT_TRUE(WeakDistribution().is_zero());
  EXPECT_EQ(WeakDistribution().max_order(), -1);
}

TEST(ApplyX, ShiftsMonomials) { EXPECT_EQ(apply_x(x(2)), x(3)); }

TEST(ApplyX, AnnihilatesDelta) { EXPECT_TRUE(apply_x(d(0)).is_zero()); }

TEST(ApplyX, LowersDeltaOrder) { EXPECT_EQ(apply_x(d(3)), d(2, -3)); }

TEST(ApplyX, MatchesContourOracleOnGaussians) {
  // ⟨x δ^(n), f⟩ = (−1)^n (x f)^(n)(0), with the derivative taken from a
  // contour integral of z·exp(−α z²) rather than from the provider.
  PrecisionScope scope(34);
  for (const Rational alpha : {Rational(1, 2), Rational(1)}) {
    const auto f = make_gaussian(alpha);
    const double a = static_cast<double>(alpha);
    for (int n = 1; n <= 10; ++n) {
      const auto h = [a](std::complex<double> z) { return z * std::exp(-a * z * z); };
      const double nfact = std::tgamma(n + 1.0);
      const double oracle = (n % 2 ? -1.0 : 1.0) * nfact * wpbtest::contour_taylor(h, n).real();
      const double lib = static_cast<double>(pair_dist_fn(apply_x(d(n)), *f).to_complex().re);
      EXPECT_NEAR(lib, oracle, 1e-10) << "alpha=" << alpha << " n=" << n;
    }
  }
}

TEST(ApplyD, LowersMonomials) { EXPECT_EQ(apply_D(x(3)), x(2, 3)); }

TEST(ApplyD, KillsConstants) { EXPECT_TRUE(apply_D(x(0)).is_zero()); }

TEST(ApplyD, RaisesDeltaOrder) { EXPECT_EQ(apply_D(d(1)), d(2)); }

TEST(ApplyWord, CommutatorOnDelta) {
  const WeakDistribution f = d(5);
  EXPECT_EQ(apply_word({Ladder::a, Ladder::b}, f) - apply_word({Ladder::b, Ladder::a}, f), f);
}

TEST(ApplyWord, RaisingOnPhi) {
  for (int k = 0; k <= 10; ++k) {
    EXPECT_EQ(apply_word({Ladder::b}, phi(k)), ExactScalar::sqrt(k + 1) * phi(k + 1)) << k;
  }
}

TEST(ApplyWord, BDaggerAnnihilatesPsi0) { EXPECT_TRUE(apply_word({Ladder::b_dag}, psi(0)).is_zero()); }

TEST(ApplyWord, EmptyWordIsIdentityAndAtomsApplyRightToLeft) {
  const WeakDistribution f = x(2) + d(1, ExactScalar(0, 3));
  EXPECT_EQ(apply_word({}, f), f);
  // a b x^2 = D(x^3) = 3x^2 while b a x^2 = x(2x) = 2x^2
  EXPECT_EQ(apply_word({Ladder::a, Ladder::b}, x(2)), x(2, 3));
  EXPECT_EQ(apply_word({Ladder::b, Ladder::a}, x(2)), x(2, 2));
  EXPECT_EQ(apply_word({Ladder::a_dag}, x(2)), x(1, -2));
}

TEST(CommutatorResidual, VanishesOnExamples) {
  EXPECT_TRUE(commutator_residual(x(7)).is_zero());
  EXPECT_TRUE(commutator_residual(d(4)).is_zero());
  EXPECT_TRUE(commutator_residual(x(2, 3) + d(1, ExactScalar(0, 2))).is_zero());
}

TEST(CommutatorResidual, OperatorIdentityOnBasis) {
  for (int n = 0; n <= 50; ++n) {
    EXPECT_EQ(apply_D(apply_x(x(n))) - apply_x(apply_D(x(n))), x(n)) << n;
    EXPECT_EQ(apply_D(apply_x(d(n))) - apply_x(apply_D(d(n))), d(n)) << n;
  }
}

TEST(Arithmetic, AddAndScale) {
  EXPECT_TRUE(add(x(1), scale(-1, x(1))).is_zero());
  EXPECT_EQ(scale(ExactScalar::sqrt(2), scale(ExactScalar::sqrt(2), x(1))), x(1, 2));
  EXPECT_THROW(add(x(1, ExactScalar::sqrt(2)), x(1, ExactScalar::sqrt(3))), RadicalMismatch);
  // Different degrees never merge, so mixed radicals coexist.
  EXPECT_NO_THROW(add(x(1, ExactScalar::sqrt(2)), x(2, ExactScalar::sqrt(3))));
}

TEST(Arithmetic, OrderCapIsEnforced) {
  EXPECT_THROW(apply_x(x(512)), OrderOverflow);
  EXPECT_THROW(apply_D(d(512)), OrderOverflow);
  EXPECT_THROW(apply_D(d(9), OrderCap{9}), OrderOverflow);
  EXPECT_NO_THROW(apply_D(d(8), OrderCap{9}));
  // Lowering never overflows.
  EXPECT_NO_THROW(apply_x(d(512)));
}

TEST(Arithmetic, Rendering) {
  EXPECT_EQ((x(2, 3) + d(1, ExactScalar(0, 2))).to_string(), "3*x^2 + 2i*delta^(1)");
  EXPECT_EQ(WeakDistribution().to_string(), "0");
}

TEST(Serialization, ScalarComponentsAreStrings) {
  const nlohmann::json j = to_json(ExactScalar(Rational(-3, 4), Rational(1, 2)) * ExactScalar::sqrt(8));
  ASSERT_EQ(j.size(), 6u);
  // (−3/4 + i/2)·2√2 = (−3/2 + i)·√2
  EXPECT_EQ(j, nlohmann::json({"-3", "2", "1", "1", "2", "1"}));
}

TEST(Serialization, DistributionRoundTrip) {
  const WeakDistribution f = x(2, ExactScalar::sqrt(3)) + d(5, ExactScalar(Rational(1, 7), Rational(-2)));
  const nlohmann::json j = to_json(f);
  EXPECT_TRUE(j.contains("poly"));
  EXPECT_TRUE(j["poly"].contains("2"));
  EXPECT_TRUE(j["delta"].contains("5"));
  EXPECT_EQ(weak_distribution_from_json(j), f);
  EXPECT_EQ(weak_distribution_from_json(nlohmann::json::parse(j.dump())), f);
}

TEST(Serialization, RejectsMalformedInput) {
  EXPECT_THROW(exact_scalar_from_json(nlohmann::json({"1", "0", "0", "1", "1", "1"})), UnresolvedSpec);
  EXPECT_THROW(exact_scalar_from_json(nlohmann::json({"1", "2"})), UnresolvedSpec);
}
