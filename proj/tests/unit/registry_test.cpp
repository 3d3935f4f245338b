#include "wpb/checks.hpp"
#include "wpb/error.hpp"
#include "wpb/registry.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace wpb;

TEST(Registry, TestFunctionLabels) {
  EXPECT_EQ(resolve_test_function("gaussian:alpha=1/2")->label(), "gaussian:alpha=1/2");
  EXPECT_EQ(resolve_test_function("indicator:0,1")->label(), "indicator:0,1");
  EXPECT_TRUE(resolve_test_function("polygauss:1+x^2,alpha=1")->caps().moments);
  EXPECT_TRUE(resolve_test_function("exp:lambda=1")->caps().taylor);
  EXPECT_EQ(resolve_test_function("zero")->label(), "zero");
  EXPECT_EQ(*resolve_test_function("indicator:0,1")->moment_exact(3), Rational(1, 4));
}

TEST(Registry, BadLabels) {
  EXPECT_THROW(resolve_test_function("lorentzian:1"), UnresolvedSpec);
  EXPECT_THROW(resolve_test_function("gaussian:beta=1"), UnresolvedSpec);
  EXPECT_THROW(resolve_test_function("gaussian:alpha=x"), UnresolvedSpec);
  EXPECT_THROW(resolve_test_function("indicator:1,0"), UnresolvedSpec);
  EXPECT_THROW(resolve_test_function("polygauss:1+x"), UnresolvedSpec);
}

TEST(Registry, DistributionSpecs) {
  EXPECT_EQ(resolve_distribution("phi:3"), phi(3));
  EXPECT_EQ(resolve_distribution("psi:0"), psi(0));
  EXPECT_EQ(resolve_distribution("x:4"), WeakDistribution::monomial(4));
  EXPECT_EQ(resolve_distribution("delta:2"), WeakDistribution::delta(2));
  EXPECT_EQ(resolve_distribution("span:psi:{0:1,3:2}"), psi(0) + ExactScalar(2) * psi(3));
  EXPECT_THROW(resolve_distribution("phi:-1"), UnresolvedSpec);
  EXPECT_THROW(resolve_distribution("phi:two"), UnresolvedSpec);
  EXPECT_THROW(resolve_distribution("span:chi:{0:1}"), UnresolvedSpec);
  EXPECT_THROW(resolve_distribution("span:phi:0:1"), UnresolvedSpec);
}

TEST(Registry, SpanLiterals) {
  const FamilyIndexVector v = resolve_span("span:phi:{ 0 : 1/2 , 2 : -3i, 5: 1+2i }");
  EXPECT_EQ(v.basis, Basis::phi);
  ASSERT_EQ(v.coeffs.size(), 3u);
  EXPECT_EQ(v.coeffs.at(0), ExactScalar(Rational(1, 2)));
  EXPECT_EQ(v.coeffs.at(2), ExactScalar(0, -3));
  EXPECT_EQ(v.coeffs.at(5), ExactScalar(1, 2));
  // Repeated indices accumulate; cancellation removes the entry.
  EXPECT_TRUE(resolve_span("span:psi:{1:2,1:-2}").coeffs.empty());
  EXPECT_TRUE(resolve_span("span:psi:{}").coeffs.empty());
}

TEST(Registry, ComplexCoefficients) {
  EXPECT_EQ(parse_exact_scalar("i"), ExactScalar::imaginary_unit());
  EXPECT_EQ(parse_exact_scalar("-i"), ExactScalar(0, -1));
  EXPECT_EQ(parse_exact_scalar("1/2-3/4i"), ExactScalar(Rational(1, 2), Rational(-3, 4)));
  EXPECT_EQ(parse_exact_scalar("1e-3+i"), ExactScalar(Rational(1, 1000), 1));
  EXPECT_EQ(parse_exact_scalar("-7"), ExactScalar(-7));
  EXPECT_THROW(parse_exact_scalar(""), UnresolvedSpec);
}

TEST(Registry, Operands) {
  EXPECT_TRUE(std::holds_alternative<WeakDistribution>(resolve_operand("psi:2")));
  EXPECT_TRUE(std::holds_alternative<TestFunctionPtr>(resolve_operand("gaussian:alpha=1")));
  EXPECT_THROW(resolve_operand("nothing"), UnresolvedSpec);
}

TEST(Checks, AllSuitesPass) {
  const CheckReport report = run_checks(CheckScope::all);
  EXPECT_TRUE(report.passed());
  std::vector<std::string> rendered;
  for (const auto& l : report.lines) rendered.push_back(l.render());
  EXPECT_NE(std::find(rendered.begin(), rendered.end(), "biorthonormality: pass(n,m<=30)"), rendered.end());
  for (const auto& l : report.lines) EXPECT_TRUE(l.passed) << l.render();
}

TEST(Checks, ScopesSelectSuites) {
  const auto names = [](CheckScope s) {
    std::vector<std::string> out;
    for (const auto& l : run_checks(s).lines) out.push_back(l.identity);
    return out;
  };
  const auto distrib = names(CheckScope::distrib);
  EXPECT_NE(std::find(distrib.begin(), distrib.end(), "weak_commutator"), distrib.end());
  EXPECT_EQ(std::find(distrib.begin(), distrib.end(), "biorthonormality"), distrib.end());
  const auto families = names(CheckScope::families);
  EXPECT_EQ(std::count_if(families.begin(), families.end(),
                          [](const std::string& n) { return n.rfind("span_identity[", 0) == 0; }),
            8);
  EXPECT_THROW(parse_check_scope("bateman"), InvalidArgument);
}

TEST(Checks, InjectedSignFaultIsCaught) {
  CheckOptions options;
  options.inject_x_sign_fault = true;
  const CheckReport report = run_checks(CheckScope::distrib, options);
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.failures(), std::vector<std::string>{"weak_commutator"});
}
