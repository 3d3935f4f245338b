#pragma once

#include "wpb/numeric.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wpb {

struct Capabilities {
  bool taylor = false;   // Taylor coefficients f^(n)(0)/n! (entire functions only)
  bool moments = false;  // ∫ x^n f(x) dx
  bool eval = false;     // pointwise values
};

/// A real test function known through up to three capabilities.
///
/// Implementations are immutable and may be shared across threads. Asking for
/// a capability the provider does not declare throws CapabilityMissing.
class TestFunction {
 public:
  virtual ~TestFunction() = default;

  virtual std::string label() const = 0;
  virtual Capabilities caps() const = 0;

  /// n-th Taylor coefficient at 0, when it is an exact rational.
  virtual std::optional<Rational> taylor_exact(int n) const;
  virtual Real taylor(int n) const;

  /// n-th moment, when it is an exact rational.
  virtual std::optional<Rational> moment_exact(int n) const;
  virtual Real moment(int n) const;

  virtual double eval(double x) const;

  /// Closed interval outside of which the function vanishes, if bounded.
  virtual std::optional<std::pair<double, double>> support() const { return std::nullopt; }

 protected:
  [[noreturn]] void missing(const std::string& capability, const std::string& request) const;
};

using TestFunctionPtr = std::shared_ptr<const TestFunction>;

/// Dense polynomial with rational coefficients, lowest degree first.
using RationalPolynomial = std::vector<Rational>;

/// Parses "1+x^2", "3/2*x^3 - x", "2x" into coefficients.
RationalPolynomial parse_polynomial(std::string_view text);
std::string polynomial_to_string(const RationalPolynomial& p);

/// e^{−αx²}: Taylor coefficients exact, moments Γ(k+1/2)/α^(k+1/2).
TestFunctionPtr make_gaussian(const Rational& alpha);
/// p(x)·e^{−αx²}.
TestFunctionPtr make_poly_gaussian(RationalPolynomial p, const Rational& alpha);
/// Indicator of [a, b]; moments and values only.
TestFunctionPtr make_indicator(const Rational& a, const Rational& b);
/// e^{λx}; Taylor coefficients and values, no moments.
TestFunctionPtr make_exponential(const Rational& lambda);
/// The zero function, with every capability.
TestFunctionPtr make_zero();

Real pi();

}  // namespace wpb
