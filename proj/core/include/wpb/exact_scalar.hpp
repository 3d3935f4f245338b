#pragma once

#include "wpb/numeric.hpp"

#include <string>
#include <utility>

namespace wpb {

/// Exact complex scalar (re + i·im)·√radical with rational re, im and a
/// square-free positive integer radical.
///
/// The representation is canonical: the radical never contains a square
/// factor and zero always carries radical 1, so structural equality is value
/// equality. Products stay in the set; sums are defined only between scalars
/// sharing a radical (zero is compatible with every radical).
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(Rational re, Rational im = 0);  // NOLINT(google-explicit-constructor)
  ExactScalar(long value) : ExactScalar(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(int value) : ExactScalar(Rational(value)) {}   // NOLINT(google-explicit-constructor)

  /// (re + i·im)·√radical_arg for any positive rational radical_arg.
  static ExactScalar with_radical(Rational re, Rational im, const Rational& radical_arg);
  /// √q for a positive rational q.
  static ExactScalar sqrt(const Rational& q);
  /// √(n!), factored through Legendre's formula so no trial division is needed.
  static ExactScalar sqrt_factorial(unsigned n);
  static ExactScalar imaginary_unit() { return ExactScalar(Rational(0), Rational(1)); }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }
  const Integer& radical() const noexcept { return radical_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_rational() const { return im_ == 0 && radical_ == 1; }

  ExactScalar conj() const;
  ExactScalar inverse() const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_ && a.radical_ == b.radical_;
  }

  Complex to_complex() const;
  /// "3/2", "-i", "(1+2i)*sqrt(6)", ...
  std::string to_string() const;

 private:
  ExactScalar(Rational re, Rational im, Integer radical)
      : re_(std::move(re)), im_(std::move(im)), radical_(std::move(radical)) {}
  void canonicalize_zero();

  Rational re_{0};
  Rational im_{0};
  Integer radical_{1};
};

/// Square-free decomposition n = square² · free. Exact for every n whose
/// prime factors above 2^16 number at most two; larger composites are rejected.
struct SquareFreeParts {
  Integer square;
  Integer free;
};
SquareFreeParts square_free_parts(const Integer& n);

}  // namespace wpb
