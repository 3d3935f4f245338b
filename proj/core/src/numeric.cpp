#include "wpb/numeric.hpp"

#include "wpb/error.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

namespace wpb {

PrecisionScope::PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
  if (digits10 < 10) {
    throw InvalidArgument("precision must be at least 10 decimal digits");
  }
  Real::default_precision(digits10);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

unsigned precision_digits() { return Real::default_precision(); }

Real Complex::abs() const {
  if (im == 0) return boost::multiprecision::abs(re);
  if (re == 0) return boost::multiprecision::abs(im);
  return boost::multiprecision::sqrt(norm());
}

Complex& Complex::operator/=(const Complex& o) {
  const Real d = o.norm();
  if (d == 0) throw InvalidArgument("complex division by zero");
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Real to_real(const Rational& q) { return Real(q); }

Real to_real(const Integer& n) { return Real(n); }

Integer factorial(unsigned n) {
  Integer out = 1;
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw UnresolvedSpec("malformed number '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw UnresolvedSpec("malformed number '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(text.substr(0, slash), whole);
    const Integer den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw UnresolvedSpec("zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_part = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
        exp_negative = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      exponent = parse_integer(exp_part, whole).convert_to<long>();
      if (exp_negative) exponent = -exponent;
      text = text.substr(0, e);
    }
    std::string digits(text);
    if (auto dot = digits.find('.'); dot != std::string::npos) {
      exponent -= static_cast<long>(digits.size() - dot - 1);
      digits.erase(dot, 1);
    }
    Integer mantissa = parse_integer(digits, whole);
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    value = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Real& x, unsigned digits) {
  std::ostringstream os;
  os << std::setprecision(static_cast<int>(digits)) << x;
  return os.str();
}

std::string to_string(const Complex& z, unsigned digits) {
  if (z.im == 0) return to_string(z.re, digits);
  std::string out = to_string(z.re, digits);
  const bool neg = z.im < 0;
  out += neg ? "-" : "+";
  out += to_string(neg ? Real(-z.im) : z.im, digits);
  out += "i";
  return out;
}

}  // namespace wpb
