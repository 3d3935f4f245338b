#include "wpb/exact_scalar.hpp"

#include "wpb/error.hpp"

#include <vector>

namespace wpb {

namespace {

constexpr unsigned kSieveLimit = 1u << 16;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<unsigned> out;
    for (unsigned p = 2; p <= kSieveLimit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (unsigned long long q = 1ull * p * p; q <= kSieveLimit; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

bool is_perfect_square(const Integer& n, Integer& root) {
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

}  // namespace

SquareFreeParts square_free_parts(const Integer& n) {
  if (n <= 0) throw InvalidArgument("square-free decomposition needs a positive integer");
  Integer rest = n;
  Integer square = 1;
  Integer free = 1;
  for (unsigned p : small_primes()) {
    if (Integer(p) * p > rest) break;
    unsigned exponent = 0;
    while (rest % p == 0) {
      rest /= p;
      ++exponent;
    }
    for (unsigned e = 0; e < exponent / 2; ++e) square *= p;
    if (exponent % 2) free *= p;
  }
  if (rest > 1) {
    Integer root;
    const Integer bound = Integer(kSieveLimit);
    if (is_perfect_square(rest, root)) {
      square *= root;
    } else if (rest < bound * bound * bound) {
      // every prime factor exceeds the sieve limit, so at most two remain and
      // they are distinct (the square case was handled above)
      free *= rest;
    } else {
      throw InvalidArgument("radical " + n.str() + " too large to canonicalize");
    }
  }
  return {square, free};
}

ExactScalar::ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

ExactScalar ExactScalar::with_radical(Rational re, Rational im, const Rational& radical_arg) {
  if (radical_arg <= 0) throw InvalidArgument("radical must be positive");
  // √(p/q) = √(p·q) / q
  const Integer p = numerator(radical_arg);
  const Integer q = denominator(radical_arg);
  const SquareFreeParts parts = square_free_parts(p * q);
  const Rational factor(parts.square, q);
  ExactScalar out(re * factor, im * factor, parts.free);
  out.canonicalize_zero();
  return out;
}

ExactScalar ExactScalar::sqrt(const Rational& q) {
  if (q == 0) return {};
  return with_radical(1, 0, q);
}

ExactScalar ExactScalar::sqrt_factorial(unsigned n) {
  if (n > kSieveLimit) throw InvalidArgument("sqrt_factorial argument too large");
  Integer square = 1;
  Integer free = 1;
  for (unsigned p : small_primes()) {
    if (p > n) break;
    unsigned long exponent = 0;
    for (unsigned long pk = p; pk <= n; pk *= p) exponent += n / pk;
    if (exponent >= 2) square *= boost::multiprecision::pow(Integer(p), static_cast<unsigned>(exponent / 2));
    if (exponent % 2) free *= p;
  }
  return ExactScalar(Rational(square), Rational(0), free);
}

void ExactScalar::canonicalize_zero() {
  if (is_zero()) radical_ = 1;
}

ExactScalar ExactScalar::conj() const { return ExactScalar(re_, -im_, radical_); }

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw InvalidArgument("division by an exact zero");
  // 1/((a+bi)√r) = (a−bi)/(a²+b²) · √r / r
  const Rational n2 = re_ * re_ + im_ * im_;
  const Rational scale = Rational(1) / (n2 * Rational(radical_));
  return ExactScalar(re_ * scale, -im_ * scale, radical_);
}

ExactScalar ExactScalar::operator-() const { return ExactScalar(-re_, -im_, radical_); }

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (radical_ != o.radical_) {
    throw RadicalMismatch("cannot add " + to_string() + " and " + o.to_string() +
                          ": radicals sqrt(" + radical_.str() + ") and sqrt(" + o.radical_.str() +
                          ") differ");
  }
  re_ += o.re_;
  im_ += o.im_;
  canonicalize_zero();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  // √r1·√r2 with square-free r1, r2: g = gcd, result g·√((r1/g)(r2/g)),
  // and the cofactors are coprime and square-free.
  const Integer g = boost::multiprecision::gcd(radical_, o.radical_);
  const Integer free = (radical_ / g) * (o.radical_ / g);
  re_ = std::move(re) * Rational(g);
  im_ = std::move(im) * Rational(g);
  radical_ = free;
  canonicalize_zero();
  return *this;
}

Complex ExactScalar::to_complex() const {
  Complex z(to_real(re_), to_real(im_));
  if (radical_ != 1) {
    const Real s = boost::multiprecision::sqrt(to_real(radical_));
    z.re *= s;
    z.im *= s;
  }
  return z;
}

std::string ExactScalar::to_string() const {
  std::string body;
  if (im_ == 0) {
    body = wpb::to_string(re_);
  } else {
    std::string imag;
    if (im_ == 1) {
      imag = "i";
    } else if (im_ == -1) {
      imag = "-i";
    } else {
      imag = wpb::to_string(im_) + "i";
    }
    if (re_ == 0) {
      body = imag;
    } else {
      body = wpb::to_string(re_) + (im_ > 0 ? "+" : "") + imag;
    }
  }
  if (radical_ == 1) return body;
  const std::string root = "sqrt(" + radical_.str() + ")";
  if (im_ == 0 && re_ == 1) return root;
  if (im_ == 0 && re_ == -1) return "-" + root;
  if (im_ != 0 && re_ != 0) return "(" + body + ")*" + root;
  return body + "*" + root;
}

}  // namespace wpb
