#include "wpb/random_members.hpp"

namespace wpb {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Rational random_rational(Rng& rng, int max_num, int max_den) {
  return Rational(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
}

ExactScalar random_scalar(Rng& rng, bool complex) {
  for (;;) {
    ExactScalar c(random_rational(rng), complex && uniform(rng, 0, 1) ? random_rational(rng) : Rational(0));
    if (!c.is_zero()) return c;
  }
}

ExactScalar random_radical_scalar(Rng& rng) {
  static const int pool[] = {1, 2, 3, 5, 6, 7, 10, 12, 18, 50};
  const ExactScalar c = random_scalar(rng);
  return c * ExactScalar::sqrt(Rational(pool[uniform(rng, 0, 9)]));
}

WeakDistribution random_distribution(Rng& rng, int max_order, int max_terms) {
  WeakDistribution out;
  const int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    const int n = uniform(rng, 0, max_order);
    if (uniform(rng, 0, 1)) {
      out += WeakDistribution::monomial(n, random_scalar(rng));
    } else {
      out += WeakDistribution::delta(n, random_scalar(rng));
    }
  }
  return out;
}

FamilyIndexVector random_span(Rng& rng, Basis basis, int max_index, int max_terms) {
  FamilyIndexVector v;
  v.basis = basis;
  const int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) v.coeffs.insert_or_assign(uniform(rng, 0, max_index), random_scalar(rng));
  return v;
}

BatemanParams random_bateman_params(Rng& rng) {
  const Rational m(uniform(rng, 1, 12), uniform(rng, 1, 4));
  const Rational gamma(uniform(rng, 0, 20), uniform(rng, 1, 8));
  // k above the critical value γ²/(4m) keeps ω² strictly positive.
  const Rational k = gamma * gamma / (4 * m) + Rational(uniform(rng, 1, 30), uniform(rng, 1, 6));
  return BatemanParams::create(m, gamma, k);
}

}  // namespace wpb
