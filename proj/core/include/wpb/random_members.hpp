#pragma once

#include "wpb/bateman.hpp"
#include "wpb/exact_scalar.hpp"
#include "wpb/families.hpp"
#include "wpb/weak_distribution.hpp"

#include <random>

namespace wpb {

using Rng = std::mt19937_64;

/// p/q with |p| ≤ max_num and 1 ≤ q ≤ max_den.
Rational random_rational(Rng& rng, int max_num = 20, int max_den = 9);
/// Gaussian rational, each part possibly zero; never returns zero overall.
ExactScalar random_scalar(Rng& rng, bool complex = true);
/// Scalar times √r with r square-free from a small pool.
ExactScalar random_radical_scalar(Rng& rng);
/// Up to `max_terms` monomial and delta terms with degree/order ≤ max_order.
WeakDistribution random_distribution(Rng& rng, int max_order = 50, int max_terms = 6);
FamilyIndexVector random_span(Rng& rng, Basis basis, int max_index = 25, int max_terms = 5);
/// m, γ, k drawn so that ω² > 0.
BatemanParams random_bateman_params(Rng& rng);

}  // namespace wpb
