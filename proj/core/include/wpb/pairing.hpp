#pragma once

#include "wpb/exact_scalar.hpp"
#include "wpb/test_function.hpp"
#include "wpb/weak_distribution.hpp"

#include <string>
#include <variant>

namespace wpb {

/// Result of a pairing: an ExactScalar when every ingredient was exact,
/// otherwise a high-precision complex number.
class PairingValue {
 public:
  PairingValue(ExactScalar v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  PairingValue(Complex v) : value_(std::move(v)) {}      // NOLINT(google-explicit-constructor)

  bool exact() const noexcept { return std::holds_alternative<ExactScalar>(value_); }
  const ExactScalar& exact_value() const;
  Complex to_complex() const;
  PairingValue conj() const;
  std::string to_string(unsigned digits) const;

 private:
  std::variant<ExactScalar, Complex> value_;
};

/// ⟨F, G⟩ = (F̄ ∗ G̃)(0), conjugate-linear in F.
///
/// Built from ⟨x^n, δ^(m)⟩ = (−1)^n n! δ_{nm} and Hermitian symmetry for the
/// mirrored order. Throws UndefinedPairing if both arguments carry polynomial
/// terms or both carry delta terms.
PairingValue pair(const WeakDistribution& f, const WeakDistribution& g);

/// ⟨F, f⟩ with ⟨δ^(n), f⟩ = (−1)^n f^(n)(0) and ⟨x^n, f⟩ = ∫ x^n f.
PairingValue pair_dist_fn(const WeakDistribution& dist, const TestFunction& f);
/// ⟨f, F⟩ = conj⟨F, f⟩.
PairingValue pair_fn_dist(const TestFunction& f, const WeakDistribution& dist);

/// ⟨f, g⟩ = ∫ f g by adaptive quadrature over the joint support. Both
/// functions need the eval capability; providers are real-valued.
PairingValue pair_fn_fn(const TestFunction& f, const TestFunction& g, double tolerance = 1e-13);

}  // namespace wpb
