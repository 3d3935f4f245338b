#pragma once

#include "wpb/exact_scalar.hpp"
#include "wpb/test_function.hpp"
#include "wpb/weak_distribution.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wpb {

/// φ_n = x^n / √n!
WeakDistribution phi(int n);
/// ψ_n = (−1)^n δ^(n) / √n!
WeakDistribution psi(int n);

/// N = ba = x̂D̂
WeakDistribution apply_N(const WeakDistribution& f, OrderCap cap = {});
/// N† = a†b† = −D̂x̂
WeakDistribution apply_Ndag(const WeakDistribution& f, OrderCap cap = {});

enum class Basis { phi, psi };
std::string to_string(Basis basis);

/// Finite combination Σ c_k φ_k or Σ c_k ψ_k in family coordinates.
struct FamilyIndexVector {
  Basis basis = Basis::phi;
  std::map<int, ExactScalar> coeffs;

  friend bool operator==(const FamilyIndexVector&, const FamilyIndexVector&) = default;
};

WeakDistribution to_distribution(const FamilyIndexVector& v);
/// Inverse of to_distribution. Throws InvalidArgument if `f` has terms outside
/// the requested family (delta terms for phi, polynomial terms for psi).
FamilyIndexVector from_distribution(const WeakDistribution& f, Basis basis);

/// S_φ(Σ c_k ψ_k) = Σ c_k φ_k. Throws InvalidArgument on a phi-tagged input.
FamilyIndexVector s_phi_span(const FamilyIndexVector& v);
/// S_ψ(Σ c_k φ_k) = Σ c_k ψ_k. Throws InvalidArgument on a psi-tagged input.
FamilyIndexVector s_psi_span(const FamilyIndexVector& v);

/// S_φ and S_ψ acting on distributions that lie in L_ψ and L_φ respectively.
WeakDistribution s_phi(const WeakDistribution& g);
WeakDistribution s_psi(const WeakDistribution& f);

struct NamedResidual {
  std::string identity;
  WeakDistribution residual;
};

/// Residuals of every span identity that applies to `v`:
///   phi-tagged F: S_φS_ψF − F, N†S_ψF − S_ψNF, aF − S_φb†S_ψF, bF − S_φa†S_ψF
///   psi-tagged G: S_ψS_φG − G, NS_φG − S_φN†G, a†G − S_ψbS_φG, b†G − S_ψaS_φG
std::vector<NamedResidual> intertwine_residuals(const FamilyIndexVector& v);

/// Power-series prefix Σ_{n≤N} α_n x^n with α_n = ⟨x^n, F⟩/n!, the image of F
/// under the moment-based extension of S_φ.
struct SeriesExtension {
  std::vector<Real> coefficients;
  std::vector<std::optional<Rational>> exact;  // per-index exact value when known

  /// |α_{n+1}/α_n| over consecutive nonzero coefficients.
  std::vector<Real> ratios() const;
  /// Radius of convergence estimated from the tail ratios (infinite when they vanish).
  Real radius_estimate(int window = 8) const;
  /// Ratio-test certificate that Σ|α_n| R^n converges: the tail ratios times R
  /// stay below one and do not increase across the last `window` pairs.
  bool converges_at(double radius, int window = 8) const;
  Real evaluate(const Real& x) const;
};

SeriesExtension s_phi_extend(const TestFunction& f, int truncation);
/// Exact route for distributions: α_n = ⟨x^n, F⟩ / n! by the convolution
/// pairing. Returns the polynomial Σ α_n x^n.
WeakDistribution s_phi_extend(const WeakDistribution& f, int truncation);

}  // namespace wpb
