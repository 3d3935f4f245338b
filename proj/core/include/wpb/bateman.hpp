#pragma once

#include "wpb/fock.hpp"
#include "wpb/numeric.hpp"

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wpb {

/// Damped-oscillator parameters with ℏ = 1. Only the underdamped regime
/// ω² = k/m − γ²/(4m²) > 0 is accepted.
class BatemanParams {
 public:
  static BatemanParams create(const Rational& m, const Rational& gamma, const Rational& k);

  const Rational& m() const noexcept { return m_; }
  const Rational& gamma() const noexcept { return gamma_; }
  const Rational& k() const noexcept { return k_; }
  const Rational& omega_squared() const noexcept { return omega_sq_; }
  /// ω at the current working precision.
  Real omega() const;

 private:
  BatemanParams(Rational m, Rational gamma, Rational k, Rational omega_sq);
  Rational m_, gamma_, k_, omega_sq_;
};

struct BosonicModes {
  FockOperator a1, a2;
};

struct PseudoBosonicModes {
  FockOperator A1, A2, B1, B2;
};

BosonicModes build_bosonic(int cutoff);
PseudoBosonicModes build_pb(const BatemanParams& params, int cutoff);

/// ω(a1†a1 − a2†a2) + (iγ/2m)(a1a2 − a1†a2†).
FockOperator hamiltonian_bosonic(const BatemanParams& params, int cutoff);
/// ω(B1A1 − B2A2) + (iγ/2m)(B1A1 + B2A2 + 1).
FockOperator hamiltonian_pb(const BatemanParams& params, int cutoff);

/// Σ_{n≤N} |n,n⟩, unnormalized.
FockVector diagonal_sum_state(int cutoff, int top);

struct KernelScanRow {
  int cutoff = 0;
  Real sigma_pair_a;     // stacked (A1, A2)
  Real sigma_single_a1;  // A1 alone
  Real sigma_pair_bdag;  // stacked (B1†, B2†)
  Real sigma_single_b1dag;
};

/// σ_min on SafeSubspace(T − 1) for every T in `cutoffs` (each T ≥ 4).
std::vector<KernelScanRow> joint_kernel_scan(const BatemanParams& params, const std::vector<int>& cutoffs);

/// Polynomial in (x1, x2) with exact coefficients, keyed by exponent pair.
struct Poly2 {
  std::map<std::pair<int, int>, Rational> terms;

  Poly2() = default;
  Poly2(std::initializer_list<std::pair<const std::pair<int, int>, Rational>> init) : terms(init) {}
  int degree() const;
  std::string to_string() const;
};

enum class Vacuum { phi00, psi00 };
std::string to_string(Vacuum v);

/// Weak annihilation residual of the candidate vacuum against
/// f = p(x1,x2)·exp(−(x1²+x2²)/2). For phi00 the candidate is δ(x1 − x2 − shift)
/// tested with A_j; for psi00 it is δ(x1 + x2 + shift) tested with B_j†.
/// The residual is computed as the integral of the adjoint action on f along
/// the support line.
std::complex<double> weak_vacuum_residual(const BatemanParams& params, Vacuum which, const Poly2& p, int j,
                                          const Rational& shift = 0);

/// Twelve fixed polynomial weights of degree ≤ 8.
std::vector<Poly2> vacuum_battery();

struct VacuumBatteryResult {
  double max_residual = 0;
  std::vector<double> residuals;  // per polynomial, max over j = 1, 2
};

VacuumBatteryResult run_vacuum_battery(const BatemanParams& params, Vacuum which, const Rational& shift = 0);

}  // namespace wpb
