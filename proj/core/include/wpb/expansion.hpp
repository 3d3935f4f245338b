#pragma once

#include "wpb/numeric.hpp"
#include "wpb/test_function.hpp"
#include "wpb/weak_distribution.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wpb {

// ---------------------------------------------------------------------------
// Taylor reconstruction: Σ_{n≤N} ⟨ψ_n, f⟩ φ_n

struct TaylorReconstruction {
  std::vector<Complex> coefficients;      // coefficient of x^n
  std::optional<WeakDistribution> exact;  // set when every pairing was exact
  std::optional<std::pair<double, double>> interval;
  std::optional<double> sup_error;        // max |f − P_N| on the interval
};

/// Builds the degree-N truncation term by term from the pairings ⟨ψ_n, f⟩ and
/// the family members φ_n. The sup-error is sampled on `interval` when the
/// provider can evaluate.
TaylorReconstruction taylor_reconstruct(const TestFunction& f, int truncation,
                                        std::optional<std::pair<double, double>> interval = std::nullopt,
                                        int samples = 2001);

// ---------------------------------------------------------------------------
// Dual Taylor series: Σ (−1)^n μ(n)/n! δ^(n)

struct MomentSequence {
  std::map<int, ExactScalar> values;
  /// μ(n) = 0 for n above the bound; unset means the support is not known to be finite.
  std::optional<int> support_bound;

  static MomentSequence finite(const std::vector<ExactScalar>& values);
  static MomentSequence unbounded(std::map<int, ExactScalar> known);
};

/// Moments ⟨x^n, F⟩ of a class member. Only delta terms have finitely many
/// nonzero moments; polynomial terms throw InfiniteMoments.
MomentSequence moments_of(const WeakDistribution& f);

/// Throws InfiniteMoments when the sequence has no finite support bound.
WeakDistribution dual_taylor(const MomentSequence& moments);

// ---------------------------------------------------------------------------
// Quasi-basis scan: ⟨f, g⟩ against Σ_n ⟨f, φ_n⟩⟨ψ_n, g⟩ (or the mirrored order)

enum class Ordering { phi_psi, psi_phi };
enum class Acceleration { none, euler };
enum class VerdictKind { converged, diverging, inconclusive };

std::string to_string(Ordering o);
std::string to_string(Acceleration a);
std::string to_string(VerdictKind v);

struct Verdict {
  VerdictKind kind = VerdictKind::inconclusive;
  double tolerance = 0;
  std::optional<int> converged_at;  // N* for a converged verdict
};

struct ConvergenceReport {
  Ordering ordering = Ordering::phi_psi;
  Acceleration acceleration = Acceleration::none;
  std::vector<Complex> terms;             // term_n, n = 0..N_max
  std::vector<Complex> raw_partial_sums;  // plain S_N
  std::vector<Complex> partial_sums;      // S_N used for the verdict (accelerated if requested)
  Complex reference;
  std::string reference_note;
  std::vector<Real> residuals;  // |partial_sums[N] − reference|
  Verdict verdict;
};

struct ScanOptions {
  Ordering ordering = Ordering::phi_psi;
  int n_max = 512;
  Acceleration acceleration = Acceleration::none;
  double tolerance = 1e-10;
  int divergence_window = 16;
  double quadrature_tolerance = 1e-13;
};

ConvergenceReport quasi_basis_scan(const TestFunction& f, const TestFunction& g, const ScanOptions& options = {});

/// term_n of the scan for a single index, assembled from the two pairings.
Complex quasi_basis_term(const TestFunction& f, const TestFunction& g, Ordering ordering, int n);

/// (E,1) Euler means σ_m = 2^−m Σ_j C(m,j) s_j of a sequence of partial sums.
std::vector<Complex> euler_means(const std::vector<Complex>& partial_sums);

}  // namespace wpb
