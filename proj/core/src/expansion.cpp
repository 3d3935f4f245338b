#include "wpb/expansion.hpp"

#include "wpb/error.hpp"
#include "wpb/families.hpp"
#include "wpb/pairing.hpp"

#include <algorithm>

namespace wpb {

// ---------------------------------------------------------------------------

TaylorReconstruction taylor_reconstruct(const TestFunction& f, int truncation,
                                        std::optional<std::pair<double, double>> interval, int samples) {
  if (truncation < 0) throw InvalidArgument("truncation must be non-negative");
  if (!f.caps().taylor) throw CapabilityMissing("taylor", "'" + f.label() + "' has no Taylor data to reconstruct");
  TaylorReconstruction out;
  WeakDistribution exact;
  bool all_exact = true;
  for (int n = 0; n <= truncation; ++n) {
    const WeakDistribution basis = phi(n);
    const PairingValue weight = pair_dist_fn(psi(n), f);
    if (weight.exact()) {
      const WeakDistribution term = weight.exact_value() * basis;
      exact += term;
      out.coefficients.push_back(term.poly_coefficient(n).to_complex());
    } else {
      all_exact = false;
      out.coefficients.push_back(weight.to_complex() * basis.poly_coefficient(n).to_complex());
    }
  }
  if (all_exact) out.exact = std::move(exact);

  if (interval && f.caps().eval) {
    if (!(interval->first <= interval->second) || samples < 2) {
      throw InvalidArgument("sup-error interval must be ordered and sampled at least twice");
    }
    std::vector<double> coeffs;
    for (const Complex& c : out.coefficients) coeffs.push_back(c.re.convert_to<double>());
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
      const double x = interval->first + (interval->second - interval->first) * i / (samples - 1);
      double p = 0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) p = p * x + *it;
      worst = std::max(worst, std::abs(f.eval(x) - p));
    }
    out.interval = interval;
    out.sup_error = worst;
  }
  return out;
}

// ---------------------------------------------------------------------------

MomentSequence MomentSequence::finite(const std::vector<ExactScalar>& values) {
  MomentSequence out;
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (!values[n].is_zero()) out.values.emplace(static_cast<int>(n), values[n]);
  }
  out.support_bound = static_cast<int>(values.size()) - 1;
  return out;
}

MomentSequence MomentSequence::unbounded(std::map<int, ExactScalar> known) {
  MomentSequence out;
  out.values = std::move(known);
  return out;
}

MomentSequence moments_of(const WeakDistribution& f) {
  if (f.has_poly()) {
    throw InfiniteMoments("moments of " + f.to_string() + " diverge; polynomial terms have no finite moments");
  }
  MomentSequence out;
  out.support_bound = f.max_order();
  for (const auto& [n, c] : f.delta()) {
    const PairingValue m = pair(WeakDistribution::monomial(n), f);
    if (!m.exact_value().is_zero()) out.values.emplace(n, m.exact_value());
  }
  return out;
}

WeakDistribution dual_taylor(const MomentSequence& moments) {
  if (!moments.support_bound) {
    throw InfiniteMoments("dual Taylor series needs finitely many nonzero moments; the sequence is unbounded");
  }
  WeakDistribution out;
  for (const auto& [n, mu] : moments.values) {
    if (n > *moments.support_bound) {
      throw InvalidArgument("moment index " + std::to_string(n) + " lies above the declared support bound");
    }
    ExactScalar c = mu / ExactScalar(Rational(factorial(static_cast<unsigned>(n))));
    if (n % 2) c = -c;
    out += WeakDistribution::delta(n, c);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(Ordering o) { return o == Ordering::phi_psi ? "phi_psi" : "psi_phi"; }

std::string to_string(Acceleration a) { return a == Acceleration::none ? "none" : "euler"; }

std::string to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::converged:
      return "converged";
    case VerdictKind::diverging:
      return "diverging";
    case VerdictKind::inconclusive:
      return "inconclusive";
  }
  return "?";
}

Complex quasi_basis_term(const TestFunction& f, const TestFunction& g, Ordering ordering, int n) {
  if (ordering == Ordering::phi_psi) {
    // ⟨f, φ_n⟩⟨ψ_n, g⟩
    return pair_fn_dist(f, phi(n)).to_complex() * pair_dist_fn(psi(n), g).to_complex();
  }
  // ⟨f, ψ_n⟩⟨φ_n, g⟩
  return pair_fn_dist(f, psi(n)).to_complex() * pair_dist_fn(phi(n), g).to_complex();
}

std::vector<Complex> euler_means(const std::vector<Complex>& partial_sums) {
  std::vector<Complex> out;
  out.reserve(partial_sums.size());
  std::vector<Real> weights;  // C(m, j) / 2^m
  for (std::size_t m = 0; m < partial_sums.size(); ++m) {
    // Pascal step on normalized weights: w'_j = (w_{j−1} + w_j)/2
    if (m == 0) {
      weights.assign(1, Real(1));
    } else {
      std::vector<Real> next(m + 1, Real(0));
      for (std::size_t j = 0; j <= m; ++j) {
        Real w = 0;
        if (j < m) w += weights[j];
        if (j > 0) w += weights[j - 1];
        next[j] = w / 2;
      }
      weights = std::move(next);
    }
    Complex sigma;
    for (std::size_t j = 0; j <= m; ++j) {
      sigma.re += weights[j] * partial_sums[j].re;
      sigma.im += weights[j] * partial_sums[j].im;
    }
    out.push_back(std::move(sigma));
  }
  return out;
}

namespace {

bool is_zero(const Complex& z) { return z.re == 0 && z.im == 0; }

}  // namespace

ConvergenceReport quasi_basis_scan(const TestFunction& f, const TestFunction& g, const ScanOptions& options) {
  if (options.n_max < 0) throw InvalidArgument("n_max must be non-negative");
  if (options.tolerance <= 0) throw InvalidArgument("tolerance must be positive");
  if (options.divergence_window < 2) throw InvalidArgument("divergence window must be at least 2");
  const TestFunction& moment_side = options.ordering == Ordering::phi_psi ? f : g;
  const TestFunction& taylor_side = options.ordering == Ordering::phi_psi ? g : f;
  if (!moment_side.caps().moments) {
    throw CapabilityMissing("moments", "'" + moment_side.label() + "' must provide moments for ordering " +
                                           to_string(options.ordering));
  }
  if (!taylor_side.caps().taylor) {
    throw CapabilityMissing("taylor", "'" + taylor_side.label() + "' must provide Taylor data for ordering " +
                                          to_string(options.ordering));
  }

  ConvergenceReport report;
  report.ordering = options.ordering;
  report.acceleration = options.acceleration;

  Complex running;
  for (int n = 0; n <= options.n_max; ++n) {
    Complex t = quasi_basis_term(f, g, options.ordering, n);
    running += t;
    report.terms.push_back(std::move(t));
    report.raw_partial_sums.push_back(running);
  }

  const PairingValue ref = pair_fn_fn(f, g, options.quadrature_tolerance);
  report.reference = ref.to_complex();
  report.reference_note = "adaptive Gauss-Kronrod quadrature of conj(f)*g, target tolerance " +
                          to_string(Real(options.quadrature_tolerance), 3);

  // Exact zero terms (odd moments of even functions, ...) are skipped both by
  // the accelerator and by the divergence window.
  std::vector<std::size_t> nonzero;
  for (std::size_t n = 0; n < report.terms.size(); ++n) {
    if (!is_zero(report.terms[n])) nonzero.push_back(n);
  }

  if (options.acceleration == Acceleration::euler) {
    std::vector<Complex> compressed;
    for (std::size_t n : nonzero) compressed.push_back(report.raw_partial_sums[n]);
    const std::vector<Complex> means = euler_means(compressed);
    report.partial_sums.reserve(report.terms.size());
    std::size_t m = 0;
    Complex current;
    for (std::size_t n = 0; n < report.terms.size(); ++n) {
      if (m < nonzero.size() && nonzero[m] == n) current = means[m++];
      report.partial_sums.push_back(current);
    }
  } else {
    report.partial_sums = report.raw_partial_sums;
  }

  for (const Complex& s : report.partial_sums) report.residuals.push_back((s - report.reference).abs());

  report.verdict.tolerance = options.tolerance;
  const auto window = static_cast<std::size_t>(options.divergence_window);
  bool diverging = false;
  if (nonzero.size() >= window) {
    diverging = true;
    for (std::size_t i = nonzero.size() - window + 1; i < nonzero.size(); ++i) {
      if (!(report.terms[nonzero[i]].abs() > report.terms[nonzero[i - 1]].abs())) {
        diverging = false;
        break;
      }
    }
  }
  if (diverging) {
    report.verdict.kind = VerdictKind::diverging;
    return report;
  }
  std::optional<int> since;
  for (std::size_t n = 0; n < report.residuals.size(); ++n) {
    if (report.residuals[n] < options.tolerance) {
      if (!since) since = static_cast<int>(n);
    } else {
      since.reset();
    }
  }
  if (since) {
    report.verdict.kind = VerdictKind::converged;
    report.verdict.converged_at = since;
  }
  return report;
}

}  // namespace wpb
