#include "wpb/families.hpp"

#include "wpb/error.hpp"
#include "wpb/pairing.hpp"

#include <algorithm>

namespace wpb {

namespace {

void require_nonnegative(int n) {
  if (n < 0) throw InvalidArgument("family index must be non-negative");
}

ExactScalar inverse_sqrt_factorial(int n) { return ExactScalar::sqrt_factorial(static_cast<unsigned>(n)).inverse(); }

ExactScalar sign(int n) { return ExactScalar(n % 2 ? -1 : 1); }

}  // namespace

WeakDistribution phi(int n) {
  require_nonnegative(n);
  return WeakDistribution::monomial(n, inverse_sqrt_factorial(n));
}

WeakDistribution psi(int n) {
  require_nonnegative(n);
  return WeakDistribution::delta(n, sign(n) * inverse_sqrt_factorial(n));
}

WeakDistribution apply_N(const WeakDistribution& f, OrderCap cap) { return apply_x(apply_D(f, cap), cap); }

WeakDistribution apply_Ndag(const WeakDistribution& f, OrderCap cap) { return -apply_D(apply_x(f, cap), cap); }

std::string to_string(Basis basis) { return basis == Basis::phi ? "phi" : "psi"; }

WeakDistribution to_distribution(const FamilyIndexVector& v) {
  WeakDistribution out;
  for (const auto& [k, c] : v.coeffs) {
    if (c.is_zero()) continue;
    out += c * (v.basis == Basis::phi ? phi(k) : psi(k));
  }
  return out;
}

FamilyIndexVector from_distribution(const WeakDistribution& f, Basis basis) {
  FamilyIndexVector out{basis, {}};
  if (basis == Basis::phi) {
    if (f.has_delta()) throw InvalidArgument("distribution " + f.to_string() + " is not in the phi span");
    // x^k = √k! φ_k
    for (const auto& [k, c] : f.poly()) out.coeffs.emplace(k, c * ExactScalar::sqrt_factorial(k));
  } else {
    if (f.has_poly()) throw InvalidArgument("distribution " + f.to_string() + " is not in the psi span");
    // δ^(k) = (−1)^k √k! ψ_k
    for (const auto& [k, c] : f.delta()) out.coeffs.emplace(k, c * sign(k) * ExactScalar::sqrt_factorial(k));
  }
  return out;
}

FamilyIndexVector s_phi_span(const FamilyIndexVector& v) {
  if (v.basis != Basis::psi) throw InvalidArgument("S_phi acts on psi-tagged spans");
  return {Basis::phi, v.coeffs};
}

FamilyIndexVector s_psi_span(const FamilyIndexVector& v) {
  if (v.basis != Basis::phi) throw InvalidArgument("S_psi acts on phi-tagged spans");
  return {Basis::psi, v.coeffs};
}

WeakDistribution s_phi(const WeakDistribution& g) {
  return to_distribution(s_phi_span(from_distribution(g, Basis::psi)));
}

WeakDistribution s_psi(const WeakDistribution& f) {
  return to_distribution(s_psi_span(from_distribution(f, Basis::phi)));
}

std::vector<NamedResidual> intertwine_residuals(const FamilyIndexVector& v) {
  const WeakDistribution x = to_distribution(v);
  std::vector<NamedResidual> out;
  if (v.basis == Basis::phi) {
    const WeakDistribution& F = x;
    out.push_back({"S_phi S_psi F = F", s_phi(s_psi(F)) - F});
    out.push_back({"Ndag S_psi F = S_psi N F", apply_Ndag(s_psi(F)) - s_psi(apply_N(F))});
    out.push_back({"a F = S_phi b_dag S_psi F", apply_atom(Ladder::a, F) - s_phi(apply_atom(Ladder::b_dag, s_psi(F)))});
    out.push_back({"b F = S_phi a_dag S_psi F", apply_atom(Ladder::b, F) - s_phi(apply_atom(Ladder::a_dag, s_psi(F)))});
  } else {
    const WeakDistribution& G = x;
    out.push_back({"S_psi S_phi G = G", s_psi(s_phi(G)) - G});
    out.push_back({"N S_phi G = S_phi Ndag G", apply_N(s_phi(G)) - s_phi(apply_Ndag(G))});
    out.push_back({"a_dag G = S_psi b S_phi G", apply_atom(Ladder::a_dag, G) - s_psi(apply_atom(Ladder::b, s_phi(G)))});
    out.push_back({"b_dag G = S_psi a S_phi G", apply_atom(Ladder::b_dag, G) - s_psi(apply_atom(Ladder::a, s_phi(G)))});
  }
  return out;
}

std::vector<Real> SeriesExtension::ratios() const {
  std::vector<Real> out;
  std::optional<std::size_t> prev;
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    if (coefficients[n] == 0) continue;
    if (prev) {
      out.push_back(boost::multiprecision::abs(coefficients[n] / coefficients[*prev]));
    }
    prev = n;
  }
  return out;
}

Real SeriesExtension::radius_estimate(int window) const {
  const std::vector<Real> r = ratios();
  if (r.empty()) return std::numeric_limits<Real>::infinity();
  const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(window), r.size());
  Real tail = 0;
  for (std::size_t i = r.size() - take; i < r.size(); ++i) tail = std::max(tail, r[i]);
  if (tail == 0) return std::numeric_limits<Real>::infinity();
  return 1 / tail;
}

bool SeriesExtension::converges_at(double radius, int window) const {
  const std::vector<Real> r = ratios();
  // a finite polynomial converges everywhere
  if (r.size() < static_cast<std::size_t>(window)) return true;
  const std::size_t start = r.size() - static_cast<std::size_t>(window);
  for (std::size_t i = start; i < r.size(); ++i) {
    if (r[i] * radius >= 1) return false;
    if (i > start && r[i] > r[i - 1]) return false;
  }
  return true;
}

Real SeriesExtension::evaluate(const Real& x) const {
  Real out = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) out = out * x + *it;
  return out;
}

SeriesExtension s_phi_extend(const TestFunction& f, int truncation) {
  if (truncation < 0) throw InvalidArgument("truncation must be non-negative");
  if (!f.caps().moments) throw CapabilityMissing("moments", "'" + f.label() + "' has no moments to extend S_phi");
  SeriesExtension out;
  out.coefficients.reserve(static_cast<std::size_t>(truncation) + 1);
  for (int n = 0; n <= truncation; ++n) {
    const Integer nf = factorial(static_cast<unsigned>(n));
    if (auto m = f.moment_exact(n)) {
      const Rational alpha = *m / Rational(nf);
      out.exact.emplace_back(alpha);
      out.coefficients.push_back(to_real(alpha));
    } else {
      out.exact.emplace_back(std::nullopt);
      out.coefficients.push_back(f.moment(n) / to_real(nf));
    }
  }
  return out;
}

WeakDistribution s_phi_extend(const WeakDistribution& f, int truncation) {
  if (truncation < 0) throw InvalidArgument("truncation must be non-negative");
  WeakDistribution out;
  for (int n = 0; n <= truncation; ++n) {
    const PairingValue moment = pair(WeakDistribution::monomial(n), f);
    const ExactScalar alpha = moment.exact_value() / ExactScalar(Rational(factorial(static_cast<unsigned>(n))));
    out += WeakDistribution::monomial(n, alpha);
  }
  return out;
}

}  // namespace wpb
