#include "wpb/pairing.hpp"

#include "wpb/error.hpp"
#include "wpb/quadrature.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace wpb {

namespace {

// Exact running sum that degrades to a complex accumulator when two terms
// carry different radicals.
class MixedSum {
 public:
  void add(const ExactScalar& term) {
    if (exact_) {
      try {
        *exact_ += term;
        return;
      } catch (const RadicalMismatch&) {
        approx_ = exact_->to_complex();
        exact_.reset();
      }
    }
    approx_ += term.to_complex();
  }

  void add(const Complex& term) {
    if (exact_) {
      approx_ = exact_->to_complex();
      exact_.reset();
    }
    approx_ += term;
  }

  PairingValue result() const {
    if (exact_) return PairingValue(*exact_);
    return PairingValue(approx_);
  }

 private:
  std::optional<ExactScalar> exact_ = ExactScalar{};
  Complex approx_;
};

ExactScalar signed_factorial(int n) {
  const ExactScalar f(Rational(factorial(static_cast<unsigned>(n))));
  return n % 2 ? -f : f;
}

}  // namespace

const ExactScalar& PairingValue::exact_value() const {
  if (!exact()) throw InvalidArgument("pairing value is not exact");
  return std::get<ExactScalar>(value_);
}

Complex PairingValue::to_complex() const {
  if (exact()) return std::get<ExactScalar>(value_).to_complex();
  return std::get<Complex>(value_);
}

PairingValue PairingValue::conj() const {
  if (exact()) return PairingValue(std::get<ExactScalar>(value_).conj());
  return PairingValue(std::get<Complex>(value_).conj());
}

std::string PairingValue::to_string(unsigned digits) const {
  if (exact()) return std::get<ExactScalar>(value_).to_string();
  return wpb::to_string(std::get<Complex>(value_), digits);
}

PairingValue pair(const WeakDistribution& f, const WeakDistribution& g) {
  if (f.has_poly() && g.has_poly()) {
    throw UndefinedPairing("pairing of two polynomial parts diverges: <" + f.to_string() + ", " +
                           g.to_string() + ">");
  }
  if (f.has_delta() && g.has_delta()) {
    throw UndefinedPairing("pairing of two delta parts is undefined: <" + f.to_string() + ", " +
                           g.to_string() + ">");
  }
  MixedSum sum;
  // ⟨x^n, δ^(n)⟩ = (−1)^n n!, conjugate-linear in the first slot
  for (const auto& [n, c] : f.poly()) {
    auto it = g.delta().find(n);
    if (it != g.delta().end()) sum.add(c.conj() * it->second * signed_factorial(n));
  }
  // ⟨δ^(n), x^n⟩ by Hermitian symmetry; the kernel value is real
  for (const auto& [n, c] : f.delta()) {
    auto it = g.poly().find(n);
    if (it != g.poly().end()) sum.add(c.conj() * it->second * signed_factorial(n));
  }
  return sum.result();
}

PairingValue pair_dist_fn(const WeakDistribution& dist, const TestFunction& f) {
  const Capabilities caps = f.caps();
  if (dist.has_delta() && !caps.taylor) {
    throw CapabilityMissing("taylor", "'" + f.label() + "' has no Taylor data for the delta term of order " +
                                          std::to_string(dist.delta().rbegin()->first));
  }
  if (dist.has_poly() && !caps.moments) {
    throw CapabilityMissing("moments", "'" + f.label() + "' has no moments for the x^" +
                                           std::to_string(dist.poly().rbegin()->first) + " term");
  }
  MixedSum sum;
  for (const auto& [n, c] : dist.poly()) {
    if (auto m = f.moment_exact(n)) {
      sum.add(c.conj() * ExactScalar(*m));
    } else {
      sum.add(c.conj().to_complex() * Complex(f.moment(n)));
    }
  }
  // ⟨δ^(n), f⟩ = (−1)^n f^(n)(0) = (−1)^n n! · taylor(n)
  for (const auto& [n, c] : dist.delta()) {
    if (auto t = f.taylor_exact(n)) {
      sum.add(c.conj() * signed_factorial(n) * ExactScalar(*t));
    } else {
      sum.add(c.conj().to_complex() * signed_factorial(n).to_complex() * Complex(f.taylor(n)));
    }
  }
  return sum.result();
}

PairingValue pair_fn_dist(const TestFunction& f, const WeakDistribution& dist) {
  return pair_dist_fn(dist, f).conj();
}

PairingValue pair_fn_fn(const TestFunction& f, const TestFunction& g, double tolerance) {
  if (!f.caps().eval) throw CapabilityMissing("eval", "'" + f.label() + "' cannot be integrated");
  if (!g.caps().eval) throw CapabilityMissing("eval", "'" + g.label() + "' cannot be integrated");
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const auto& s : {f.support(), g.support()}) {
    if (s) {
      lo = std::max(lo, s->first);
      hi = std::min(hi, s->second);
    }
  }
  if (!(lo < hi)) return PairingValue(Complex(0.0));
  const QuadratureResult q = integrate([&](double x) { return f.eval(x) * g.eval(x); }, lo, hi, tolerance);
  return PairingValue(Complex(Real(q.value)));
}

}  // namespace wpb
