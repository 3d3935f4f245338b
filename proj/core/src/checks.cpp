#include "wpb/checks.hpp"

#include "wpb/error.hpp"
#include "wpb/families.hpp"
#include "wpb/pairing.hpp"
#include "wpb/quadrature.hpp"
#include "wpb/random_members.hpp"
#include "wpb/test_function.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace wpb {

CheckScope parse_check_scope(const std::string& text) {
  if (text == "distrib") return CheckScope::distrib;
  if (text == "pairing") return CheckScope::pairing;
  if (text == "families") return CheckScope::families;
  if (text == "all") return CheckScope::all;
  throw InvalidArgument("unknown check scope '" + text + "'");
}

std::string to_string(CheckScope scope) {
  switch (scope) {
    case CheckScope::distrib: return "distrib";
    case CheckScope::pairing: return "pairing";
    case CheckScope::families: return "families";
    case CheckScope::all: return "all";
  }
  return "?";
}

std::string CheckLine::render() const { return identity + ": " + (passed ? "pass(" : "FAIL(") + detail + ")"; }

bool CheckReport::passed() const {
  for (const auto& l : lines) {
    if (!l.passed) return false;
  }
  return true;
}

std::vector<std::string> CheckReport::failures() const {
  std::vector<std::string> out;
  for (const auto& l : lines) {
    if (!l.passed) out.push_back(l.identity);
  }
  return out;
}

namespace {

using Lines = std::vector<CheckLine>;

// Runs `body` and turns any library error into a failed line.
void record(Lines& lines, const std::string& identity, const std::string& detail, const std::function<bool()>& body) {
  try {
    lines.push_back({identity, body(), detail});
  } catch (const std::exception& e) {
    lines.push_back({identity, false, detail + "; error: " + e.what()});
  }
}

void distrib_suite(Lines& lines, const CheckOptions& options) {
  Rng rng(options.seed);
  const auto x_op = [&](const WeakDistribution& f) {
    return options.inject_x_sign_fault ? -apply_x(f) : apply_x(f);
  };

  record(lines, "weak_commutator", "1000 random members, degree/order<=50", [&] {
    for (int i = 0; i < 1000; ++i) {
      const WeakDistribution f = random_distribution(rng, 50);
      if (!(apply_D(x_op(f)) - x_op(apply_D(f)) - f).is_zero()) return false;
    }
    return true;
  });

  record(lines, "weak_commutator_basis", "x^n and delta^(n), n<=50", [] {
    for (int n = 0; n <= 50; ++n) {
      if (!commutator_residual(WeakDistribution::monomial(n)).is_zero()) return false;
      if (!commutator_residual(WeakDistribution::delta(n)).is_zero()) return false;
    }
    return true;
  });

  record(lines, "x_delta_rule", "x*delta^(n) = -n*delta^(n-1), n<=50", [] {
    for (int n = 0; n <= 50; ++n) {
      const WeakDistribution expected =
          n == 0 ? WeakDistribution() : WeakDistribution::delta(n - 1, ExactScalar(-n));
      if (apply_x(WeakDistribution::delta(n)) != expected) return false;
    }
    return true;
  });

  record(lines, "ladder_word_commutator", "[a,b]F = F via apply_word, 200 random members", [&] {
    for (int i = 0; i < 200; ++i) {
      const WeakDistribution f = random_distribution(rng, 50);
      const WeakDistribution r =
          apply_word({Ladder::a, Ladder::b}, f) - apply_word({Ladder::b, Ladder::a}, f) - f;
      if (!r.is_zero()) return false;
    }
    return true;
  });

  record(lines, "scalar_radical_canonical", "1000 random products square-free and equality an equivalence", [&] {
    for (int i = 0; i < 1000; ++i) {
      const ExactScalar p = random_radical_scalar(rng);
      const ExactScalar q = random_radical_scalar(rng);
      const ExactScalar pq = p * q;
      const auto parts = square_free_parts(pq.radical());
      if (parts.square != 1) return false;
      if (!(pq == pq) || !((q * p) == pq)) return false;
      const ExactScalar again = (p * ExactScalar(2)) * q * ExactScalar(Rational(1, 2));
      if (!(again == pq) || !(pq == again)) return false;
    }
    return true;
  });
}

void pairing_suite(Lines& lines, const CheckOptions& options) {
  Rng rng(options.seed + 1);

  record(lines, "biorthonormality", "n,m<=30", [] {
    for (int n = 0; n <= 30; ++n) {
      for (int m = 0; m <= 30; ++m) {
        const PairingValue v = pair(phi(n), psi(m));
        if (!v.exact() || !(v.exact_value() == ExactScalar(n == m ? 1 : 0))) return false;
      }
    }
    return true;
  });

  record(lines, "hermitian_symmetry", "200 random poly/delta pairs", [&] {
    for (int i = 0; i < 200; ++i) {
      WeakDistribution f, g;
      for (int t = 0; t < 4; ++t) {
        f += WeakDistribution::monomial(static_cast<int>(rng() % 30), random_scalar(rng));
        g += WeakDistribution::delta(static_cast<int>(rng() % 30), random_scalar(rng));
      }
      const PairingValue fg = pair(f, g);
      const PairingValue gf = pair(g, f);
      if (!fg.exact() || !gf.exact() || !(fg.exact_value() == gf.exact_value().conj())) return false;
    }
    return true;
  });

  record(lines, "sesquilinearity", "200 random scalars and members", [&] {
    for (int i = 0; i < 200; ++i) {
      const ExactScalar c = random_scalar(rng);
      WeakDistribution f, g;
      for (int t = 0; t < 3; ++t) {
        f += WeakDistribution::monomial(static_cast<int>(rng() % 20), random_scalar(rng));
        g += WeakDistribution::delta(static_cast<int>(rng() % 20), random_scalar(rng));
      }
      const ExactScalar base = pair(f, g).exact_value();
      if (!(pair(c * f, g).exact_value() == c.conj() * base)) return false;
      if (!(pair(f, c * g).exact_value() == c * base)) return false;
    }
    return true;
  });

  record(lines, "gaussian_moment_quadrature", "alpha in {1/2,1,2}, n<=20, rel<1e-10", [] {
    const double inf = std::numeric_limits<double>::infinity();
    for (const Rational& alpha : {Rational(1, 2), Rational(1), Rational(2)}) {
      const auto g = make_gaussian(alpha);
      const double a = static_cast<double>(alpha);
      for (int n = 0; n <= 20; ++n) {
        const double closed = static_cast<double>(g->moment(n));
        const double numeric =
            integrate([&](double x) { return std::pow(x, n) * std::exp(-a * x * x); }, -inf, inf).value;
        if (closed == 0 ? std::abs(numeric) > 1e-12 : std::abs(numeric - closed) > 1e-10 * std::abs(closed)) {
          return false;
        }
      }
    }
    return true;
  });
}

void families_suite(Lines& lines, const CheckOptions& options) {
  Rng rng(options.seed + 2);

  record(lines, "ladder_raising", "b phi_k = sqrt(k+1) phi_(k+1), k<=40", [] {
    for (int k = 0; k <= 40; ++k) {
      if (apply_atom(Ladder::b, phi(k)) != ExactScalar::sqrt(k + 1) * phi(k + 1)) return false;
    }
    return true;
  });

  record(lines, "ladder_lowering", "a phi_k = sqrt(k) phi_(k-1), a phi_0 = 0, k<=40", [] {
    for (int k = 0; k <= 40; ++k) {
      const WeakDistribution expected = k == 0 ? WeakDistribution() : ExactScalar::sqrt(k) * phi(k - 1);
      if (apply_atom(Ladder::a, phi(k)) != expected) return false;
    }
    return true;
  });

  record(lines, "dual_ladder", "a_dag psi_k = sqrt(k+1) psi_(k+1), b_dag psi_k = sqrt(k) psi_(k-1), k<=40", [] {
    for (int k = 0; k <= 40; ++k) {
      if (apply_atom(Ladder::a_dag, psi(k)) != ExactScalar::sqrt(k + 1) * psi(k + 1)) return false;
      const WeakDistribution lowered = k == 0 ? WeakDistribution() : ExactScalar::sqrt(k) * psi(k - 1);
      if (apply_atom(Ladder::b_dag, psi(k)) != lowered) return false;
    }
    return true;
  });

  record(lines, "number_eigenvalues", "N phi_k = k phi_k, Ndag psi_k = k psi_k, k<=40", [] {
    for (int k = 0; k <= 40; ++k) {
      if (apply_N(phi(k)) != ExactScalar(k) * phi(k)) return false;
      if (apply_Ndag(psi(k)) != ExactScalar(k) * psi(k)) return false;
    }
    return true;
  });

  // One line per span identity, aggregated over the random spans.
  std::map<std::string, bool> ok;
  std::vector<std::string> order;
  std::string error;
  try {
    for (int i = 0; i < 200; ++i) {
      const FamilyIndexVector v = random_span(rng, i % 2 ? Basis::psi : Basis::phi, 25);
      for (const auto& r : intertwine_residuals(v)) {
        auto [it, inserted] = ok.emplace(r.identity, true);
        if (inserted) order.push_back(r.identity);
        it->second = it->second && r.residual.is_zero();
      }
    }
  } catch (const std::exception& e) {
    error = e.what();
  }
  for (const auto& name : order) {
    lines.push_back({"span_identity[" + name + "]", ok[name] && error.empty(), "100 random spans, indices<=25"});
  }
  if (!error.empty()) lines.push_back({"span_identities", false, "error: " + error});

  record(lines, "indicator_extension", "alpha_n = 1/(n!(n+1)) for n<=30, ratio test at R=10", [] {
    const auto f = make_indicator(0, 1);
    const SeriesExtension ext = s_phi_extend(*f, 30);
    for (int n = 0; n <= 30; ++n) {
      const auto& exact = ext.exact[static_cast<std::size_t>(n)];
      if (!exact || *exact != Rational(1) / (Rational(factorial(static_cast<unsigned>(n))) * (n + 1))) return false;
    }
    return ext.converges_at(10.0);
  });
}

}  // namespace

CheckReport run_checks(CheckScope scope, const CheckOptions& options) {
  CheckReport report;
  report.scope = scope;
  if (scope == CheckScope::distrib || scope == CheckScope::all) distrib_suite(report.lines, options);
  if (scope == CheckScope::pairing || scope == CheckScope::all) pairing_suite(report.lines, options);
  if (scope == CheckScope::families || scope == CheckScope::all) families_suite(report.lines, options);
  return report;
}

}  // namespace wpb
