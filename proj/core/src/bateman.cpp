#include "wpb/bateman.hpp"

#include "wpb/error.hpp"
#include "wpb/quadrature.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace wpb {

BatemanParams::BatemanParams(Rational m, Rational gamma, Rational k, Rational omega_sq)
    : m_(std::move(m)), gamma_(std::move(gamma)), k_(std::move(k)), omega_sq_(std::move(omega_sq)) {}

BatemanParams BatemanParams::create(const Rational& m, const Rational& gamma, const Rational& k) {
  if (m <= 0 || gamma < 0 || k <= 0) {
    throw InvalidArgument("Bateman parameters need m > 0, gamma >= 0, k > 0");
  }
  Rational omega_sq = k / m - gamma * gamma / (4 * m * m);
  if (omega_sq <= 0) {
    throw InvalidArgument("omega^2 = k/m - gamma^2/(4m^2) = " + wpb::to_string(omega_sq) +
                          " is not positive; the critically damped and overdamped cases are not supported");
  }
  return BatemanParams(m, gamma, k, std::move(omega_sq));
}

Real BatemanParams::omega() const { return boost::multiprecision::sqrt(to_real(omega_sq_)); }

BosonicModes build_bosonic(int cutoff) {
  if (cutoff < 2) throw InvalidArgument("build_bosonic needs T >= 2");
  const FockSpace space(cutoff);
  FockOperator a1(cutoff, 1), a2(cutoff, 1);
  for (int j = 0; j < space.dim(); ++j) {
    const auto [n1, n2] = space.state(j);
    if (n1 > 0) a1.set(space.index(n1 - 1, n2), j, Complex(boost::multiprecision::sqrt(Real(n1))));
    if (n2 > 0) a2.set(space.index(n1, n2 - 1), j, Complex(boost::multiprecision::sqrt(Real(n2))));
  }
  return {std::move(a1), std::move(a2)};
}

PseudoBosonicModes build_pb(const BatemanParams& /*params*/, int cutoff) {
  if (cutoff < 3) throw InvalidArgument("build_pb needs T >= 3");
  const auto [a1, a2] = build_bosonic(cutoff);
  const FockOperator a1d = a1.adjoint();
  const FockOperator a2d = a2.adjoint();
  const Complex h(Real(1) / boost::multiprecision::sqrt(Real(2)));
  return {h * (a1 - a2d), h * (a2 - a1d), h * (a1d + a2), h * (a1 + a2d)};
}

namespace {

Complex damping_factor(const BatemanParams& params) {
  return Complex(Real(0), to_real(params.gamma() / (2 * params.m())));
}

void require_hamiltonian_cutoff(int cutoff) {
  if (cutoff < 4) throw InvalidArgument("Hamiltonian construction needs T >= 4");
}

}  // namespace

FockOperator hamiltonian_bosonic(const BatemanParams& params, int cutoff) {
  require_hamiltonian_cutoff(cutoff);
  const auto [a1, a2] = build_bosonic(cutoff);
  const FockOperator a1d = a1.adjoint();
  const FockOperator a2d = a2.adjoint();
  const Complex w(params.omega());
  return w * (a1d * a1 - a2d * a2) + damping_factor(params) * (a1 * a2 - a1d * a2d);
}

FockOperator hamiltonian_pb(const BatemanParams& params, int cutoff) {
  require_hamiltonian_cutoff(cutoff);
  const auto pb = build_pb(params, cutoff);
  const FockOperator n1 = pb.B1 * pb.A1;
  const FockOperator n2 = pb.B2 * pb.A2;
  const Complex w(params.omega());
  return w * (n1 - n2) + damping_factor(params) * (n1 + n2 + FockOperator::identity(cutoff));
}

FockVector diagonal_sum_state(int cutoff, int top) {
  const FockSpace space(cutoff);
  if (top < 0 || 2 * top > cutoff) throw InvalidArgument("diagonal state exceeds the truncation");
  FockVector v(static_cast<std::size_t>(space.dim()));
  for (int n = 0; n <= top; ++n) v[static_cast<std::size_t>(space.index(n, n))] = Complex(1.0);
  return v;
}

std::vector<KernelScanRow> joint_kernel_scan(const BatemanParams& params, const std::vector<int>& cutoffs) {
  std::vector<KernelScanRow> rows;
  for (int cutoff : cutoffs) {
    if (cutoff < 4) throw InvalidArgument("kernel scan needs T >= 4");
    const auto pb = build_pb(params, cutoff);
    const FockOperator b1d = pb.B1.adjoint();
    const FockOperator b2d = pb.B2.adjoint();
    const SafeSubspace safe{cutoff - 1};
    KernelScanRow row;
    row.cutoff = cutoff;
    row.sigma_pair_a = stacked_sigma_min({&pb.A1, &pb.A2}, safe);
    row.sigma_single_a1 = stacked_sigma_min({&pb.A1}, safe);
    row.sigma_pair_bdag = stacked_sigma_min({&b1d, &b2d}, safe);
    row.sigma_single_b1dag = stacked_sigma_min({&b1d}, safe);
    rows.push_back(std::move(row));
  }
  return rows;
}

int Poly2::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) {
    if (c != 0) d = std::max(d, e.first + e.second);
  }
  return d;
}

std::string Poly2::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << '(' << wpb::to_string(c) << ')';
    if (e.first > 0) out << "*x1^" << e.first;
    if (e.second > 0) out << "*x2^" << e.second;
  }
  return first ? "0" : out.str();
}

std::string to_string(Vacuum v) { return v == Vacuum::phi00 ? "phi00" : "psi00"; }

namespace {

using Terms = std::map<std::pair<int, int>, Rational>;

void accumulate(Terms& out, int i, int j, const Rational& c) {
  if (c == 0) return;
  out[{i, j}] += c;
}

// x_k · p
Terms times_x(const Terms& p, int k) {
  Terms out;
  for (const auto& [e, c] : p) accumulate(out, e.first + (k == 1), e.second + (k == 2), c);
  return out;
}

// Polynomial q with ∂_k (p·G) = q·G for the Gaussian G = exp(−(x1²+x2²)/2).
Terms gaussian_derivative(const Terms& p, int k) {
  Terms out;
  for (const auto& [e, c] : p) {
    const int n = k == 1 ? e.first : e.second;
    if (n > 0) accumulate(out, e.first - (k == 1), e.second - (k == 2), c * n);
    accumulate(out, e.first + (k == 1), e.second + (k == 2), -c);
  }
  return out;
}

// Restriction of p to the line x1 = x + s1, x2 = sign·x + s2, as a univariate
// rational polynomial in x.
std::vector<Rational> restrict_to_line(const Terms& p, const Rational& s1, int sign, const Rational& s2) {
  int top = 0;
  for (const auto& [e, c] : p) top = std::max(top, e.first + e.second);
  std::vector<Rational> out(static_cast<std::size_t>(top + 1), Rational(0));
  auto binom = [](int n, int r) {
    Integer b = 1;
    for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return Rational(b);
  };
  auto power = [](const Rational& q, int n) {
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= q;
    return r;
  };
  for (const auto& [e, c] : p) {
    const auto [i, j] = e;
    for (int r = 0; r <= i; ++r) {
      const Rational left = binom(i, r) * power(s1, i - r);
      for (int t = 0; t <= j; ++t) {
        const Rational right = binom(j, t) * power(s2, j - t) * (sign < 0 && t % 2 ? -1 : 1);
        out[static_cast<std::size_t>(r + t)] += c * left * right;
      }
    }
  }
  return out;
}

}  // namespace

std::complex<double> weak_vacuum_residual(const BatemanParams& params, Vacuum which, const Poly2& p, int j,
                                          const Rational& shift) {
  if (j != 1 && j != 2) throw InvalidArgument("mode index must be 1 or 2");
  if (p.degree() > 8) throw InvalidArgument("vacuum test functions support polynomial weights of degree <= 8 only");
  const Terms& base = p.terms;

  const double mw = static_cast<double>(params.m()) * static_cast<double>(params.omega());
  const double c = std::sqrt(mw / 2.0);
  const double d = 1.0 / std::sqrt(2.0 * mw);

  // Coefficients of (x1 p, x2 p, D1 p, D2 p) in the operator acting on f,
  // where a_k = c x_k + d ∂_k and a_k† = c x_k − d ∂_k.
  double w[4];
  const double h = 1.0 / std::sqrt(2.0);
  if (which == Vacuum::phi00) {
    // ⟨A_j δ, f⟩ = ∫ (A_j† f) on the diagonal.
    if (j == 1) {  // A1† = (a1† − a2)/√2
      w[0] = c, w[1] = -c, w[2] = -d, w[3] = -d;
    } else {  // A2† = (−a1 + a2†)/√2
      w[0] = -c, w[1] = c, w[2] = -d, w[3] = -d;
    }
  } else {
    // ⟨B_j† δ, f⟩ = ∫ (B_j f) on the anti-diagonal.
    if (j == 1) {  // B1 = (a1† + a2)/√2
      w[0] = c, w[1] = c, w[2] = -d, w[3] = d;
    } else {  // B2 = (a1 + a2†)/√2
      w[0] = c, w[1] = c, w[2] = d, w[3] = -d;
    }
  }

  const Rational s1 = which == Vacuum::phi00 ? shift : Rational(0);
  const Rational s2 = which == Vacuum::phi00 ? Rational(0) : Rational(-shift);
  const int sign = which == Vacuum::phi00 ? 1 : -1;

  const Terms parts[4] = {times_x(base, 1), times_x(base, 2), gaussian_derivative(base, 1),
                          gaussian_derivative(base, 2)};
  std::vector<double> q;
  for (int k = 0; k < 4; ++k) {
    const auto line = restrict_to_line(parts[k], s1, sign, s2);
    if (q.size() < line.size()) q.resize(line.size(), 0.0);
    for (std::size_t n = 0; n < line.size(); ++n) q[n] += h * w[k] * static_cast<double>(line[n]);
  }

  const double a1 = static_cast<double>(s1);
  const double a2 = static_cast<double>(s2);
  auto integrand = [&](double x) {
    double poly = 0;
    for (std::size_t n = q.size(); n-- > 0;) poly = poly * x + q[n];
    const double x1 = x + a1;
    const double x2 = sign * x + a2;
    return poly * std::exp(-(x1 * x1 + x2 * x2) / 2.0);
  };
  const double inf = std::numeric_limits<double>::infinity();
  return {integrate(integrand, -inf, inf).value, 0.0};
}

std::vector<Poly2> vacuum_battery() {
  using P = Poly2;
  return {
      P{{{0, 0}, 1}},
      P{{{1, 0}, 1}},
      P{{{0, 1}, 1}},
      P{{{1, 1}, 1}},
      P{{{2, 0}, 1}, {{0, 2}, -1}},
      P{{{2, 1}, 1}},
      P{{{3, 0}, 2}, {{0, 0}, Rational(-1, 3)}},
      P{{{2, 2}, 1}, {{1, 0}, 5}},
      P{{{4, 1}, Rational(1, 2)}, {{0, 3}, 3}},
      P{{{3, 3}, 1}, {{6, 0}, -1}},
      P{{{0, 7}, 1}, {{1, 1}, 2}},
      P{{{4, 4}, 1}, {{8, 0}, Rational(1, 5)}, {{0, 0}, 1}},
  };
}

VacuumBatteryResult run_vacuum_battery(const BatemanParams& params, Vacuum which, const Rational& shift) {
  VacuumBatteryResult out;
  for (const Poly2& p : vacuum_battery()) {
    double worst = 0;
    for (int j = 1; j <= 2; ++j) worst = std::max(worst, std::abs(weak_vacuum_residual(params, which, p, j, shift)));
    out.residuals.push_back(worst);
    out.max_residual = std::max(out.max_residual, worst);
  }
  return out;
}

}  // namespace wpb
