#include "wpb/bateman.hpp"
#include "wpb/error.hpp"
#include "wpb/random_members.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace wpb;

namespace {

BatemanParams standard() { return BatemanParams::create(1, Rational(1, 2), 1); }

double dbl(const Real& x) { return static_cast<double>(x); }

FockVector basis_vector(const FockSpace& s, int n1, int n2) {
  FockVector v(static_cast<std::size_t>(s.dim()));
  v[static_cast<std::size_t>(s.index(n1, n2))] = Complex(1.0);
  return v;
}

}  // namespace

TEST(FockSpace, IndexingRoundTrip) {
  for (int T : {0, 1, 4, 9}) {
    const FockSpace s(T);
    EXPECT_EQ(s.dim(), (T + 1) * (T + 2) / 2);
    for (int i = 0; i < s.dim(); ++i) {
      const auto [n1, n2] = s.state(i);
      EXPECT_EQ(s.index(n1, n2), i);
      EXPECT_LE(n1 + n2, T);
    }
  }
  EXPECT_THROW(FockSpace(3).index(2, 2), InvalidArgument);
  EXPECT_THROW(FockSpace(-1), InvalidArgument);
}

TEST(Bosonic, LadderEntries) {
  PrecisionScope scope(34);
  const int T = 6;
  const FockSpace s(T);
  const auto [a1, a2] = build_bosonic(T);
  EXPECT_EQ(a1.degree(), 1);
  for (int n = 0; n <= T; ++n) {
    for (const auto& c : a1.apply(basis_vector(s, 0, n))) EXPECT_EQ(c.abs(), 0);
  }
  const FockVector out = a2.adjoint().apply(basis_vector(s, 1, 1));
  EXPECT_NEAR(dbl(out[s.index(1, 2)].re), std::sqrt(2.0), 1e-30);
  EXPECT_TRUE(a1.respects_degree());
  EXPECT_TRUE(a2.adjoint().respects_degree());
  EXPECT_THROW(build_bosonic(1), InvalidArgument);
}

TEST(Bosonic, CanonicalCommutationOnSafeSubspace) {
  PrecisionScope scope(34);
  for (int T = 2; T <= 16; T += 2) {
    const auto [a1, a2] = build_bosonic(T);
    const FockOperator* modes[2] = {&a1, &a2};
    const SafeSubspace safe{T - 2};
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        FockOperator c = commutator(*modes[j], modes[k]->adjoint());
        if (j == k) c -= FockOperator::identity(T);
        EXPECT_LT(c.max_abs_on(safe), 1e-12) << "T=" << T << " j=" << j << " k=" << k;
        EXPECT_EQ(c.degree(), 2);
      }
    }
    // Outside the safe subspace the truncation shows up.
    FockOperator top = commutator(a1, a1.adjoint()) - FockOperator::identity(T);
    EXPECT_GT(top.max_abs(), 0.5);
  }
}

TEST(PseudoBosonic, CommutationRelations) {
  PrecisionScope scope(34);
  const int T = 8;
  const auto pb = build_pb(standard(), T);
  const FockOperator* A[2] = {&pb.A1, &pb.A2};
  const FockOperator* B[2] = {&pb.B1, &pb.B2};
  const SafeSubspace safe{T - 2};
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      FockOperator c = commutator(*A[j], *B[k]);
      if (j == k) c -= FockOperator::identity(T);
      EXPECT_LT(c.max_abs_on(safe), 1e-12) << j << k;
    }
  }
  EXPECT_LT(commutator(pb.A1, pb.A2).max_abs_on(safe), 1e-12);
  EXPECT_LT(commutator(pb.B1, pb.B2).max_abs_on(safe), 1e-12);
  EXPECT_LT(commutator(pb.A1, pb.B2).max_abs_on(safe), 1e-12);
  EXPECT_LT(commutator(pb.A2, pb.B1).max_abs_on(safe), 1e-12);
  EXPECT_THROW(build_pb(standard(), 2), InvalidArgument);
}

TEST(PseudoBosonic, BIsNotTheAdjointOfA) {
  PrecisionScope scope(34);
  const auto pb = build_pb(standard(), 8);
  EXPECT_GT((pb.B1 - pb.A1.adjoint()).max_abs(), 0.9);
  EXPECT_GT((pb.B2 - pb.A2.adjoint()).max_abs(), 0.9);
  // They are adjoint to each other instead.
  EXPECT_EQ((pb.B1.adjoint() - pb.B2).max_abs(), 0);
}

TEST(PseudoBosonic, DiagonalSumState) {
  PrecisionScope scope(34);
  const int T = 9;
  const FockSpace s(T);
  const auto pb = build_pb(standard(), T);
  for (int N = 0; N <= 4; ++N) {
    const FockVector out = pb.A1.apply(diagonal_sum_state(T, N));
    for (int i = 0; i < s.dim(); ++i) {
      const double expected = i == s.index(N, N + 1) ? -std::sqrt((N + 1) / 2.0) : 0.0;
      EXPECT_NEAR(dbl(out[i].re), expected, 1e-30) << "N=" << N << " i=" << i;
      EXPECT_EQ(out[i].im, 0);
    }
    // Normalised: ‖A1 v‖ = 1/√2
    const double norm = std::sqrt((N + 1) / 2.0) / std::sqrt(N + 1.0);
    EXPECT_NEAR(norm, 1 / std::sqrt(2.0), 1e-15);
  }
}

TEST(Hamiltonian, TwoFormsAgreeOnSafeSubspace) {
  PrecisionScope scope(34);
  Rng rng(7);
  std::vector<BatemanParams> params = {standard()};
  for (int i = 0; i < 5; ++i) params.push_back(random_bateman_params(rng));
  for (const auto& p : params) {
    const FockOperator diff = hamiltonian_bosonic(p, 8) - hamiltonian_pb(p, 8);
    EXPECT_LT(diff.max_abs_on(SafeSubspace{6}), 1e-12) << to_string(p.m()) << " " << to_string(p.gamma());
    EXPECT_EQ(hamiltonian_pb(p, 8).degree(), 2);
  }
  EXPECT_THROW(hamiltonian_bosonic(standard(), 3), InvalidArgument);
}

TEST(Hamiltonian, UndampedLimitIsDiagonal) {
  PrecisionScope scope(34);
  const auto p = BatemanParams::create(2, 0, 8);  // ω = 2
  const int T = 6;
  const FockSpace s(T);
  const FockOperator H = hamiltonian_pb(p, T);
  for (int i = 0; i < s.dim(); ++i) {
    const auto [n1, n2] = s.state(i);
    if (n1 + n2 > T - 2) continue;
    for (int r = 0; r < s.dim(); ++r) {
      const double expected = r == i ? 2.0 * (n1 - n2) : 0.0;
      EXPECT_NEAR(dbl(H.entry(r, i).re), expected, 1e-25);
      EXPECT_NEAR(dbl(H.entry(r, i).im), 0.0, 1e-25);
    }
  }
}

TEST(Hamiltonian, SelfAdjointWhileNumberOperatorsAreNot) {
  // i(a1a2 − a1†a2†) is Hermitian, so H itself is (and is therefore normal);
  // the pseudo-bosonic number operators B_jA_j are not.
  PrecisionScope scope(34);
  const int T = 8;
  const SafeSubspace safe{T - 2};
  const FockOperator H = hamiltonian_pb(standard(), T);
  EXPECT_LT((H - H.adjoint()).max_abs_on(SafeSubspace{T - 4}), 1e-12);
  const FockOperator Hd = H.adjoint();
  EXPECT_LT((H * Hd - Hd * H).max_abs_on(SafeSubspace{T - 4}), 1e-12);
  const auto pb = build_pb(standard(), T);
  const FockOperator N1 = pb.B1 * pb.A1;
  EXPECT_GT((N1 - N1.adjoint()).max_abs_on(safe), 0.4);
  // The damping term carries the imaginary part.
  EXPECT_GT(H.im().cwiseAbs().maxCoeff(), 0.1);
}

TEST(Params, OmegaGuard) {
  const auto p = standard();
  EXPECT_EQ(p.omega_squared(), Rational(15, 16));
  EXPECT_NEAR(dbl(p.omega()), std::sqrt(15.0) / 4, 1e-15);
  EXPECT_THROW(BatemanParams::create(1, 2, 1), InvalidArgument);  // ω² = 0
  EXPECT_THROW(BatemanParams::create(1, 3, 1), InvalidArgument);  // ω² < 0
  EXPECT_THROW(BatemanParams::create(0, 1, 1), InvalidArgument);
  EXPECT_THROW(BatemanParams::create(1, 1, -1), InvalidArgument);
}

TEST(KernelScan, MatchesFrozenEigensolve) {
  // σ_min values from an independent double-precision eigensolve of the
  // stacked Gram matrix on n1 + n2 <= T − 1.
  PrecisionScope scope(34);
  const std::vector<int> Ts = {4, 5, 6, 7, 8, 9, 10, 11, 12};
  const double pair[] = {0.7653668647301795, 0.6448058287449633, 0.6448058287449633, 0.5679328213965029,
                         0.5679328213965029, 0.5133812615572766, 0.5133812615572766, 0.4720663133281812,
                         0.4720663133281812};
  const double single[] = {0.541196100146197,   0.4559465740541753,  0.4559465740541753,
                           0.40158914926787564, 0.40158914926787564, 0.36301537138125484,
                           0.36301537138125484, 0.33380129132409064, 0.33380129132409064};
  const auto rows = joint_kernel_scan(standard(), Ts);
  ASSERT_EQ(rows.size(), Ts.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].cutoff, Ts[i]);
    EXPECT_NEAR(dbl(rows[i].sigma_pair_a), pair[i], 1e-12) << Ts[i];
    EXPECT_NEAR(dbl(rows[i].sigma_single_a1), single[i], 1e-12) << Ts[i];
    EXPECT_NEAR(dbl(rows[i].sigma_pair_bdag), pair[i], 1e-12) << Ts[i];
    EXPECT_GT(dbl(rows[i].sigma_pair_a), 0.1);
    EXPECT_LT(rows[i].sigma_single_a1, rows[i].sigma_pair_a);
  }
  // T = 4 closed form: 2 sin(π/8).
  EXPECT_NEAR(dbl(rows[0].sigma_pair_a), 2 * std::sin(std::acos(-1.0) / 8), 1e-15);
  EXPECT_THROW(joint_kernel_scan(standard(), {3}), InvalidArgument);
}

TEST(WeakVacuum, PureGaussian) {
  for (const Vacuum v : {Vacuum::phi00, Vacuum::psi00}) {
    for (int j = 1; j <= 2; ++j) EXPECT_LT(std::abs(weak_vacuum_residual(standard(), v, Poly2{{{0, 0}, 1}}, j)), 1e-10);
  }
}

TEST(WeakVacuum, CubicWeight) {
  const Poly2 p{{{2, 1}, 1}};
  for (const Vacuum v : {Vacuum::phi00, Vacuum::psi00}) {
    for (int j = 1; j <= 2; ++j) EXPECT_LT(std::abs(weak_vacuum_residual(standard(), v, p, j)), 1e-8);
  }
}

TEST(WeakVacuum, BatteryForBothCandidates) {
  const auto battery = vacuum_battery();
  ASSERT_EQ(battery.size(), 12u);
  for (const auto& p : battery) EXPECT_LE(p.degree(), 8);
  for (const Vacuum v : {Vacuum::phi00, Vacuum::psi00}) {
    EXPECT_LT(run_vacuum_battery(standard(), v).max_residual, 1e-8) << to_string(v);
  }
}

TEST(WeakVacuum, ShiftedDiagonalIsRejected) {
  // For p = 1 and A1 the total-derivative part integrates to zero and what is
  // left is c·ε/√2 · ∫ exp(−((x+ε)² + x²)/2) dx = c·ε/√2 · √π · e^{−ε²/4}.
  const auto p = standard();
  const double eps = 0.1;
  const double c = std::sqrt(dbl(p.omega()) / 2);
  const double expected = c * eps / std::sqrt(2.0) * std::sqrt(std::acos(-1.0)) * std::exp(-eps * eps / 4);
  const auto r = weak_vacuum_residual(p, Vacuum::phi00, Poly2{{{0, 0}, 1}}, 1, Rational(1, 10));
  EXPECT_NEAR(r.real(), expected, 1e-12);
  EXPECT_GT(run_vacuum_battery(p, Vacuum::phi00, Rational(1, 10)).max_residual, 1e-3);
  EXPECT_GT(run_vacuum_battery(p, Vacuum::psi00, Rational(1, 10)).max_residual, 1e-3);
}

TEST(WeakVacuum, UnsupportedForms) {
  EXPECT_THROW(weak_vacuum_residual(standard(), Vacuum::phi00, Poly2{{{5, 4}, 1}}, 1), InvalidArgument);
  EXPECT_THROW(weak_vacuum_residual(standard(), Vacuum::phi00, Poly2{{{0, 0}, 1}}, 3), InvalidArgument);
}
