#pragma once

#include "wpb/eigen_mpfr.hpp"
#include "wpb/numeric.hpp"

#include <utility>
#include <vector>

namespace wpb {

/// Two-mode Fock basis {|n1, n2⟩ : n1 + n2 ≤ T}, ordered by total quanta.
class FockSpace {
 public:
  explicit FockSpace(int cutoff);

  int cutoff() const noexcept { return cutoff_; }
  int dim() const noexcept { return (cutoff_ + 1) * (cutoff_ + 2) / 2; }
  /// Index of |n1, n2⟩; the state must lie inside the truncation.
  int index(int n1, int n2) const;
  std::pair<int, int> state(int index) const;
  int total(int index) const;
  bool contains(int n1, int n2) const noexcept {
    return n1 >= 0 && n2 >= 0 && n1 + n2 <= cutoff_;
  }

 private:
  int cutoff_;
};

/// States with at most `t_max` total quanta. On them, products of truncated
/// operators with total degree ≤ T − t_max agree with the untruncated algebra.
struct SafeSubspace {
  int t_max = 0;
  bool contains(int total) const noexcept { return total <= t_max; }
};

using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using FockVector = std::vector<Complex>;

/// Dense complex operator on a truncated two-mode Fock space, stored as real
/// and imaginary parts. `degree` bounds how far one application moves the
/// total quanta, and the band structure honours it.
class FockOperator {
 public:
  FockOperator(int cutoff, int degree);
  FockOperator(int cutoff, int degree, RealMatrix re, RealMatrix im);

  static FockOperator identity(int cutoff);

  int cutoff() const noexcept { return cutoff_; }
  int degree() const noexcept { return degree_; }
  int dim() const noexcept { return static_cast<int>(re_.rows()); }
  const RealMatrix& re() const noexcept { return re_; }
  const RealMatrix& im() const noexcept { return im_; }
  Complex entry(int row, int col) const { return {re_(row, col), im_(row, col)}; }
  void set(int row, int col, const Complex& value);

  FockOperator adjoint() const;

  FockOperator& operator+=(const FockOperator& o);
  FockOperator& operator-=(const FockOperator& o);
  friend FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
  friend FockOperator operator-(FockOperator a, const FockOperator& b) { return a -= b; }
  friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator*(const Complex& c, const FockOperator& a);

  FockVector apply(const FockVector& v) const;

  /// Largest entry modulus over the columns of states inside `safe`.
  Real max_abs_on(const SafeSubspace& safe) const;
  Real max_abs() const { return max_abs_on(SafeSubspace{cutoff_}); }
  /// True when every entry between states whose totals differ by more than
  /// `degree` vanishes.
  bool respects_degree() const;

 private:
  int cutoff_;
  int degree_;
  RealMatrix re_;
  RealMatrix im_;
};

FockOperator commutator(const FockOperator& x, const FockOperator& y);

/// Smallest singular value of the stacked operator [X_1; X_2; ...] on vectors
/// supported in `safe`, i.e. √λ_min(P (Σ X_i† X_i) P).
Real stacked_sigma_min(const std::vector<const FockOperator*>& ops, const SafeSubspace& safe);

}  // namespace wpb
