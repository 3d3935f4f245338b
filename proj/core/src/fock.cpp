#include "wpb/fock.hpp"

#include "wpb/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cstdlib>

namespace wpb {

FockSpace::FockSpace(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 0) throw InvalidArgument("Fock cutoff must be non-negative");
}

int FockSpace::index(int n1, int n2) const {
  if (!contains(n1, n2)) throw InvalidArgument("state outside the truncated Fock space");
  const int t = n1 + n2;
  return t * (t + 1) / 2 + n2;
}

std::pair<int, int> FockSpace::state(int index) const {
  if (index < 0 || index >= dim()) throw InvalidArgument("Fock index out of range");
  int t = 0;
  while ((t + 1) * (t + 2) / 2 <= index) ++t;
  const int n2 = index - t * (t + 1) / 2;
  return {t - n2, n2};
}

int FockSpace::total(int index) const {
  const auto [n1, n2] = state(index);
  return n1 + n2;
}

namespace {

RealMatrix zeros(int dim) { return RealMatrix::Constant(dim, dim, Real(0)); }

// Band-aware dense product: skips zero entries of the right factor and zero
// rows in each column of the left factor.
RealMatrix sparse_product(const RealMatrix& a, const RealMatrix& b) {
  const Eigen::Index n = a.rows();
  std::vector<std::vector<Eigen::Index>> nonzero_rows(static_cast<std::size_t>(a.cols()));
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (a(i, k) != 0) nonzero_rows[static_cast<std::size_t>(k)].push_back(i);
    }
  }
  RealMatrix c = RealMatrix::Constant(n, b.cols(), Real(0));
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    for (Eigen::Index k = 0; k < b.rows(); ++k) {
      const Real& bkj = b(k, j);
      if (bkj == 0) continue;
      for (Eigen::Index i : nonzero_rows[static_cast<std::size_t>(k)]) c(i, j) += a(i, k) * bkj;
    }
  }
  return c;
}

void require_same_space(const FockOperator& a, const FockOperator& b) {
  if (a.cutoff() != b.cutoff()) throw InvalidArgument("Fock operators live on different truncations");
}

}  // namespace

FockOperator::FockOperator(int cutoff, int degree)
    : cutoff_(cutoff), degree_(degree), re_(zeros(FockSpace(cutoff).dim())), im_(zeros(FockSpace(cutoff).dim())) {}

FockOperator::FockOperator(int cutoff, int degree, RealMatrix re, RealMatrix im)
    : cutoff_(cutoff), degree_(degree), re_(std::move(re)), im_(std::move(im)) {
  const int d = FockSpace(cutoff).dim();
  if (re_.rows() != d || re_.cols() != d || im_.rows() != d || im_.cols() != d) {
    throw InvalidArgument("matrix size does not match the Fock truncation");
  }
}

FockOperator FockOperator::identity(int cutoff) {
  FockOperator out(cutoff, 0);
  for (int i = 0; i < out.dim(); ++i) out.re_(i, i) = 1;
  return out;
}

void FockOperator::set(int row, int col, const Complex& value) {
  re_(row, col) = value.re;
  im_(row, col) = value.im;
}

FockOperator FockOperator::adjoint() const {
  RealMatrix im = -im_.transpose();
  return FockOperator(cutoff_, degree_, re_.transpose(), std::move(im));
}

FockOperator& FockOperator::operator+=(const FockOperator& o) {
  require_same_space(*this, o);
  re_ += o.re_;
  im_ += o.im_;
  degree_ = std::max(degree_, o.degree_);
  return *this;
}

FockOperator& FockOperator::operator-=(const FockOperator& o) {
  require_same_space(*this, o);
  re_ -= o.re_;
  im_ -= o.im_;
  degree_ = std::max(degree_, o.degree_);
  return *this;
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  require_same_space(a, b);
  const bool a_real = a.im_.isZero(0);
  const bool b_real = b.im_.isZero(0);
  RealMatrix re = sparse_product(a.re_, b.re_);
  RealMatrix im = RealMatrix::Constant(a.dim(), a.dim(), Real(0));
  if (!a_real && !b_real) re -= sparse_product(a.im_, b.im_);
  if (!b_real) im += sparse_product(a.re_, b.im_);
  if (!a_real) im += sparse_product(a.im_, b.re_);
  return FockOperator(a.cutoff_, a.degree_ + b.degree_, std::move(re), std::move(im));
}

FockOperator operator*(const Complex& c, const FockOperator& a) {
  RealMatrix re = a.re_ * c.re - a.im_ * c.im;
  RealMatrix im = a.re_ * c.im + a.im_ * c.re;
  return FockOperator(a.cutoff_, a.degree_, std::move(re), std::move(im));
}

FockVector FockOperator::apply(const FockVector& v) const {
  if (static_cast<int>(v.size()) != dim()) throw InvalidArgument("vector size does not match the Fock truncation");
  FockVector out(v.size());
  for (int j = 0; j < dim(); ++j) {
    if (v[j].re == 0 && v[j].im == 0) continue;
    for (int i = 0; i < dim(); ++i) {
      if (re_(i, j) == 0 && im_(i, j) == 0) continue;
      out[i] += entry(i, j) * v[j];
    }
  }
  return out;
}

Real FockOperator::max_abs_on(const SafeSubspace& safe) const {
  const FockSpace space(cutoff_);
  Real worst = 0;
  for (int j = 0; j < dim(); ++j) {
    if (!safe.contains(space.total(j))) continue;
    for (int i = 0; i < dim(); ++i) worst = std::max(worst, entry(i, j).abs());
  }
  return worst;
}

bool FockOperator::respects_degree() const {
  const FockSpace space(cutoff_);
  for (int j = 0; j < dim(); ++j) {
    for (int i = 0; i < dim(); ++i) {
      if (std::abs(space.total(i) - space.total(j)) > degree_ && (re_(i, j) != 0 || im_(i, j) != 0)) return false;
    }
  }
  return true;
}

FockOperator commutator(const FockOperator& x, const FockOperator& y) { return x * y - y * x; }

Real stacked_sigma_min(const std::vector<const FockOperator*>& ops, const SafeSubspace& safe) {
  if (ops.empty()) throw InvalidArgument("no operators to stack");
  const int cutoff = ops.front()->cutoff();
  const FockSpace space(cutoff);
  std::vector<int> cols;
  for (int j = 0; j < space.dim(); ++j) {
    if (safe.contains(space.total(j))) cols.push_back(j);
  }
  FockOperator gram(cutoff, 0);
  for (const FockOperator* op : ops) gram += op->adjoint() * *op;

  // Hermitian R + iI embedded as the real symmetric [[R, −I], [I, R]];
  // every eigenvalue appears twice.
  const auto m = static_cast<Eigen::Index>(cols.size());
  const bool real = gram.im().isZero(0);
  const Eigen::Index size = real ? m : 2 * m;
  RealMatrix embed = RealMatrix::Constant(size, size, Real(0));
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) {
      const Real& re = gram.re()(cols[r], cols[c]);
      embed(r, c) = re;
      if (!real) {
        const Real& im = gram.im()(cols[r], cols[c]);
        embed(r + m, c + m) = re;
        embed(r, c + m) = -im;
        embed(r + m, c) = im;
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(embed, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigenvalue solver did not converge");
  const Real lambda = solver.eigenvalues().minCoeff();
  return lambda > 0 ? Real(boost::multiprecision::sqrt(lambda)) : Real(0);
}

}  // namespace wpb
