#pragma once

#include "wpb/exact_scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace wpb {

/// Upper bound on polynomial degree and delta order produced by an operation.
struct OrderCap {
  int max_order = 512;
};

/// An exact, finite element of span{x^n} ⊕ span{δ^(n)}.
///
/// Both coefficient maps are sparse and never store zeros, so two values are
/// equal exactly when their maps are equal. Values are immutable once built;
/// every operation returns a new canonical value.
class WeakDistribution {
 public:
  using Coefficients = std::map<int, ExactScalar>;

  WeakDistribution() = default;
  WeakDistribution(Coefficients poly, Coefficients delta);

  static WeakDistribution monomial(int degree, ExactScalar coefficient = 1);
  static WeakDistribution delta(int order, ExactScalar coefficient = 1);

  const Coefficients& poly() const noexcept { return poly_; }
  const Coefficients& delta() const noexcept { return delta_; }

  ExactScalar poly_coefficient(int degree) const;
  ExactScalar delta_coefficient(int order) const;

  bool is_zero() const noexcept { return poly_.empty() && delta_.empty(); }
  bool has_poly() const noexcept { return !poly_.empty(); }
  bool has_delta() const noexcept { return !delta_.empty(); }
  /// Largest degree or order present, -1 for the zero distribution.
  int max_order() const noexcept;

  WeakDistribution operator-() const;
  WeakDistribution& operator+=(const WeakDistribution& o);
  WeakDistribution& operator-=(const WeakDistribution& o);
  friend WeakDistribution operator+(WeakDistribution a, const WeakDistribution& b) { return a += b; }
  friend WeakDistribution operator-(WeakDistribution a, const WeakDistribution& b) { return a -= b; }
  friend WeakDistribution operator*(const ExactScalar& c, const WeakDistribution& f);

  friend bool operator==(const WeakDistribution&, const WeakDistribution&) = default;

  /// "3*x^2 + 2i*delta^(1)"; "0" for the zero distribution.
  std::string to_string() const;

 private:
  Coefficients poly_;
  Coefficients delta_;
};

WeakDistribution add(const WeakDistribution& f, const WeakDistribution& g);
WeakDistribution scale(const ExactScalar& c, const WeakDistribution& f);

/// Multiplication by x. On deltas x·δ^(n) = −n·δ^(n−1), so x·δ = 0.
WeakDistribution apply_x(const WeakDistribution& f, OrderCap cap = {});
/// Weak derivative: x^n ↦ n·x^(n−1), δ^(n) ↦ δ^(n+1).
WeakDistribution apply_D(const WeakDistribution& f, OrderCap cap = {});

/// The four ladder atoms: a = D, b = x, a† = −D, b† = x.
enum class Ladder { a, b, a_dag, b_dag };
using OperatorWord = std::vector<Ladder>;

WeakDistribution apply_atom(Ladder atom, const WeakDistribution& f, OrderCap cap = {});
/// Applies the word right to left; the empty word is the identity.
WeakDistribution apply_word(const OperatorWord& word, const WeakDistribution& f, OrderCap cap = {});

/// (ab − ba)F − F. Zero for every F in the class.
WeakDistribution commutator_residual(const WeakDistribution& f, OrderCap cap = {});

std::string to_string(Ladder atom);

}  // namespace wpb
