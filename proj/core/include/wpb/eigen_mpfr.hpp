#pragma once

// Eigen scalar traits for wpb::Real (MPFR, expression templates off).

#include "wpb/numeric.hpp"

#include <Eigen/Core>

#include <limits>

namespace Eigen {

template <>
struct NumTraits<wpb::Real> : GenericNumTraits<wpb::Real> {
  using Real = wpb::Real;
  using NonInteger = wpb::Real;
  using Nested = wpb::Real;
  using Literal = wpb::Real;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 10,
    MulCost = 40
  };

  static Real epsilon() { return std::numeric_limits<Real>::epsilon(); }
  static Real dummy_precision() { return 1000 * epsilon(); }
  static Real highest() { return std::numeric_limits<Real>::max(); }
  static Real lowest() { return std::numeric_limits<Real>::lowest(); }
  static Real infinity() { return std::numeric_limits<Real>::infinity(); }
  static Real quiet_NaN() { return std::numeric_limits<Real>::quiet_NaN(); }
  static int digits10() { return static_cast<int>(Real::default_precision()); }
};

}  // namespace Eigen
