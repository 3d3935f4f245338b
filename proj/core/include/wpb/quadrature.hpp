#pragma once

#include <functional>

namespace wpb {

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
};

/// Adaptive 61-point Gauss–Kronrod on [lo, hi]; either bound may be infinite.
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double tolerance = 1e-13);

}  // namespace wpb
