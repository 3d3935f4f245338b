#include "wpb/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace wpb {

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi, double tolerance) {
  QuadratureResult out;
  out.value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 20, tolerance,
                                                                           &out.error_estimate);
  return out;
}

}  // namespace wpb
