#include "wgswitch/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace wgswitch {

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  if (a == b) return 0.0;
  constexpr unsigned kMaxDepth = 30;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, kMaxDepth, rel_tol);
}

}  // namespace wgswitch
