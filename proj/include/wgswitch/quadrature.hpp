#pragma once

#include <functional>

namespace wgswitch {

/// Adaptive Gauss-Kronrod (15/31 point) integral of f over [a, b] to the
/// requested relative tolerance. Infinite-free, finite bounds only.
double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-12);

}  // namespace wgswitch
