#pragma once

// Complex special functions: log-gamma, gamma, reciprocal gamma and the Gauss
// hypergeometric function 2F1 on [0, 1).

#include <complex>

namespace wgswitch {

using Complex = std::complex<double>;

namespace numkernel {

/// Principal branch of ln Gamma(z): the analytic continuation of the real
/// log-gamma from the positive axis, with the branch cut on the negative
/// real axis approached from above.
///
/// Lanczos (g = 7, 9 terms) for Re z >= 1/2, reflection otherwise.
/// Throws PoleError when z is a non-positive integer.
Complex complex_log_gamma(Complex z);

/// Gamma(z) = exp(complex_log_gamma(z)). Throws PoleError at poles and
/// OverflowError when the result is not representable.
Complex complex_gamma(Complex z);

/// 1 / Gamma(z). Entire: returns exactly zero at the poles of Gamma.
Complex reciprocal_gamma(Complex z);

/// sin(pi z) with exact argument reduction of Re z.
Complex sin_pi(Complex z);

/// Gauss hypergeometric function F(a, b; c; t) for real t in [0, 1).
///
/// t <= 1/2 sums the power series directly; t > 1/2 maps to 1 - t with the
/// standard two-term connection formula. Series whose terms grow far above
/// the final value are re-summed in extended precision.
///
/// Throws DegenerateParameterError if c is a non-positive integer (or, for
/// t > 1/2, if c - a - b is an integer), ConfigError if t is outside [0, 1)
/// and NonConvergenceError past the 10 000-term cap.
Complex hyp2f1(Complex a, Complex b, Complex c, double t);

inline constexpr int kSeriesTermCap = 10000;

}  // namespace numkernel
}  // namespace wgswitch
