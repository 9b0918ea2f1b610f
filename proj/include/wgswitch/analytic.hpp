#pragma once

// Exact solution of the step-sech coupler: Omega(z) = Omega0 sech(z/L) with
// a mismatch that flips from +Delta0 to -Delta0 at z = 0.
//
// With alpha = Omega0 L and gamma = 1/2 + i Delta0 L / 2, the half-line
// propagator from z = -inf to z = 0 is
//
//   U(1/2, 0) = [[a, -b*], [b, a*]],
//   a = F(alpha, -alpha; gamma; 1/2),
//   b = -i alpha / (2 gamma) F(1 + alpha, 1 - alpha; 1 + gamma; 1/2),
//
// evaluated here through the Gamma-product form
//
//   a =      sqrt(pi) 2^-gamma Gamma(gamma) (xi + eta)
//   b = -i   sqrt(pi) 2^-gamma Gamma(gamma) (xi - eta)
//   xi  = 1 / [Gamma(1/4 + alpha/2 + i dL/4) Gamma(3/4 - alpha/2 + i dL/4)]
//   eta = 1 / [Gamma(3/4 + alpha/2 + i dL/4) Gamma(1/4 - alpha/2 + i dL/4)]
//
// and cross-checked against direct 2F1 summation on every call. The mismatch
// here is the splitting of the HalfDelta convention (diagonal -D/2, +D/2).

#include "wgswitch/linalg.hpp"

namespace wgswitch {

struct StepSechParams {
  double alpha = 0.0;    // Omega0 L
  double delta_l = 0.0;  // Delta0 L

  /// Throws ConfigError unless alpha >= 0, delta_l >= 0, both finite.
  static StepSechParams make(double alpha, double delta_l);
  [[nodiscard]] Complex gamma() const { return {0.5, 0.5 * delta_l}; }
};

struct HalfPropagatorEntries {
  Complex a;
  Complex b;
  Complex xi;
  Complex eta;
};

/// Maximum disagreement tolerated between the Gamma-product and the direct
/// 2F1 evaluation of a and b.
inline constexpr double kCrossValidationTol = 1e-9;

/// a, b via the Gamma products, validated against direct 2F1 summation.
/// Throws NumericalError if the two routes disagree beyond kCrossValidationTol.
HalfPropagatorEntries half_propagator_entries(const StepSechParams& p);

/// a, b via direct 2F1 summation only (no Gamma products).
HalfPropagatorEntries half_propagator_entries_direct(const StepSechParams& p);

/// U(1/2, 0) = [[a, -b*], [b, a*]], from z = -inf to z = 0.
Propagator2 half_propagator(const StepSechParams& p);

/// U(1, 1/2) = [[a, -b], [b*, a*]], from z = 0 to z = +inf.
Propagator2 second_half_propagator(const StepSechParams& p);

/// U(1, 0) = [[a^2 - b^2, -2 Re(a b*)], [2 Re(a b*), (a^2 - b^2)*]].
Propagator2 full_propagator(const StepSechParams& p);

/// phi = 2 arg[Gamma(1/4 - alpha/2 - i dL/4) Gamma(1/4 + alpha/2 + i dL/4)],
/// principal value in (-2 pi, 2 pi]. Throws PoleError on a Gamma pole.
double phase_phi(const StepSechParams& p);
/// Same, allowing a signed delta_l.
double phase_phi(double alpha, double delta_l);

/// I2 = [sech(pi dL / 2) Im(e^{i phi} cos(pi alpha + i pi dL / 2))]^2,
/// cross-checked against |2 Re(a b*)|^2 (used directly where phi hits a
/// pole). Throws NumericalError if the routes disagree by more than 1e-9 or
/// the value leaves [0, 1 + 1e-9].
double intensity_closed_form(const StepSechParams& p);

struct AsymptoticEstimate {
  double value = 0.0;
  bool in_regime = false;  // alpha / delta_l >= kAsymptoticRegimeRatio
};

inline constexpr double kAsymptoticRegimeRatio = 5.0;

/// Large-coupling estimate
///   I2 ~ alpha^2 / (alpha^2 + dL^2) [1 - (2 dL / alpha) e^{-pi dL / 2} cos(pi alpha / 2)]^2
/// with the second-order remainder dropped. Not clamped to [0, 1].
AsymptoticEstimate intensity_asymptotic(const StepSechParams& p);

}  // namespace wgswitch
